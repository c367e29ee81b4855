#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "clext/types.hpp"

namespace clext {

/// Parameters of one C_lambda-extended oscillator algebra.
///
/// `kappa` holds kappa_1..kappa_{lambda-1} (complex, kappa*_mu = kappa_{lambda-mu}),
/// `alpha` holds alpha_0..alpha_{lambda-1} (real, zero sum). `beta` and `gamma`
/// are derived: beta_mu = alpha_0 + ... + alpha_{mu-1}, gamma_mu = beta_mu + alpha_mu / 2.
/// Construct through from_kappa() or from_alpha(); those keep all four in sync.
struct AlgebraSpec {
    std::size_t lambda = 2;
    std::vector<Complex> kappa;
    std::vector<Real> alpha;
    std::vector<Real> beta;
    std::vector<Real> gamma;

    Real alpha_at(long long mu) const { return alpha[cyc(mu, lambda)]; }
    Real beta_at(long long mu) const { return beta[cyc(mu, lambda)]; }
    Real gamma_at(long long mu) const { return gamma[cyc(mu, lambda)]; }
};

AlgebraSpec from_kappa(std::size_t lambda, const std::vector<Complex>& kappa);
AlgebraSpec from_alpha(std::size_t lambda, const std::vector<Real>& alpha);

/// F(n) = n + beta_{n mod lambda}.
Real structure_function(const AlgebraSpec& spec, std::size_t n);

/// E_n = n + 1/2 + gamma_{n mod lambda}, the closed-form spectrum of H0.
Real energy_level(const AlgebraSpec& spec, std::size_t n);

enum class RepKind { FiniteDim, BoundedFromBelow };

struct RepClass {
    RepKind kind = RepKind::BoundedFromBelow;
    std::optional<std::size_t> dim;  // only for FiniteDim
    std::vector<Real> witnesses;     // F(1)..F(lambda-1)
};

/// Decides which Fock representation the parameters admit. F values within
/// kConstraintTol of zero count as zero. Throws NonUnitary when a negative
/// F(mu) shows up before any zero.
RepClass classify(const AlgebraSpec& spec);

bool is_bounded_from_below(const AlgebraSpec& spec);

}  // namespace clext
