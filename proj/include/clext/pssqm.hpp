#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "clext/spectrum.hpp"

namespace clext {

// Parasupersymmetric quantum mechanics of order p = lambda - 1, realized with
// the supercharge Q = sum_{nu=1..p} eta_{mu+nu} adag P_{mu+nu} and the shifted
// Hamiltonian H = {adag, a}/2 + (1/2) sum_nu r_nu P_nu.
//
// eta vectors have p entries: eta[k] is the coefficient of sector mu+k+1.

/// A solved bosonization: sector mu is the one Q annihilates.
struct PssqmConfig {
    std::size_t p = 1;
    std::size_t mu = 0;
    std::vector<Complex> eta;
    std::vector<Real> r;  // r[nu] = r_{nu,mu}, nu = 0..p
};

/// Every entry sqrt(2), so sum |eta|^2 = 2p.
std::vector<Complex> default_eta(std::size_t p, std::size_t mu = 0);

/// Throws EtaNormViolation unless eta has p nonzero entries with sum |eta|^2 = 2p.
void check_eta(std::size_t p, const std::vector<Complex>& eta);

/// Given r_{mu+2,mu}, fills the rest of r so that [H, Q] = 0.
std::vector<Real> close_chain(const AlgebraSpec& spec, std::size_t mu, Real r_mu_plus_2);

/// Solves r from the multilinear constraint (which fixes r_{mu+2,mu}) and the
/// commutation chain. p is taken from eta.size() and must equal lambda - 1.
std::vector<Real> solve_r(const AlgebraSpec& spec, std::size_t mu, const std::vector<Complex>& eta);

/// max over sectors s != mu of |r_s - (2 + alpha_s + alpha_{s+1} + r_{s+1})|.
Real chain_residual(const AlgebraSpec& spec, std::size_t mu, const std::vector<Real>& r);

/// |lhs - rhs| of the constraint that fixes r_{mu+2,mu}, plus |sum |eta|^2 - 2p|.
Real constraint_residual(const AlgebraSpec& spec, std::size_t mu, const std::vector<Complex>& eta,
                         const std::vector<Real>& r);

PssqmConfig solve_config(const AlgebraSpec& spec, std::size_t mu, const std::vector<Complex>& eta);

ComplexMatrix build_supercharge(const TruncatedFockRep& rep, std::size_t mu, const std::vector<Complex>& eta);

struct BreakingReport {
    bool unbroken = false;  // measured: ground cluster is a singlet
    Real ground_energy = 0;
    std::size_t ground_multiplicity = 0;
    std::vector<std::size_t> excited_multiplicities;  // complete clusters above the ground
    Real cutoff_energy = 0;
};

/// Ground and excited multiplets of a PSSQM Hamiltonian diagonal. The top
/// lambda * (p + 1) states are treated as truncation-biased.
BreakingReport classify_breaking(const RealVector& h_diag, std::size_t mu, std::size_t p,
                                 Real cluster_tol = kDefaultClusterTol);

struct PssqmReport {
    std::size_t p = 0;
    std::size_t mu = 0;
    Real tolerance = 0;
    Real residual_nilpotency = 0;    // Q^{p+1}
    Real nonvanishing_witness = 0;   // min_{n<=p} max|Q^n|
    Real residual_commutator = 0;    // [H, Q]
    Real residual_multilinear = 0;   // sum_k Q^{p-k} Qdag Q^k - 2p Q^{p-1} H
    BreakingReport breaking;
    Real ground_energy = 0;

    bool pass_nilpotency() const { return residual_nilpotency <= tolerance; }
    bool pass_nonvanishing() const { return nonvanishing_witness > tolerance; }
    bool pass_commutator() const { return residual_commutator <= tolerance; }
    bool pass_multilinear() const { return residual_multilinear <= tolerance; }
    bool all_pass() const {
        return pass_nilpotency() && pass_nonvanishing() && pass_commutator() && pass_multilinear();
    }
};

/// Checks the order-p parasupersymmetric algebra for (Q, H) on the interior
/// (margin p + 1). Q^n != 0 is checked on the whole truncation, where raising
/// words are exact.
PssqmReport khare_check(const TruncatedFockRep& rep, const ComplexMatrix& Q, const RealVector& h_diag,
                        std::size_t mu, Real tol = 1e-10L, Real cluster_tol = kDefaultClusterTol);

/// Convenience: solve r for (spec, mu, eta), build everything at dim and check.
PssqmReport khare_check_solved(const AlgebraSpec& spec, std::size_t dim, std::size_t mu,
                               const std::vector<Complex>& eta, Real tol = 1e-10L);

enum class SsqmVariant { Unbroken, Broken };

SsqmVariant parse_ssqm_variant(const std::string& text);
const char* to_string(SsqmVariant variant) noexcept;

struct SsqmReport {
    SsqmVariant variant = SsqmVariant::Unbroken;
    Real tolerance = 0;
    Real residual_nilpotency = 0;     // Q^2
    Real residual_anticommutator = 0; // {Qdag, Q} - H
    Real residual_commutator = 0;     // [H, Q]
    Real residual_closed_form = 0;    // matrix H vs F-based diagonal
    SpectrumReport spectrum;          // of the closed-form diagonal

    bool all_pass() const {
        return residual_nilpotency <= tolerance && residual_anticommutator <= tolerance &&
               residual_commutator <= tolerance && residual_closed_form <= tolerance;
    }
};

/// lambda = 2 supersymmetric QM. Unbroken: Q = adag P_1, H = adag a P_0 + a adag P_1.
/// Broken: Q = adag P_0, H = a adag P_0 + adag a P_1.
SsqmReport ssqm_check(const TruncatedFockRep& rep, SsqmVariant variant, Real tol = 1e-13L,
                      Real cluster_tol = kDefaultClusterTol);

struct BdReport {
    std::size_t mu = 0;
    Real tolerance = 0;
    Real residual_bd = 0;          // [Q, [Qdag, Q]] - 2 Q H
    Real residual_nilpotency = 0;  // Q^3

    bool compatible() const { return residual_bd <= tolerance && residual_nilpotency <= tolerance; }
};

/// Order-2 Beckers-Debergh relations Q^3 = 0, [Q, [Qdag, Q]] = 2 Q H, checked
/// on the interior (margin 3). Requires lambda = 3.
BdReport beckers_debergh_check(const TruncatedFockRep& rep, std::size_t mu, const std::vector<Complex>& eta,
                               const std::vector<Real>& r, Real tol = 1e-10L);

/// alpha with alpha_{mu+2} = t and the other two components equal to -t/2.
std::vector<Real> bd_scan_alpha(std::size_t mu, Real t);

struct ScanRow {
    Real parameter = 0;
    std::optional<Real> residual;  // empty when the point admits no BFB representation
    bool bfb = true;
};

/// Scans alpha_{mu+2} over [from, to] (points evenly spaced, both ends included)
/// with default eta and solved r. Rows come back ordered by parameter.
std::vector<ScanRow> bd_scan(std::size_t mu, Real from, Real to, std::size_t points, std::size_t dim);

/// Ground energy from the closed form: the minimum of E_n + r_n / 2 over n < lambda.
Real ground_energy(const AlgebraSpec& spec, std::size_t mu, const std::vector<Complex>& eta);

struct AlphaBox {
    Real lo = -0.9L;
    Real hi = 2.0L;
};

/// Uniform draw in the box, shifted to zero sum, rejected until BFB.
std::vector<Real> sample_admissible_alpha(std::size_t lambda, const AlphaBox& box, std::mt19937_64& rng);

struct SignSurvey {
    std::size_t p = 0;
    std::size_t mu = 0;
    std::uint64_t seed = 0;
    std::vector<Real> energies;
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;  // |E| < zero_tol among samples
    Real zero_tol = 1e-9L;
    // Bisection between a positive and a negative sample, when both occur.
    std::optional<std::vector<Real>> constructed_zero_alpha;
    std::optional<Real> constructed_zero_energy;
};

SignSurvey sign_survey(std::size_t p, std::size_t mu, std::size_t samples, std::uint64_t seed,
                       const AlphaBox& box = {});

}  // namespace clext
