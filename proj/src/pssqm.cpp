#include "clext/pssqm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "clext/verifier.hpp"

namespace clext {

namespace {

void check_mu(std::size_t mu, std::size_t lambda) {
    if (mu >= lambda) {
        throw Error(ErrorKind::ValidationError,
                    "mu = " + std::to_string(mu) + " must lie in 0.." + std::to_string(lambda - 1));
    }
}

void require_bfb(const AlgebraSpec& spec) {
    const RepClass cls = classify(spec);
    if (cls.kind != RepKind::BoundedFromBelow) {
        throw Error(ErrorKind::NonUnitary, "parasupersymmetric bosonization needs a bounded-from-below Fock "
                                           "representation, got finite dimension " +
                                               std::to_string(*cls.dim));
    }
}

std::vector<ComplexMatrix> powers_of(const ComplexMatrix& q, std::size_t highest) {
    std::vector<ComplexMatrix> out;
    out.reserve(highest + 1);
    out.push_back(ComplexMatrix::Identity(q.rows(), q.cols()));
    for (std::size_t k = 1; k <= highest; ++k) out.push_back(q * out.back());
    return out;
}

}  // namespace

std::vector<Complex> default_eta(std::size_t p, std::size_t /*mu*/) {
    if (p == 0) throw Error(ErrorKind::ValidationError, "PSSQM order p must be at least 1");
    return std::vector<Complex>(p, Complex(std::sqrt(Real{2}), 0));
}

void check_eta(std::size_t p, const std::vector<Complex>& eta) {
    if (eta.size() != p) {
        throw Error(ErrorKind::EtaNormViolation,
                    "expected " + std::to_string(p) + " eta entries, got " + std::to_string(eta.size()));
    }
    Real norm = 0;
    for (std::size_t k = 0; k < eta.size(); ++k) {
        if (std::abs(eta[k]) == 0) {
            throw Error(ErrorKind::EtaNormViolation, "eta entry " + std::to_string(k) + " is zero");
        }
        norm += std::norm(eta[k]);
    }
    if (std::abs(norm - static_cast<Real>(2 * p)) > kConstraintTol) {
        std::ostringstream os;
        os.precision(15);
        os << "sum |eta|^2 = " << static_cast<double>(norm) << ", expected 2p = " << 2 * p;
        throw Error(ErrorKind::EtaNormViolation, os.str());
    }
}

std::vector<Real> close_chain(const AlgebraSpec& spec, std::size_t mu, Real r_mu_plus_2) {
    const std::size_t lambda = spec.lambda;
    check_mu(mu, lambda);
    const std::size_t p = lambda - 1;
    const auto m = static_cast<long long>(mu);
    std::vector<Real> r(lambda, Real{0});
    auto at = [&](long long k) -> Real& { return r[cyc(k, lambda)]; };

    // r_{s} = 2 + alpha_s + alpha_{s+1} + r_{s+1} for every sector s != mu
    at(m + 2) = r_mu_plus_2;
    at(m + 1) = 2 + spec.alpha_at(m + 1) + spec.alpha_at(m + 2) + at(m + 2);
    if (p == 1) return r;  // mu + 2 == mu
    for (long long nu = 2; nu < static_cast<long long>(p); ++nu) {
        at(m + nu + 1) = at(m + nu) - 2 - spec.alpha_at(m + nu) - spec.alpha_at(m + nu + 1);
    }
    const auto last = m + static_cast<long long>(p);
    at(m) = at(last) - 2 - spec.alpha_at(last) - spec.alpha_at(m);
    return r;
}

std::vector<Real> solve_r(const AlgebraSpec& spec, std::size_t mu, const std::vector<Complex>& eta) {
    const std::size_t p = eta.size();
    if (p + 1 != spec.lambda) {
        throw Error(ErrorKind::OrderMismatch, "lambda = " + std::to_string(spec.lambda) +
                                                  " but eta implies order p = " + std::to_string(p));
    }
    check_mu(mu, spec.lambda);
    check_eta(p, eta);
    require_bfb(spec);

    const auto m = static_cast<long long>(mu);
    Real weighted = 0;
    Real partial = 0;  // sum_{rho < nu} alpha_{mu+rho+2}
    for (std::size_t nu = 1; nu < p; ++nu) {
        partial += spec.alpha_at(m + static_cast<long long>(nu) + 1);
        weighted += std::norm(eta[nu]) * (static_cast<Real>(nu) + partial);
    }
    const Real r_mu_plus_2 = weighted / static_cast<Real>(p) - 1 - spec.alpha_at(m + 2);
    return close_chain(spec, mu, r_mu_plus_2);
}

Real chain_residual(const AlgebraSpec& spec, std::size_t mu, const std::vector<Real>& r) {
    const std::size_t lambda = spec.lambda;
    if (r.size() != lambda) {
        throw Error(ErrorKind::LengthMismatch,
                    "expected " + std::to_string(lambda) + " sector shifts, got " + std::to_string(r.size()));
    }
    Real worst = 0;
    for (std::size_t nu = 1; nu < lambda; ++nu) {
        const auto s = static_cast<long long>(mu + nu);
        const Real rhs = 2 + spec.alpha_at(s) + spec.alpha_at(s + 1) + r[cyc(s + 1, lambda)];
        worst = std::max(worst, std::abs(r[cyc(s, lambda)] - rhs));
    }
    return worst;
}

Real constraint_residual(const AlgebraSpec& spec, std::size_t mu, const std::vector<Complex>& eta,
                         const std::vector<Real>& r) {
    const std::size_t p = eta.size();
    const auto m = static_cast<long long>(mu);
    Real norm = 0;
    for (const auto& e : eta) norm += std::norm(e);
    Real lhs = 0;
    for (std::size_t nu = 1; nu < p; ++nu) {
        Real inner = static_cast<Real>(nu);
        for (std::size_t rho = 0; rho < nu; ++rho) inner += spec.alpha_at(m + static_cast<long long>(rho) + 2);
        lhs += std::norm(eta[nu]) * inner;
    }
    const Real rhs = static_cast<Real>(p) * (1 + spec.alpha_at(m + 2) + r[cyc(m + 2, spec.lambda)]);
    return std::abs(lhs - rhs) + std::abs(norm - static_cast<Real>(2 * p));
}

PssqmConfig solve_config(const AlgebraSpec& spec, std::size_t mu, const std::vector<Complex>& eta) {
    return {eta.size(), mu, eta, solve_r(spec, mu, eta)};
}

ComplexMatrix build_supercharge(const TruncatedFockRep& rep, std::size_t mu, const std::vector<Complex>& eta) {
    const std::size_t lambda = rep.lambda();
    check_mu(mu, lambda);
    if (eta.size() + 1 != lambda) {
        throw Error(ErrorKind::OrderMismatch, "lambda = " + std::to_string(lambda) + " but eta has " +
                                                  std::to_string(eta.size()) + " entries");
    }
    std::vector<Complex> coefficient(lambda, Complex(0, 0));
    for (std::size_t k = 0; k < eta.size(); ++k) coefficient[cyc(static_cast<long long>(mu + k + 1), lambda)] = eta[k];

    ComplexMatrix q = ComplexMatrix::Zero(rep.dim, rep.dim);
    for (std::size_t mu_s = 0; mu_s < lambda; ++mu_s) {
        if (coefficient[mu_s] != Complex(0, 0)) q += coefficient[mu_s] * (rep.adag * rep.P[mu_s]);
    }
    return q;
}

BreakingReport classify_breaking(const RealVector& h_diag, std::size_t mu, std::size_t p, Real cluster_tol) {
    const std::size_t lambda = p + 1;
    check_mu(mu, lambda);
    const SpectrumReport spec = spectrum_report(h_diag, lambda, cluster_tol, lambda * (p + 1));
    const auto complete = spec.complete_clusters();

    BreakingReport out;
    out.cutoff_energy = spec.cutoff_energy;
    if (complete.empty()) return out;
    out.ground_energy = complete.front().energy;
    out.ground_multiplicity = complete.front().multiplicity;
    out.unbroken = out.ground_multiplicity == 1;
    for (std::size_t k = 1; k < complete.size(); ++k) out.excited_multiplicities.push_back(complete[k].multiplicity);
    return out;
}

PssqmReport khare_check(const TruncatedFockRep& rep, const ComplexMatrix& Q, const RealVector& h_diag,
                        std::size_t mu, Real tol, Real cluster_tol) {
    const std::size_t p = rep.lambda() - 1;
    check_mu(mu, rep.lambda());
    const std::size_t margin = p + 1;

    PssqmReport out;
    out.p = p;
    out.mu = mu;
    out.tolerance = tol;

    const ComplexMatrix H = diagonal_matrix(h_diag);
    const ComplexMatrix Qd = Q.adjoint();
    const auto pw = powers_of(Q, p + 1);

    out.residual_nilpotency = interior_residual(pw[p + 1], margin);
    out.nonvanishing_witness = std::numeric_limits<Real>::infinity();
    for (std::size_t n = 1; n <= p; ++n) {
        out.nonvanishing_witness = std::min(out.nonvanishing_witness, interior_residual(pw[n], 0));
    }
    out.residual_commutator = interior_residual(H * Q - Q * H, margin);

    ComplexMatrix lhs = ComplexMatrix::Zero(rep.dim, rep.dim);
    for (std::size_t k = 0; k <= p; ++k) lhs += pw[p - k] * Qd * pw[k];
    out.residual_multilinear = interior_residual(lhs - static_cast<Real>(2 * p) * pw[p - 1] * H, margin);

    out.breaking = classify_breaking(h_diag, mu, p, cluster_tol);
    out.ground_energy = out.breaking.ground_energy;
    return out;
}

PssqmReport khare_check_solved(const AlgebraSpec& spec, std::size_t dim, std::size_t mu,
                               const std::vector<Complex>& eta, Real tol) {
    const auto r = solve_r(spec, mu, eta);
    const auto rep = build(spec, dim);
    return khare_check(rep, build_supercharge(rep, mu, eta), shifted_hamiltonian(rep, r), mu, tol);
}

SsqmVariant parse_ssqm_variant(const std::string& text) {
    if (text == "unbroken") return SsqmVariant::Unbroken;
    if (text == "broken") return SsqmVariant::Broken;
    throw Error(ErrorKind::ValidationError, "variant must be 'unbroken' or 'broken', got '" + text + "'");
}

const char* to_string(SsqmVariant variant) noexcept {
    return variant == SsqmVariant::Unbroken ? "unbroken" : "broken";
}

SsqmReport ssqm_check(const TruncatedFockRep& rep, SsqmVariant variant, Real tol, Real cluster_tol) {
    if (rep.lambda() != 2) {
        throw Error(ErrorKind::WrongLambda, "SSQM bosonization needs lambda = 2, got " + std::to_string(rep.lambda()));
    }
    const ComplexMatrix& a = rep.a;
    const ComplexMatrix& adag = rep.adag;
    const bool unbroken = variant == SsqmVariant::Unbroken;
    // the sector on which H acts as adag a
    const std::size_t low = unbroken ? 0 : 1;

    const ComplexMatrix Q = adag * rep.P[unbroken ? 1 : 0];
    const ComplexMatrix H = adag * a * rep.P[low] + a * adag * rep.P[1 - low];
    const ComplexMatrix Qd = Q.adjoint();

    RealVector closed(static_cast<Eigen::Index>(rep.dim));
    for (std::size_t n = 0; n < rep.dim; ++n) {
        closed(static_cast<Eigen::Index>(n)) =
            n % 2 == low ? structure_function(rep.spec, n) : structure_function(rep.spec, n + 1);
    }

    SsqmReport out;
    out.variant = variant;
    out.tolerance = tol;
    out.residual_nilpotency = interior_residual(Q * Q, 2);
    out.residual_anticommutator = interior_residual(Qd * Q + Q * Qd - H, 2);
    out.residual_commutator = interior_residual(H * Q - Q * H, 2);
    out.residual_closed_form = interior_residual(H - diagonal_matrix(closed), 2);
    out.spectrum = spectrum_report(closed, 2, cluster_tol, 4);
    return out;
}

BdReport beckers_debergh_check(const TruncatedFockRep& rep, std::size_t mu, const std::vector<Complex>& eta,
                               const std::vector<Real>& r, Real tol) {
    if (rep.lambda() != 3 || eta.size() != 2) {
        throw Error(ErrorKind::WrongOrder, "Beckers-Debergh check is defined for p = 2 (lambda = 3)");
    }
    const ComplexMatrix Q = build_supercharge(rep, mu, eta);
    const ComplexMatrix Qd = Q.adjoint();
    const ComplexMatrix H = diagonal_matrix(shifted_hamiltonian(rep, r));
    const ComplexMatrix inner = Qd * Q - Q * Qd;

    BdReport out;
    out.mu = mu;
    out.tolerance = tol;
    out.residual_bd = interior_residual(Q * inner - inner * Q - Real{2} * Q * H, 3);
    out.residual_nilpotency = interior_residual(Q * Q * Q, 3);
    return out;
}

std::vector<Real> bd_scan_alpha(std::size_t mu, Real t) {
    check_mu(mu, 3);
    std::vector<Real> alpha(3, -t / 2);
    alpha[cyc(static_cast<long long>(mu) + 2, 3)] = t;
    return alpha;
}

std::vector<ScanRow> bd_scan(std::size_t mu, Real from, Real to, std::size_t points, std::size_t dim) {
    if (points == 0) throw Error(ErrorKind::ValidationError, "scan needs at least one point");
    std::vector<ScanRow> rows(points);
    const auto eta = default_eta(2, mu);
    for (std::size_t i = 0; i < points; ++i) {
        const Real t = points == 1 ? from
                                   : from + (to - from) * static_cast<Real>(i) / static_cast<Real>(points - 1);
        rows[i].parameter = t;
        const AlgebraSpec spec = from_alpha(3, bd_scan_alpha(mu, t));
        if (!is_bounded_from_below(spec)) {
            rows[i].bfb = false;
            continue;
        }
        const auto rep = build(spec, dim);
        rows[i].residual = beckers_debergh_check(rep, mu, eta, solve_r(spec, mu, eta)).residual_bd;
    }
    return rows;
}

Real ground_energy(const AlgebraSpec& spec, std::size_t mu, const std::vector<Complex>& eta) {
    const auto r = solve_r(spec, mu, eta);
    Real best = std::numeric_limits<Real>::infinity();
    for (std::size_t n = 0; n < spec.lambda; ++n) best = std::min(best, energy_level(spec, n) + r[n] / 2);
    return best;
}

std::vector<Real> sample_admissible_alpha(std::size_t lambda, const AlphaBox& box, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> draw(static_cast<double>(box.lo), static_cast<double>(box.hi));
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<Real> alpha(lambda);
        Real mean = 0;
        for (auto& x : alpha) {
            x = draw(rng);
            mean += x;
        }
        mean /= static_cast<Real>(lambda);
        for (auto& x : alpha) x -= mean;
        if (is_bounded_from_below(from_alpha(lambda, alpha))) return alpha;
    }
    throw Error(ErrorKind::ValidationError, "alpha box admits no bounded-from-below sample");
}

SignSurvey sign_survey(std::size_t p, std::size_t mu, std::size_t samples, std::uint64_t seed, const AlphaBox& box) {
    const std::size_t lambda = p + 1;
    check_mu(mu, lambda);
    const auto eta = default_eta(p, mu);
    std::mt19937_64 rng(seed);

    SignSurvey out;
    out.p = p;
    out.mu = mu;
    out.seed = seed;
    std::optional<std::vector<Real>> first_positive;
    std::optional<std::vector<Real>> first_negative;
    for (std::size_t s = 0; s < samples; ++s) {
        auto alpha = sample_admissible_alpha(lambda, box, rng);
        const Real e = ground_energy(from_alpha(lambda, alpha), mu, eta);
        out.energies.push_back(e);
        if (std::abs(e) < out.zero_tol) {
            ++out.zero;
        } else if (e > 0) {
            ++out.positive;
            if (!first_positive) first_positive = alpha;
        } else {
            ++out.negative;
            if (!first_negative) first_negative = alpha;
        }
    }
    if (!first_positive || !first_negative) return out;

    // the BFB region is convex and the ground energy continuous along the segment
    auto at = [&](Real t) {
        std::vector<Real> alpha(lambda);
        for (std::size_t k = 0; k < lambda; ++k) alpha[k] = (1 - t) * (*first_positive)[k] + t * (*first_negative)[k];
        return alpha;
    };
    Real lo = 0;
    Real hi = 1;
    std::vector<Real> alpha;
    Real e = 0;
    for (int iter = 0; iter < 200; ++iter) {
        const Real mid = (lo + hi) / 2;
        alpha = at(mid);
        e = ground_energy(from_alpha(lambda, alpha), mu, eta);
        if (std::abs(e) < 1e-15L) break;
        if (e > 0) lo = mid;
        else hi = mid;
    }
    out.constructed_zero_alpha = alpha;
    out.constructed_zero_energy = e;
    return out;
}

}  // namespace clext
