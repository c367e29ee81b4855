// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "clext/pssqm.hpp"
#include "clext/verifier.hpp"
#include "oracles.hpp"

using namespace clext;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

double d(Real x) { return static_cast<double>(x); }

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

std::vector<AlgebraSpec> relation_specs() {
    std::vector<AlgebraSpec> out;
    std::mt19937_64 rng(20240601);
    const AlphaBox box{-0.9L, 2.0L};
    for (std::size_t lambda = 2; lambda <= 5; ++lambda)
        for (int k = 0; k < 20; ++k) out.push_back(from_alpha(lambda, sample_admissible_alpha(lambda, box, rng)));
    return out;
}

Outcome relation_suite(const std::vector<AlgebraSpec>& specs) {
    Outcome o;
    Real worst = 0;
    for (const auto& spec : specs) {
        const auto rep = build(spec, 60);
        for (const auto& report : {verify_defining_relations(rep, 1e-12L), verify_projector_algebra(rep, 1e-12L)}) {
            for (const auto& e : report.entries) worst = std::max(worst, e.max_residual);
            o.pass = o.pass && report.all_pass();
        }
    }
    o.detail = std::to_string(specs.size()) + " specs, D = 60, worst residual " + sci(d(worst));
    return o;
}

Outcome casimir_suite(const std::vector<AlgebraSpec>& specs) {
    Real worst = 0;
    for (const auto& spec : specs) worst = std::max(worst, casimir(build(spec, 60)).cwiseAbs().maxCoeff());
    return {worst <= 1e-13L, "worst |F(N) - adag a| " + sci(d(worst))};
}

Outcome harmonicity(const std::vector<AlgebraSpec>& specs) {
    Real step = 0;
    Real closed = 0;
    for (const auto& spec : specs) {
        const auto lambda = spec.lambda;
        const auto h = hamiltonian_h0(build(spec, 60));
        for (std::size_t n = 0; n < 60; ++n) {
            step = std::max(step, std::abs(energy_level(spec, n + lambda) - energy_level(spec, n) - Real(lambda)));
            const Real ref = (structure_function(spec, n) + structure_function(spec, n + 1)) / 2;
            closed = std::max(closed, std::abs(h(static_cast<Eigen::Index>(n)) - ref));
        }
    }
    return {step <= 1e-15L && closed <= 1e-13L,
            "max |E(n+lambda) - E(n) - lambda| " + sci(d(step)) + ", max |H0 - (F(n)+F(n+1))/2| " + sci(d(closed))};
}

struct SweepCase {
    std::size_t p, mu;
    PssqmReport report;
};

std::vector<SweepCase> khare_sweep() {
    std::vector<SweepCase> out;
    std::mt19937_64 rng(7);
    for (std::size_t p = 1; p <= 4; ++p)
        for (std::size_t mu = 0; mu <= p; ++mu)
            for (int k = 0; k < 10; ++k) {
                const auto spec = from_alpha(p + 1, sample_admissible_alpha(p + 1, AlphaBox{}, rng));
                out.push_back({p, mu, khare_check_solved(spec, 10 * (p + 1), mu, default_eta(p), 1e-10L)});
            }
    return out;
}

Outcome khare(const std::vector<SweepCase>& sweep) {
    Outcome o;
    Real worst = 0;
    Real witness = 1e300L;
    for (const auto& c : sweep) {
        const auto& r = c.report;
        worst = std::max({worst, r.residual_nilpotency, r.residual_commutator, r.residual_multilinear});
        witness = std::min(witness, r.nonvanishing_witness);
        o.pass = o.pass && r.pass_nilpotency() && r.pass_commutator() && r.pass_multilinear() &&
                 r.nonvanishing_witness > 0.1L;
    }
    o.detail = std::to_string(sweep.size()) + " configurations, worst residual " + sci(d(worst)) +
               ", smallest witness " + sci(d(witness));
    return o;
}

Outcome worked_example() {
    const std::vector<double> alpha{1, -0.5, -0.5};
    const auto spec = from_alpha(3, {1.0L, -0.5L, -0.5L});
    const auto r = solve_r(spec, 0, default_eta(2));

    // chain oracle: r_2 from the closed form, r_1 = 2 + a1 + a2 + r2, r_0 = r_2 - 2 - a2 - a0
    const double r2 = oracle::r_mu_plus_2_closed_form(alpha, 0);
    const double r1 = 2 + alpha[1] + alpha[2] + r2;
    const double r0 = r2 - 2 - alpha[2] - alpha[0];
    const std::vector<double> expected{-2.5, 1.0, 0.0};
    const std::vector<double> oracle_r{r0, r1, r2};
    bool pass = true;
    for (std::size_t k = 0; k < 3; ++k)
        pass = pass && std::abs(d(r[k]) - expected[k]) <= 1e-12 && std::abs(oracle_r[k] - expected[k]) <= 1e-12;

    const auto rep = build(spec, 30);
    const auto clusters = spectrum_report(shifted_hamiltonian(rep, r), 3, 1e-8L).complete_clusters();
    const std::vector<std::pair<double, std::size_t>> want{{-0.25, 1}, {2.75, 3}, {5.75, 3}};
    pass = pass && clusters.size() >= 3;
    std::ostringstream os;
    os << "r = (" << d(r[0]) << ", " << d(r[1]) << ", " << d(r[2]) << "), clusters";
    for (std::size_t k = 0; k < std::min<std::size_t>(3, clusters.size()); ++k) {
        pass = pass && std::abs(d(clusters[k].energy) - want[k].first) <= 1e-12 &&
               clusters[k].multiplicity == want[k].second;
        os << " (" << d(clusters[k].energy) << "; x" << clusters[k].multiplicity << ")";
    }
    return {pass, os.str()};
}

Outcome breaking(const std::vector<SweepCase>& sweep) {
    std::size_t bad = 0;
    std::size_t excited = 0;
    for (const auto& c : sweep) {
        const auto& b = c.report.breaking;
        bool ok = b.ground_multiplicity == c.mu + 1 && b.unbroken == (c.mu == 0) && !b.excited_multiplicities.empty();
        for (auto m : b.excited_multiplicities) ok = ok && m == c.p + 1;
        excited += b.excited_multiplicities.size();
        bad += !ok;
    }
    return {bad == 0, std::to_string(sweep.size() - bad) + "/" + std::to_string(sweep.size()) +
                          " configurations match, " + std::to_string(excited) + " excited clusters checked"};
}

Outcome sign_claims() {
    Outcome o;
    std::ostringstream os;
    for (std::size_t p = 2; p <= 3; ++p)
        for (std::size_t mu = 0; mu <= p; ++mu) {
            const auto s = sign_survey(p, mu, 100, 42);
            if (mu + 1 >= p) {
                o.pass = o.pass && s.positive == 100;
                os << " p" << p << "mu" << mu << ":+" << s.positive;
            } else {
                const bool zero = s.constructed_zero_energy && std::abs(d(*s.constructed_zero_energy)) < 1e-9;
                o.pass = o.pass && s.positive > 0 && s.negative > 0 && zero;
                os << " p" << p << "mu" << mu << ":+" << s.positive << "/-" << s.negative << "/0("
                   << (s.constructed_zero_energy ? sci(d(*s.constructed_zero_energy)) : std::string("none")) << ")";
            }
        }
    o.detail = "100 samples each," + os.str();
    return o;
}

Outcome ssqm() {
    Outcome o;
    const auto unbroken = ssqm_check(build(from_alpha(2, {0.0L, 0.0L}), 40), SsqmVariant::Unbroken, 1e-13L);
    const auto& s = unbroken.spectrum;
    o.pass = unbroken.all_pass() && s.ground.multiplicity == 1 && std::abs(d(s.ground.energy)) < 1e-15;
    const auto complete = s.complete_clusters();
    for (std::size_t k = 1; k < complete.size(); ++k) o.pass = o.pass && complete[k].multiplicity == 2;
    Real worst = unbroken.residual_anticommutator;

    std::mt19937_64 rng(5);
    for (int k = 0; k < 10; ++k) {
        const auto spec = from_alpha(2, sample_admissible_alpha(2, AlphaBox{}, rng));
        for (auto variant : {SsqmVariant::Unbroken, SsqmVariant::Broken}) {
            const auto r = ssqm_check(build(spec, 40), variant, 1e-13L);
            worst = std::max(worst, r.residual_anticommutator);
            o.pass = o.pass && r.all_pass();
            const auto cl = r.spectrum.complete_clusters();
            for (std::size_t j = 0; j < cl.size(); ++j)
                if (variant == SsqmVariant::Broken || j > 0) o.pass = o.pass && cl[j].multiplicity == 2;
            if (variant == SsqmVariant::Unbroken) o.pass = o.pass && r.spectrum.ground.multiplicity == 1;
        }
    }
    o.detail = "unbroken ground " + sci(d(s.ground.energy)) + " x" + std::to_string(s.ground.multiplicity) +
               ", worst {Qdag,Q} - H " + sci(d(worst));
    return o;
}

Outcome beckers_debergh() {
    const auto rows = bd_scan(0, -2, 0, 41, 30);
    std::size_t nearest = 0;
    for (std::size_t k = 0; k < rows.size(); ++k)
        if (std::abs(rows[k].parameter + 1) < std::abs(rows[nearest].parameter + 1)) nearest = k;
    bool pass = rows.size() == 41;
    std::size_t hits = 0;
    Real runner_up = 1e300L;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const bool ok = rows[k].residual && *rows[k].residual <= 1e-10L;
        hits += ok;
        pass = pass && ok == (k == nearest);
        if (k != nearest && rows[k].residual) runner_up = std::min(runner_up, *rows[k].residual);
    }
    const auto spec = from_alpha(3, bd_scan_alpha(0, -1));
    const auto eta = default_eta(2);
    const auto bd = beckers_debergh_check(build(spec, 30), 0, eta, solve_r(spec, 0, eta), 1e-10L);
    const auto kh = khare_check_solved(spec, 30, 0, eta, 1e-10L);
    pass = pass && bd.compatible() && kh.all_pass();
    return {pass, std::to_string(hits) + " compatible point(s), at " + sci(d(rows[nearest].parameter)) +
                      "; BD residual there " + sci(d(bd.residual_bd)) + ", smallest elsewhere " + sci(d(runner_up)) +
                      "; Khare " + (kh.all_pass() ? "passes" : "fails")};
}

Outcome classification() {
    bool pass = false;
    const auto cls = classify(from_alpha(2, {-1.0L, 1.0L}));
    pass = cls.kind == RepKind::FiniteDim && cls.dim && *cls.dim == 1;

    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-1, 1);
    Real worst = 0;
    for (std::size_t lambda = 2; lambda <= 6; ++lambda)
        for (int k = 0; k < 100; ++k) {
            std::vector<Complex> kappa(lambda - 1);
            for (std::size_t nu = 1; 2 * nu <= lambda; ++nu) {
                const Complex z(u(rng), 2 * nu == lambda ? 0.0 : u(rng));
                kappa[nu - 1] = z;
                kappa[lambda - nu - 1] = std::conj(z);
            }
            const auto spec = from_kappa(lambda, kappa);
            const auto back = from_alpha(lambda, spec.alpha);
            for (std::size_t nu = 0; nu + 1 < lambda; ++nu) worst = std::max(worst, std::abs(back.kappa[nu] - kappa[nu]));
        }
    pass = pass && worst <= 1e-13L;
    return {pass, std::string("alpha = (-1, 1) -> ") + (cls.kind == RepKind::FiniteDim ? "FiniteDim(" : "BFB(") +
                      (cls.dim ? std::to_string(*cls.dim) : "") + "), roundtrip worst " + sci(d(worst))};
}

}  // namespace

int main() {
    const auto specs = relation_specs();
    const auto sweep = khare_sweep();
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"relation suite", [&] { return relation_suite(specs); }},
        {"casimir", [&] { return casimir_suite(specs); }},
        {"graded harmonicity", [&] { return harmonicity(specs); }},
        {"Khare PSSQM", [&] { return khare(sweep); }},
        {"worked example", worked_example},
        {"breaking structure", [&] { return breaking(sweep); }},
        {"ground energy signs", sign_claims},
        {"SSQM lambda = 2", ssqm},
        {"Beckers-Debergh scan", beckers_debergh},
        {"classification and roundtrip", classification},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("criterion %2zu %s  %-30s %s\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].first,
                    o.detail.c_str());
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
