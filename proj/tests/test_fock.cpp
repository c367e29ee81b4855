#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "clext/fock.hpp"
#include "test_support.hpp"

using namespace clext;
using test_support::d;
using test_support::spec_alpha;

TEST_CASE("ladder matrix elements") {
    SUBCASE("standard oscillator") {
        const auto rep = build(spec_alpha({0, 0}), 3);
        CHECK(d(rep.a(0, 1).real()) == doctest::Approx(1.0));
        CHECK(d(rep.a(1, 2).real()) == doctest::Approx(std::sqrt(2.0)));
        CHECK(d(rep.a.cwiseAbs().sum()) == doctest::Approx(1.0 + std::sqrt(2.0)));
    }
    SUBCASE("lambda = 3 deformed") {
        const auto rep = build(spec_alpha({1, -0.5, -0.5}), 4);
        CHECK(std::abs(d(rep.a(0, 1).real()) - std::sqrt(2.0)) < 1e-15);
        CHECK(std::abs(d(rep.a(1, 2).real()) - std::sqrt(2.5)) < 1e-15);
        CHECK(std::abs(d(rep.a(2, 3).real()) - std::sqrt(3.0)) < 1e-15);
    }
    SUBCASE("T realized through N") {
        const auto rep = build(spec_alpha({1, -0.5, -0.5}), 4);
        const double c = std::cos(oracle::kTwoPi / 3), s = std::sin(oracle::kTwoPi / 3);
        CHECK(std::abs(d(rep.T(0, 0).real()) - 1) < 1e-15);
        CHECK(std::abs(d(rep.T(1, 1).real()) - c) < 1e-15);
        CHECK(std::abs(d(rep.T(1, 1).imag()) - s) < 1e-15);
        CHECK(std::abs(d(rep.T(2, 2).real()) - c) < 1e-15);
        CHECK(std::abs(d(rep.T(2, 2).imag()) + s) < 1e-15);
        CHECK(std::abs(d(std::abs(rep.T(3, 3) - Complex(1, 0)))) < 1e-15);
    }
}

TEST_CASE("representation invariants on random specs") {
    std::mt19937_64 rng(5);
    for (std::size_t lambda = 2; lambda <= 6; ++lambda) {
        const auto alpha = oracle::random_bfb_alpha(lambda, rng);
        const std::size_t dim = 5 * lambda + 3;
        const auto rep = build(spec_alpha(alpha), dim);
        const auto ref = oracle::ladder(alpha, dim);

        CHECK(rep.adag == rep.a.adjoint());
        ComplexMatrix total = ComplexMatrix::Zero(dim, dim);
        for (const auto& p : rep.P) total += p;
        CHECK(total == ComplexMatrix::Identity(dim, dim));

        for (std::size_t i = 0; i < dim; ++i) {
            CHECK(rep.num(i, i) == Complex(static_cast<Real>(i), 0));
            for (std::size_t j = 0; j < dim; ++j) {
                CHECK(std::abs(d(rep.a(i, j).real()) - ref[i][j].real()) < 1e-13);
                CHECK(rep.a(i, j).imag() == 0);
                if (i != j) {
                    CHECK(rep.num(i, j) == Complex(0, 0));
                    CHECK(rep.T(i, j) == Complex(0, 0));
                }
                if (j != i + 1) CHECK(rep.a(i, j) == Complex(0, 0));
            }
        }

        // exact grading identities on the whole truncation
        for (std::size_t mu = 0; mu < lambda; ++mu) {
            const auto m = static_cast<long long>(mu);
            CHECK(rep.a * rep.P[mu] == rep.proj(m - 1) * rep.a);
            CHECK(rep.adag * rep.P[mu] == rep.proj(m + 1) * rep.adag);
            for (std::size_t nu = 0; nu < lambda; ++nu) {
                const ComplexMatrix pp = rep.P[mu] * rep.P[nu];
                if (mu == nu) CHECK(pp == rep.P[mu]);
                else CHECK(pp == ComplexMatrix::Zero(dim, dim));
            }
        }

        // a^dag a = F(n) everywhere, a a^dag = F(n+1) except the top state
        const ComplexMatrix ada = rep.adag * rep.a;
        const ComplexMatrix aad = rep.a * rep.adag;
        for (std::size_t n = 0; n < dim; ++n) {
            CHECK(std::abs(d(ada(n, n).real()) - oracle::structure(alpha, n)) < 1e-12);
            const double top = n + 1 < dim ? oracle::structure(alpha, n + 1) : 0.0;
            CHECK(std::abs(d(aad(n, n).real()) - top) < 1e-12);
        }
    }
}

TEST_CASE("norm coefficients") {
    const auto s = spec_alpha({1, -0.5, -0.5});
    CHECK(d(norm_coefficient(s, 0)) == 1.0);
    CHECK(d(norm_coefficient(s, 3)) == doctest::Approx(15.0).epsilon(1e-15));
    const auto undeformed = spec_alpha({0, 0, 0, 0});
    double factorial = 1;
    for (std::size_t n = 0; n <= 12; ++n) {
        if (n > 0) factorial *= double(n);
        CHECK(d(norm_coefficient(undeformed, n)) == doctest::Approx(factorial).epsilon(1e-15));
    }
}

TEST_CASE("casimir vanishes") {
    SUBCASE("lambda = 2 against a dense-product oracle") {
        const std::vector<double> alpha{0.5, -0.5};
        const auto rep = build(spec_alpha(alpha), 8);
        const auto a = oracle::ladder(alpha, 8);
        const auto ada = oracle::mul(oracle::adjoint(a), a);
        double oracle_max = 0;
        for (std::size_t n = 0; n < 8; ++n) oracle_max = std::max(oracle_max, std::abs(oracle::structure(alpha, n) - ada[n][n]));
        CHECK(oracle_max < 1e-13);
        CHECK(d(casimir(rep).cwiseAbs().maxCoeff()) <= 1e-13);
    }
    SUBCASE("undeformed") {
        for (std::size_t dim : {1u, 2u, 7u, 31u}) CHECK(d(casimir(build(spec_alpha({0, 0}), dim)).cwiseAbs().maxCoeff()) <= 1e-13);
    }
    SUBCASE("random lambda = 4, dim 20") {
        std::mt19937_64 rng(19);
        for (int trial = 0; trial < 20; ++trial) {
            const auto rep = build(spec_alpha(oracle::random_bfb_alpha(4, rng)), 20);
            CHECK(d(casimir(rep).cwiseAbs().maxCoeff()) <= 1e-13);
        }
    }
}

TEST_CASE("grading sectors") {
    const auto rep = build(spec_alpha({1, -0.5, -0.5}), 7);
    CHECK(grading_sector(rep, 1) == std::vector<std::size_t>{1, 4});
    CHECK(grading_sector(rep, 0) == std::vector<std::size_t>{0, 3, 6});
    std::size_t total = 0;
    for (std::size_t mu = 0; mu < 3; ++mu) total += grading_sector(rep, mu).size();
    CHECK(total == 7);
    CHECK_THROWS_AS(grading_sector(rep, 3), Error);

    // a |3> lies in sector 2
    ComplexMatrix e3 = ComplexMatrix::Zero(7, 1);
    e3(3, 0) = 1;
    const ComplexMatrix image = rep.a * e3;
    const auto sector2 = grading_sector(rep, 2);
    for (Eigen::Index n = 0; n < 7; ++n) {
        const bool inside = std::find(sector2.begin(), sector2.end(), std::size_t(n)) != sector2.end();
        if (!inside) CHECK(image(n, 0) == Complex(0, 0));
    }
    CHECK(d(std::abs(image(2, 0))) == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("build errors") {
    try {
        build(spec_alpha({0.5, -3, 2.5}), 5);
        FAIL("expected NonUnitaryTruncation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonUnitaryTruncation);
    }
    // F(2) < 0 lies outside a dim-2 truncation
    CHECK_NOTHROW(build(spec_alpha({0.5, -3, 2.5}), 2));

    try {
        build(spec_alpha({-1, 1}), 2);
        FAIL("expected DimensionTooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DimensionTooLarge);
    }
    const auto one = build(spec_alpha({-1, 1}), 1);
    CHECK(one.dim == 1);
    CHECK(one.a(0, 0) == Complex(0, 0));
    CHECK_THROWS_AS(build(spec_alpha({0, 0}), 0), Error);
}

TEST_CASE("matrix dump") {
    const auto rep = build(spec_alpha({0, 0}), 2);
    std::ostringstream os;
    dump_matrix(os, "a", rep.a);
    CHECK(os.str() == "# a 2 2\n0,0\n0,0\n1,0\n0,0\n");

    std::ostringstream t;
    dump_matrix(t, "T", named_matrix(rep, "T"));
    CHECK(t.str() == "# T 2 2\n1,0\n0,0\n0,0\n-1,-5.01655761266833e-20\n");
    CHECK_THROWS_AS(named_matrix(rep, "P7"), Error);
    CHECK(named_matrix(rep, "P1") == rep.P[1]);
}
