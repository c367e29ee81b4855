#include <doctest.h>

#include <cmath>
#include <random>

#include "clext/algebra.hpp"
#include "test_support.hpp"

using namespace clext;
using test_support::d;
using test_support::spec_alpha;

TEST_CASE("from_kappa evaluates the roots-of-unity sum") {
    SUBCASE("lambda = 2") {
        const auto s = from_kappa(2, {Complex(0.5L, 0)});
        CHECK(d(s.alpha[0]) == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(d(s.alpha[1]) == doctest::Approx(-0.5).epsilon(1e-15));
    }
    SUBCASE("zero input") {
        const auto s = from_kappa(3, {Complex(0, 0), Complex(0, 0)});
        for (auto a : s.alpha) CHECK(d(a) == 0.0);
    }
    SUBCASE("lambda = 3 complex pair") {
        const oracle::cd k1(0.25, 0.25);
        const auto ref = oracle::alpha_from_kappa({k1, std::conj(k1)});
        const auto s = from_kappa(3, {Complex(0.25L, 0.25L), Complex(0.25L, -0.25L)});
        // frozen: alpha = (1/2, -1/4 - sqrt(3)/4, -1/4 + sqrt(3)/4)
        const double frozen[3] = {0.5, -0.25 - std::sqrt(3.0) / 4, -0.25 + std::sqrt(3.0) / 4};
        double sum = 0;
        for (int mu = 0; mu < 3; ++mu) {
            CHECK(std::abs(d(s.alpha[mu]) - ref[mu].real()) < 1e-14);
            CHECK(std::abs(ref[mu].imag()) < 1e-14);
            CHECK(std::abs(d(s.alpha[mu]) - frozen[mu]) < 1e-14);
            sum += d(s.alpha[mu]);
        }
        CHECK(std::abs(sum) < 1e-12);
        CHECK(d(s.alpha[1]) == doctest::Approx(-0.6830).epsilon(1e-4));
        CHECK(d(s.alpha[2]) == doctest::Approx(0.1830).epsilon(1e-3));
    }
}

TEST_CASE("from_kappa rejects bad input") {
    CHECK_THROWS_AS(from_kappa(3, {Complex(0.25L, 0.25L)}), Error);
    try {
        from_kappa(3, {Complex(0.25L, 0.25L), Complex(0.25L, 0.25L)});
        FAIL("expected ConjugationViolation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ConjugationViolation);
    }
    try {
        from_kappa(3, {Complex(1, 0)});
        FAIL("expected LengthMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LengthMismatch);
    }
}

TEST_CASE("from_alpha inverts the transform") {
    SUBCASE("lambda = 2") {
        const auto s = from_alpha(2, {1, -1});
        const auto ref = oracle::kappa_from_alpha({1, -1});
        CHECK(std::abs(d(s.kappa[0].real()) - 1.0) < 1e-15);
        CHECK(std::abs(d(s.kappa[0].imag())) < 1e-15);
        CHECK(std::abs(ref[0] - oracle::cd(1, 0)) < 1e-15);
    }
    SUBCASE("zero alpha") {
        for (std::size_t lambda = 2; lambda <= 6; ++lambda) {
            const auto s = from_alpha(lambda, std::vector<Real>(lambda, 0));
            for (const auto& k : s.kappa) CHECK(std::abs(k) == 0);
        }
    }
    SUBCASE("sum must vanish") {
        try {
            from_alpha(3, {1, -0.5L, -0.4L});
            FAIL("expected SumNotZero");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::SumNotZero);
        }
    }
}

TEST_CASE("kappa <-> alpha roundtrip over random constrained kappa") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2, 2);
    for (std::size_t lambda = 2; lambda <= 6; ++lambda) {
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Complex> kappa(lambda - 1);
            for (std::size_t mu = 1; 2 * mu <= lambda; ++mu) {
                Complex z(u(rng), u(rng));
                if (2 * mu == lambda) z = Complex(z.real(), 0);
                kappa[mu - 1] = z;
                kappa[lambda - mu - 1] = std::conj(z);
            }
            const auto s = from_kappa(lambda, kappa);
            const auto back = from_alpha(lambda, s.alpha);
            for (std::size_t k = 0; k < kappa.size(); ++k) CHECK(std::abs(d(std::abs(back.kappa[k] - kappa[k]))) < 1e-13);
            const auto again = from_kappa(lambda, back.kappa);
            for (std::size_t mu = 0; mu < lambda; ++mu) CHECK(std::abs(d(again.alpha[mu] - s.alpha[mu])) < 1e-13);

            Real sum = 0;
            for (Real a : s.alpha) sum += a;
            CHECK(std::abs(d(sum)) < 1e-12);
            CHECK(s.beta[0] == 0);
            for (std::size_t mu = 0; mu < lambda; ++mu)
                CHECK(std::abs(d(s.gamma[mu] - s.beta[mu] - s.alpha[mu] / 2)) < 1e-12);
        }
    }
}

TEST_CASE("structure function") {
    CHECK(d(structure_function(spec_alpha({0.3, -0.3}), 0)) == 0.0);
    const auto s = spec_alpha({1, -0.5, -0.5});
    CHECK(d(structure_function(s, 0)) == 0.0);
    CHECK(d(structure_function(s, 1)) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(d(structure_function(s, 2)) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(d(structure_function(s, 3)) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(d(structure_function(spec_alpha({-1, 1}), 1)) == 0.0);

    std::mt19937_64 rng(3);
    for (std::size_t lambda = 2; lambda <= 6; ++lambda) {
        const auto alpha = oracle::random_bfb_alpha(lambda, rng);
        const auto spec = spec_alpha(alpha);
        for (std::size_t n = 0; n < 40; ++n) {
            CHECK(std::abs(d(structure_function(spec, n)) - oracle::structure(alpha, n)) < 1e-12);
            const Real step = structure_function(spec, n + 1) - structure_function(spec, n);
            CHECK(std::abs(d(step - 1 - spec.alpha[n % lambda])) < 1e-15);
        }
    }
}

TEST_CASE("classify") {
    SUBCASE("bounded from below") {
        const auto c = classify(spec_alpha({1, -0.5, -0.5}));
        CHECK(c.kind == RepKind::BoundedFromBelow);
        CHECK_FALSE(c.dim.has_value());
        REQUIRE(c.witnesses.size() == 2);
        CHECK(d(c.witnesses[0]) == doctest::Approx(2.0));
        CHECK(d(c.witnesses[1]) == doctest::Approx(2.5));
    }
    SUBCASE("finite dimensional") {
        const auto c = classify(spec_alpha({-1, 1}));
        CHECK(c.kind == RepKind::FiniteDim);
        CHECK(c.dim == 1u);
        CHECK(d(c.witnesses[0]) == 0.0);
        // d = 2 for lambda = 3: F(1) = 0.5 > 0, F(2) = 0
        const auto c3 = classify(spec_alpha({-0.5, -1.5, 2}));
        CHECK(c3.kind == RepKind::FiniteDim);
        CHECK(c3.dim == 2u);
    }
    SUBCASE("undeformed oscillator") {
        CHECK(classify(spec_alpha({0, 0})).kind == RepKind::BoundedFromBelow);
    }
    SUBCASE("non-unitary region") {
        try {
            classify(spec_alpha({-1.5, 0, 1.5}));
            FAIL("expected NonUnitary");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NonUnitary);
        }
    }
}

TEST_CASE("energy levels") {
    const auto undeformed = spec_alpha({0, 0, 0});
    for (std::size_t n = 0; n < 10; ++n) CHECK(d(energy_level(undeformed, n)) == doctest::Approx(n + 0.5));

    const auto s = spec_alpha({1, -0.5, -0.5});
    CHECK(d(s.gamma[0]) == doctest::Approx(0.5));
    CHECK(d(s.gamma[1]) == doctest::Approx(0.75));
    CHECK(d(s.gamma[2]) == doctest::Approx(0.25));
    const double expected[] = {1.0, 2.25, 2.75, 4.0};
    for (std::size_t n = 0; n < 4; ++n) CHECK(std::abs(d(energy_level(s, n)) - expected[n]) < 1e-15);

    for (double nu : {-0.7, 0.0, 0.4, 3.0}) {
        const auto cv = spec_alpha({nu, -nu});
        for (std::size_t n = 0; n < 12; ++n) CHECK(std::abs(d(energy_level(cv, n)) - (n + 0.5 + nu / 2)) < 1e-14);
    }

    std::mt19937_64 rng(11);
    for (std::size_t lambda = 2; lambda <= 6; ++lambda) {
        const auto alpha = oracle::random_bfb_alpha(lambda, rng);
        const auto spec = spec_alpha(alpha);
        const auto h = oracle::h0(alpha, 50);
        for (std::size_t n = 0; n < 50; ++n) {
            CHECK(std::abs(d(energy_level(spec, n + lambda) - energy_level(spec, n)) - double(lambda)) < 1e-15);
            CHECK(std::abs(d(energy_level(spec, n)) - h[n]) < 1e-12);
        }
    }
}
