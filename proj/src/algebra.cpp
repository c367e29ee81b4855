#include "clext/algebra.hpp"

#include <cmath>
#include <sstream>

namespace clext {

namespace {

// exp(i 2 pi k / lambda) with k reduced first, so large products mu*nu keep full accuracy.
Complex root_of_unity(long long k, std::size_t lambda) {
    const auto reduced = static_cast<Real>(cyc(k, lambda));
    return std::polar(Real{1}, 2 * kPi * reduced / static_cast<Real>(lambda));
}

void check_lambda(std::size_t lambda) {
    if (lambda < 2) {
        throw Error(ErrorKind::LengthMismatch, "lambda must be at least 2, got " + std::to_string(lambda));
    }
}

void fill_derived(AlgebraSpec& spec) {
    const std::size_t lambda = spec.lambda;
    spec.beta.assign(lambda, Real{0});
    spec.gamma.assign(lambda, Real{0});
    Real partial = 0;
    for (std::size_t mu = 0; mu < lambda; ++mu) {
        spec.beta[mu] = partial;
        spec.gamma[mu] = partial + spec.alpha[mu] / 2;
        partial += spec.alpha[mu];
    }
}

}  // namespace

AlgebraSpec from_kappa(std::size_t lambda, const std::vector<Complex>& kappa) {
    check_lambda(lambda);
    if (kappa.size() != lambda - 1) {
        std::ostringstream os;
        os << "expected " << lambda - 1 << " kappa values for lambda=" << lambda << ", got " << kappa.size();
        throw Error(ErrorKind::LengthMismatch, os.str());
    }
    // kappa[i] stores kappa_{i+1}
    for (std::size_t mu = 1; mu < lambda; ++mu) {
        const Complex lhs = std::conj(kappa[mu - 1]);
        const Complex rhs = kappa[lambda - mu - 1];
        if (std::abs(lhs - rhs) > kConstraintTol) {
            std::ostringstream os;
            os << "conj(kappa_" << mu << ") != kappa_" << lambda - mu << " (difference "
               << static_cast<double>(std::abs(lhs - rhs)) << ")";
            throw Error(ErrorKind::ConjugationViolation, os.str());
        }
    }

    AlgebraSpec spec;
    spec.lambda = lambda;
    spec.kappa = kappa;
    spec.alpha.resize(lambda);
    Real sum = 0;
    for (std::size_t mu = 0; mu < lambda; ++mu) {
        Complex acc{0, 0};
        for (std::size_t nu = 1; nu < lambda; ++nu) {
            acc += root_of_unity(static_cast<long long>(mu * nu), lambda) * kappa[nu - 1];
        }
        // imaginary part is roundoff once the conjugation constraint holds
        spec.alpha[mu] = acc.real();
        sum += acc.real();
    }
    if (std::abs(sum) > kConstraintTol) {
        throw Error(ErrorKind::SumNotZero, "alpha sum " + std::to_string(static_cast<double>(sum)));
    }
    fill_derived(spec);
    return spec;
}

AlgebraSpec from_alpha(std::size_t lambda, const std::vector<Real>& alpha) {
    check_lambda(lambda);
    if (alpha.size() != lambda) {
        std::ostringstream os;
        os << "expected " << lambda << " alpha values for lambda=" << lambda << ", got " << alpha.size();
        throw Error(ErrorKind::LengthMismatch, os.str());
    }
    Real sum = 0;
    for (Real a : alpha) sum += a;
    if (std::abs(sum) > kConstraintTol) {
        std::ostringstream os;
        os.precision(15);
        os << "alpha components must sum to zero, sum is " << static_cast<double>(sum);
        throw Error(ErrorKind::SumNotZero, os.str());
    }

    AlgebraSpec spec;
    spec.lambda = lambda;
    spec.alpha = alpha;
    spec.kappa.resize(lambda - 1);
    for (std::size_t nu = 1; nu < lambda; ++nu) {
        Complex acc{0, 0};
        for (std::size_t mu = 0; mu < lambda; ++mu) {
            acc += root_of_unity(-static_cast<long long>(mu * nu), lambda) * alpha[mu];
        }
        spec.kappa[nu - 1] = acc / static_cast<Real>(lambda);
    }
    fill_derived(spec);
    return spec;
}

Real structure_function(const AlgebraSpec& spec, std::size_t n) {
    return static_cast<Real>(n) + spec.beta[n % spec.lambda];
}

Real energy_level(const AlgebraSpec& spec, std::size_t n) {
    return static_cast<Real>(n) + Real{0.5} + spec.gamma[n % spec.lambda];
}

RepClass classify(const AlgebraSpec& spec) {
    RepClass out;
    out.witnesses.reserve(spec.lambda - 1);
    for (std::size_t mu = 1; mu < spec.lambda; ++mu) {
        out.witnesses.push_back(structure_function(spec, mu));
    }
    for (std::size_t mu = 1; mu < spec.lambda; ++mu) {
        const Real f = out.witnesses[mu - 1];
        if (std::abs(f) <= kConstraintTol) {
            out.kind = RepKind::FiniteDim;
            out.dim = mu;
            return out;
        }
        if (f < 0) {
            std::ostringstream os;
            os << "F(" << mu << ") = " << static_cast<double>(f) << " < 0 before any zero";
            throw Error(ErrorKind::NonUnitary, os.str());
        }
    }
    out.kind = RepKind::BoundedFromBelow;
    return out;
}

bool is_bounded_from_below(const AlgebraSpec& spec) {
    for (std::size_t mu = 1; mu < spec.lambda; ++mu) {
        if (structure_function(spec, mu) <= kConstraintTol) return false;
    }
    return true;
}

}  // namespace clext
