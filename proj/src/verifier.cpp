#include "clext/verifier.hpp"

#include <algorithm>
#include <cmath>

namespace clext {

namespace {

Complex root_of_unity(long long k, std::size_t lambda) {
    return std::polar(Real{1}, 2 * kPi * static_cast<Real>(cyc(k, lambda)) / static_cast<Real>(lambda));
}

class ReportBuilder {
public:
    ReportBuilder(std::size_t dim, Real tol) {
        report_.dim = dim;
        report_.tolerance = tol;
    }

    // margin equals word length
    void add(std::string id, std::size_t word_length, const ComplexMatrix& difference) {
        add_value(std::move(id), word_length, interior_residual(difference, word_length));
    }

    void add_value(std::string id, std::size_t word_length, Real residual) {
        report_.entries.push_back({std::move(id), word_length, residual, residual <= report_.tolerance});
    }

    ResidualReport take() { return std::move(report_); }

private:
    ResidualReport report_;
};

}  // namespace

bool ResidualReport::all_pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const ResidualEntry& e) { return e.pass; });
}

const ResidualEntry& ResidualReport::at(const std::string& relation) const {
    for (const auto& e : entries) {
        if (e.relation == relation) return e;
    }
    throw std::out_of_range("no residual entry for relation " + relation);
}

ComplexMatrix interior_projector(std::size_t dim, std::size_t margin) {
    if (margin >= dim) {
        throw Error(ErrorKind::MarginTooLarge,
                    "margin " + std::to_string(margin) + " leaves no interior in dim " + std::to_string(dim));
    }
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (std::size_t n = 0; n + margin < dim; ++n) out(n, n) = Complex(1, 0);
    return out;
}

Real interior_residual(const ComplexMatrix& m, std::size_t margin) {
    const auto dim = static_cast<std::size_t>(m.rows());
    if (margin >= dim) {
        throw Error(ErrorKind::MarginTooLarge,
                    "margin " + std::to_string(margin) + " leaves no interior in dim " + std::to_string(dim));
    }
    const auto keep = static_cast<Eigen::Index>(dim - margin);
    return m.topLeftCorner(keep, keep).cwiseAbs().maxCoeff();
}

ResidualReport verify_defining_relations(const TruncatedFockRep& rep, Real tol) {
    if (rep.dim <= 2) {
        throw Error(ErrorKind::MarginTooLarge, "dim must exceed the longest relation word (2)");
    }
    const auto& spec = rep.spec;
    const std::size_t lambda = spec.lambda;
    const ComplexMatrix one = rep.identity();
    const ComplexMatrix& a = rep.a;
    const ComplexMatrix& adag = rep.adag;
    const ComplexMatrix& num = rep.num;
    const ComplexMatrix& T = rep.T;
    const ComplexMatrix comm = a * adag - adag * a;
    const Complex q = root_of_unity(1, lambda);

    ReportBuilder out(rep.dim, tol);

    ComplexMatrix kappa_sum = one;
    for (std::size_t mu = 1; mu < lambda; ++mu) kappa_sum += spec.kappa[mu - 1] * rep.T_power(static_cast<long long>(mu));
    out.add("T.commutator", 2, comm - kappa_sum);
    out.add("T.cyclic", 0, rep.T_power(static_cast<long long>(lambda)) - one);
    {
        // T^lambda by repeated products, independent of the closed-form power
        ComplexMatrix tp = one;
        for (std::size_t k = 0; k < lambda; ++k) tp = tp * T;
        out.add("T.cyclic_product", 0, tp - one);
    }
    out.add("T.number_a", 1, num * a - a * num + a);
    out.add("T.number_adag", 1, num * adag - adag * num - adag);
    out.add("T.number_T", 0, num * T - T * num);
    out.add("T.quommute_a", 1, a * T - q * T * a);
    out.add("T.quommute_adag", 1, adag * T - std::conj(q) * T * adag);

    ComplexMatrix alpha_sum = one;
    for (std::size_t mu = 0; mu < lambda; ++mu) alpha_sum += spec.alpha[mu] * rep.P[mu];
    out.add("P.commutator", 2, comm - alpha_sum);
    out.add("P.number_a", 1, num * a - a * num + a);
    out.add("P.number_adag", 1, num * adag - adag * num - adag);
    {
        Real worst = 0;
        for (std::size_t mu = 0; mu < lambda; ++mu)
            worst = std::max(worst, interior_residual(num * rep.P[mu] - rep.P[mu] * num, 0));
        out.add_value("P.number_P", 0, worst);
    }
    {
        Real lower = 0;
        Real raise = 0;
        for (std::size_t mu = 0; mu < lambda; ++mu) {
            const auto m = static_cast<long long>(mu);
            lower = std::max(lower, interior_residual(a * rep.P[mu] - rep.proj(m - 1) * a, 1));
            raise = std::max(raise, interior_residual(adag * rep.P[mu] - rep.proj(m + 1) * adag, 1));
        }
        out.add_value("P.shift_a", 1, lower);
        out.add_value("P.shift_adag", 1, raise);
    }
    {
        Real worst = 0;
        for (std::size_t mu = 0; mu < lambda; ++mu) {
            for (std::size_t nu = 0; nu < lambda; ++nu) {
                ComplexMatrix d = rep.P[mu] * rep.P[nu];
                if (mu == nu) d -= rep.P[mu];
                worst = std::max(worst, interior_residual(d, 0));
            }
        }
        out.add_value("P.orthogonality", 0, worst);
    }
    {
        ComplexMatrix total = ComplexMatrix::Zero(rep.dim, rep.dim);
        for (const auto& p : rep.P) total += p;
        out.add("P.completeness", 0, total - one);
    }

    out.add("herm.N", 0, num.adjoint() - num);
    out.add("herm.a", 0, adag.adjoint() - a);
    out.add("herm.T", 0, T.adjoint() - rep.T_power(-1));
    {
        Real worst = 0;
        for (const auto& p : rep.P) worst = std::max(worst, interior_residual(p.adjoint() - p, 0));
        out.add_value("herm.P", 0, worst);
    }
    return out.take();
}

ResidualReport verify_projector_algebra(const TruncatedFockRep& rep, Real tol) {
    const std::size_t lambda = rep.lambda();
    const ComplexMatrix one = rep.identity();
    ReportBuilder out(rep.dim, tol);

    Real orth = 0;
    for (std::size_t mu = 0; mu < lambda; ++mu) {
        for (std::size_t nu = 0; nu < lambda; ++nu) {
            ComplexMatrix d = rep.P[mu] * rep.P[nu];
            if (mu == nu) d -= rep.P[mu];
            orth = std::max(orth, interior_residual(d, 0));
        }
    }
    out.add_value("P.orthogonality", 0, orth);

    ComplexMatrix total = ComplexMatrix::Zero(rep.dim, rep.dim);
    for (const auto& p : rep.P) total += p;
    out.add("P.completeness", 0, total - one);

    std::vector<ComplexMatrix> powers;
    powers.reserve(lambda);
    for (std::size_t nu = 0; nu < lambda; ++nu) powers.push_back(rep.T_power(static_cast<long long>(nu)));

    Real from_t = 0;
    for (std::size_t mu = 0; mu < lambda; ++mu) {
        ComplexMatrix p = ComplexMatrix::Zero(rep.dim, rep.dim);
        for (std::size_t nu = 0; nu < lambda; ++nu)
            p += root_of_unity(-static_cast<long long>(mu * nu), lambda) * powers[nu];
        p /= static_cast<Real>(lambda);
        from_t = std::max(from_t, interior_residual(p - rep.P[mu], 0));
    }
    out.add_value("P.from_T", 0, from_t);

    Real from_p = 0;
    for (std::size_t nu = 0; nu < lambda; ++nu) {
        ComplexMatrix t = ComplexMatrix::Zero(rep.dim, rep.dim);
        for (std::size_t mu = 0; mu < lambda; ++mu)
            t += root_of_unity(static_cast<long long>(mu * nu), lambda) * rep.P[mu];
        from_p = std::max(from_p, interior_residual(t - powers[nu], 0));
    }
    out.add_value("T.from_P", 0, from_p);
    return out.take();
}

}  // namespace clext
