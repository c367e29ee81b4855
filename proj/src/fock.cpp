#include "clext/fock.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "clext/format.hpp"

namespace clext {

ComplexMatrix TruncatedFockRep::T_power(long long k) const {
    const std::size_t e = cyc(k, spec.lambda);
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (std::size_t n = 0; n < dim; ++n) {
        out(n, n) = std::polar(Real{1}, 2 * kPi * static_cast<Real>(cyc(static_cast<long long>(n * e), spec.lambda)) /
                                            static_cast<Real>(spec.lambda));
    }
    return out;
}

TruncatedFockRep build(const AlgebraSpec& spec, std::size_t dim) {
    if (dim == 0) throw Error(ErrorKind::InvalidDimension, "truncation dimension must be positive");

    for (std::size_t n = 1; n < dim; ++n) {
        const Real f = structure_function(spec, n);
        if (std::abs(f) <= kConstraintTol) {
            std::ostringstream os;
            os << "F(" << n << ") = 0: the representation is finite-dimensional with d = " << n
               << ", requested dim " << dim;
            throw Error(ErrorKind::DimensionTooLarge, os.str());
        }
        if (f < 0) {
            std::ostringstream os;
            os << "F(" << n << ") = " << static_cast<double>(f) << " < 0 inside the truncation";
            throw Error(ErrorKind::NonUnitaryTruncation, os.str());
        }
    }

    TruncatedFockRep rep;
    rep.spec = spec;
    rep.dim = dim;
    rep.a = ComplexMatrix::Zero(dim, dim);
    rep.num = ComplexMatrix::Zero(dim, dim);
    for (std::size_t n = 0; n < dim; ++n) {
        rep.num(n, n) = Complex(static_cast<Real>(n), 0);
        if (n > 0) rep.a(n - 1, n) = Complex(std::sqrt(structure_function(spec, n)), 0);
    }
    rep.adag = rep.a.adjoint();
    rep.T = rep.T_power(1);
    rep.P.assign(spec.lambda, ComplexMatrix::Zero(dim, dim));
    for (std::size_t n = 0; n < dim; ++n) {
        rep.P[n % spec.lambda](n, n) = Complex(1, 0);
    }
    return rep;
}

Real norm_coefficient(const AlgebraSpec& spec, std::size_t n) {
    Real out = 1;
    for (std::size_t mu = 1; mu <= n; ++mu) out *= structure_function(spec, mu);
    return out;
}

ComplexMatrix casimir(const TruncatedFockRep& rep) {
    ComplexMatrix f = ComplexMatrix::Zero(rep.dim, rep.dim);
    for (std::size_t n = 0; n < rep.dim; ++n) f(n, n) = structure_function(rep.spec, n);
    return f - rep.adag * rep.a;
}

std::vector<std::size_t> grading_sector(const TruncatedFockRep& rep, std::size_t mu) {
    if (mu >= rep.lambda()) {
        throw Error(ErrorKind::LengthMismatch,
                    "sector " + std::to_string(mu) + " out of range for lambda=" + std::to_string(rep.lambda()));
    }
    std::vector<std::size_t> out;
    for (std::size_t n = mu; n < rep.dim; n += rep.lambda()) out.push_back(n);
    return out;
}

void dump_matrix(std::ostream& os, const std::string& name, const ComplexMatrix& m) {
    os << "# " << name << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            os << format_real(static_cast<double>(m(i, j).real())) << ','
               << format_real(static_cast<double>(m(i, j).imag())) << '\n';
        }
    }
}

ComplexMatrix named_matrix(const TruncatedFockRep& rep, const std::string& name) {
    if (name == "a") return rep.a;
    if (name == "adag") return rep.adag;
    if (name == "num" || name == "N") return rep.num;
    if (name == "T") return rep.T;
    if (name == "casimir") return casimir(rep);
    if (name.size() > 1 && name[0] == 'P') {
        std::size_t mu = 0;
        try {
            mu = std::stoul(name.substr(1));
        } catch (const std::exception&) {
            throw Error(ErrorKind::ValidationError, "unknown matrix '" + name + "'");
        }
        if (mu < rep.lambda()) return rep.P[mu];
    }
    throw Error(ErrorKind::ValidationError,
                "unknown matrix '" + name + "' (expected a, adag, num, T, P0..P" + std::to_string(rep.lambda() - 1) +
                    ", casimir)");
}

}  // namespace clext
