#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "clext/algebra.hpp"

namespace clext {

/// Dense matrices of the algebra generators on the states |0>..|dim-1>.
///
/// The only truncation artifact is in products containing a * adag: the top
/// state loses its F(dim) contribution. Everything stored here is exact.
struct TruncatedFockRep {
    AlgebraSpec spec;
    std::size_t dim = 0;
    ComplexMatrix a;
    ComplexMatrix adag;
    ComplexMatrix num;
    ComplexMatrix T;
    std::vector<ComplexMatrix> P;

    std::size_t lambda() const { return spec.lambda; }
    ComplexMatrix identity() const { return ComplexMatrix::Identity(dim, dim); }
    const ComplexMatrix& proj(long long mu) const { return P[cyc(mu, spec.lambda)]; }
    /// T^k for any integer k (T is unitary, T^{-1} = T^{lambda-1}).
    ComplexMatrix T_power(long long k) const;
};

TruncatedFockRep build(const AlgebraSpec& spec, std::size_t dim);

/// N_n = F(1) F(2) ... F(n), the squared norm of (adag)^n |0>.
Real norm_coefficient(const AlgebraSpec& spec, std::size_t n);

/// C = F(N) - adag a (q = 1). Vanishes on the Fock representation.
ComplexMatrix casimir(const TruncatedFockRep& rep);

/// Basis indices n < dim with n = mu (mod lambda).
std::vector<std::size_t> grading_sector(const TruncatedFockRep& rep, std::size_t mu);

/// Column-major "re,im" lines, preceded by a "# name rows cols" header.
void dump_matrix(std::ostream& os, const std::string& name, const ComplexMatrix& m);

/// Looks up a generator by name: a, adag, num, T, P0..P{lambda-1}, casimir.
ComplexMatrix named_matrix(const TruncatedFockRep& rep, const std::string& name);

}  // namespace clext
