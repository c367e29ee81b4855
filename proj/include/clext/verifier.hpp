#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "clext/fock.hpp"

namespace clext {

struct ResidualEntry {
    std::string relation;
    std::size_t word_length = 0;
    Real max_residual = 0;
    bool pass = false;
};

/// Per-relation residuals. Each relation is checked on the interior: the
/// top `word_length` basis states are masked on both sides.
struct ResidualReport {
    std::vector<ResidualEntry> entries;
    Real tolerance = 0;
    std::size_t dim = 0;
    std::string margin_policy = "mask top word-length states";

    bool all_pass() const;
    const ResidualEntry& at(const std::string& relation) const;
};

/// Diagonal 0/1 matrix keeping basis states 0..dim-1-margin.
ComplexMatrix interior_projector(std::size_t dim, std::size_t margin);

/// max |entry| of Pi_m M Pi_m, without forming the projector.
Real interior_residual(const ComplexMatrix& m, std::size_t margin);

/// T-form, P-form and Hermiticity relations of the algebra.
ResidualReport verify_defining_relations(const TruncatedFockRep& rep, Real tol = 1e-12L);

/// Projector identities and the T <-> P discrete Fourier pair (margin 0).
ResidualReport verify_projector_algebra(const TruncatedFockRep& rep, Real tol = 1e-12L);

}  // namespace clext
