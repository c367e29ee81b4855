#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "clext/fock.hpp"

namespace clext {

inline constexpr Real kDefaultClusterTol = 1e-8L;

struct Level {
    std::size_t n = 0;
    Real energy = 0;
    std::size_t sector = 0;
};

struct Cluster {
    Real energy = 0;  // mean of the members
    std::size_t multiplicity = 0;
    std::vector<std::size_t> members;  // basis indices, ascending
};

struct GroundState {
    Real energy = 0;
    std::size_t multiplicity = 0;
};

/// Levels sorted by n and clusters sorted by energy cover every level.
///
/// Multiplets near the top of the truncation lose members, so statistics only
/// use clusters strictly below `cutoff_energy`: the lowest energy carried by
/// the top `cutoff_states` basis states. `ground` is the lowest such cluster.
struct SpectrumReport {
    std::vector<Level> levels;
    std::vector<Cluster> clusters;
    std::size_t cutoff_states = 0;
    Real cutoff_energy = 0;
    GroundState ground;

    /// Clusters entirely below the truncation cutoff.
    std::vector<Cluster> complete_clusters() const;
};

/// Closed-form diagonal of H0 = {adag, a} / 2, entries E_n.
RealVector hamiltonian_h0(const TruncatedFockRep& rep);

/// Diagonal of H0 + (1/2) sum_nu r_nu P_nu.
RealVector shifted_hamiltonian(const TruncatedFockRep& rep, const std::vector<Real>& r);

/// Single-linkage clustering: sorted values split wherever a gap exceeds cluster_tol.
std::vector<Cluster> degeneracy_profile(const RealVector& diag, Real cluster_tol = kDefaultClusterTol);

/// Full report for a diagonal Hamiltonian on a lambda-graded basis.
/// cutoff_states defaults to lambda * lambda (lambda times the multiplet size p+1).
SpectrumReport spectrum_report(const RealVector& diag, std::size_t lambda, Real cluster_tol = kDefaultClusterTol,
                               std::optional<std::size_t> cutoff_states = std::nullopt);

ComplexMatrix diagonal_matrix(const RealVector& diag);

}  // namespace clext
