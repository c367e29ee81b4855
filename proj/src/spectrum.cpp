#include "clext/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace clext {

RealVector hamiltonian_h0(const TruncatedFockRep& rep) {
    RealVector out(static_cast<Eigen::Index>(rep.dim));
    for (std::size_t n = 0; n < rep.dim; ++n) {
        const Real e = energy_level(rep.spec, n);
        const Real half_sum = (structure_function(rep.spec, n) + structure_function(rep.spec, n + 1)) / 2;
        if (std::abs(e - half_sum) > 1e-12L * std::max(Real{1}, std::abs(e))) {
            std::ostringstream os;
            os << "E_" << n << " = " << static_cast<double>(e) << " disagrees with (F(n)+F(n+1))/2 = "
               << static_cast<double>(half_sum);
            throw std::logic_error(os.str());
        }
        out(static_cast<Eigen::Index>(n)) = e;
    }
    return out;
}

RealVector shifted_hamiltonian(const TruncatedFockRep& rep, const std::vector<Real>& r) {
    if (r.size() != rep.lambda()) {
        throw Error(ErrorKind::LengthMismatch,
                    "expected " + std::to_string(rep.lambda()) + " sector shifts, got " + std::to_string(r.size()));
    }
    RealVector out = hamiltonian_h0(rep);
    for (std::size_t n = 0; n < rep.dim; ++n) out(static_cast<Eigen::Index>(n)) += r[n % rep.lambda()] / 2;
    return out;
}

std::vector<Cluster> degeneracy_profile(const RealVector& diag, Real cluster_tol) {
    std::vector<std::size_t> order(static_cast<std::size_t>(diag.size()));
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i : order) {
        if (!std::isfinite(diag(static_cast<Eigen::Index>(i)))) {
            throw std::invalid_argument("degeneracy_profile: non-finite entry at index " + std::to_string(i));
        }
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return diag(static_cast<Eigen::Index>(x)) < diag(static_cast<Eigen::Index>(y));
    });

    std::vector<Cluster> out;
    Real previous = 0;
    for (std::size_t idx : order) {
        const Real value = diag(static_cast<Eigen::Index>(idx));
        if (out.empty() || value - previous > cluster_tol) out.emplace_back();
        out.back().members.push_back(idx);
        previous = value;
    }
    for (auto& c : out) {
        Real sum = 0;
        for (std::size_t idx : c.members) sum += diag(static_cast<Eigen::Index>(idx));
        c.multiplicity = c.members.size();
        c.energy = sum / static_cast<Real>(c.multiplicity);
        std::sort(c.members.begin(), c.members.end());
    }
    return out;
}

std::vector<Cluster> SpectrumReport::complete_clusters() const {
    std::vector<Cluster> out;
    for (const auto& c : clusters) {
        const bool below = std::all_of(c.members.begin(), c.members.end(),
                                       [&](std::size_t n) { return levels[n].energy < cutoff_energy; });
        if (below) out.push_back(c);
    }
    return out;
}

SpectrumReport spectrum_report(const RealVector& diag, std::size_t lambda, Real cluster_tol,
                               std::optional<std::size_t> cutoff_states) {
    SpectrumReport out;
    const auto dim = static_cast<std::size_t>(diag.size());
    out.levels.reserve(dim);
    for (std::size_t n = 0; n < dim; ++n) out.levels.push_back({n, diag(static_cast<Eigen::Index>(n)), n % lambda});
    out.clusters = degeneracy_profile(diag, cluster_tol);
    out.cutoff_states = std::min(dim, cutoff_states.value_or(lambda * lambda));

    out.cutoff_energy = std::numeric_limits<Real>::infinity();
    for (std::size_t n = dim - out.cutoff_states; n < dim; ++n) out.cutoff_energy = std::min(out.cutoff_energy, out.levels[n].energy);
    // keep exact ties with the cutoff out of the complete set
    out.cutoff_energy -= cluster_tol;

    const auto complete = out.complete_clusters();
    if (!complete.empty()) out.ground = {complete.front().energy, complete.front().multiplicity};
    return out;
}

ComplexMatrix diagonal_matrix(const RealVector& diag) {
    const auto dim = diag.size();
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index n = 0; n < dim; ++n) out(n, n) = Complex(diag(n), 0);
    return out;
}

}  // namespace clext
