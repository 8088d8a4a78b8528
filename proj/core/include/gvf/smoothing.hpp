#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gvf/domain_graph.hpp"

namespace gvf {

struct GradientField {
    ScalarField ddx;
    ScalarField ddy;
};

/// Central differences inside the grid, one-sided first differences on the
/// boundary rows and columns. An axis of length 1 has zero derivative.
GradientField finite_diff_gradient(const Grid2D& grid, std::span<const double> field, double spacing);

/// `passes` synchronous Jacobi rounds: every free vertex becomes the mean of
/// its neighbors' previous-round values. Fixed and isolated vertices keep
/// their values bit for bit.
ScalarField constrained_smooth(const DomainGraph& g, std::span<const double> field,
                               std::span<const VertexId> fixed, std::size_t passes);

struct RelaxationResult {
    ScalarField field;
    std::size_t iterations_run = 0;
    double final_residual = 0.0;
};

/// max over free vertices of |field(u) - mean of neighbors|; 0 with no free vertex.
double harmonic_residual(const DomainGraph& g, std::span<const double> field, std::span<const VertexId> fixed);

/// Jacobi relaxation toward the discrete harmonic function with `fixed` as
/// boundary data. Stops once the residual drops below `tol` or after
/// `max_iter` rounds, whichever comes first.
RelaxationResult harmonic_relax(const DomainGraph& g, std::span<const double> field,
                                std::span<const VertexId> fixed, std::size_t max_iter, double tol);

/// Sum over edges of the squared value difference.
double laplacian_energy(const DomainGraph& g, std::span<const double> field);

}  // namespace gvf
