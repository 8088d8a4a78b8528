#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gvf/domain_graph.hpp"
#include "gvf/level_space.hpp"

// Deterministic synthetic domains and sample sets for demos, tests and
// benchmarks. Identical seeds give identical output on a given platform.
namespace gvf::fixtures {

TriMesh tetrahedron();
TriMesh octahedron();

/// Icosahedron refined `subdivisions` times by 1-to-4 splitting, projected to
/// the unit sphere: 20 * 4^k faces (k = 2 gives 320).
TriMesh icosphere(unsigned subdivisions);

/// cols x rows quads, each split along a random diagonal, with jittered
/// interior vertices. 2 * cols * rows faces.
TriMesh triangulated_grid(std::size_t cols, std::size_t rows, std::uint64_t seed);

/// `count` distinct vertices out of `vertex_count` with values uniform in
/// [lo, hi], rounded to three decimals. Throws InvalidArgument when
/// count > vertex_count or count == 0.
std::vector<Sample> random_samples(std::size_t vertex_count, std::size_t count, std::uint64_t seed,
                                   double lo = 0.0, double hi = 100.0);

}  // namespace gvf::fixtures
