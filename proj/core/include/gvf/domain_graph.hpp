#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace gvf {

using VertexId = std::size_t;
using Point3 = std::array<double, 3>;
using Edge = std::pair<VertexId, VertexId>;
/// One real value per domain vertex.
using ScalarField = std::vector<double>;

/// Sentinel distance for vertices unreachable from every source.
inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

enum class Metric { hop, weighted };

/**
 * Undirected simple graph with optional positive edge weights and optional
 * vertex positions. Stored in compressed sparse rows; each neighbor list is
 * sorted ascending. Immutable after construction.
 */
class DomainGraph {
public:
    DomainGraph() = default;

    /// Builds from an undirected edge list. Duplicate edges are merged (their
    /// weights must agree); self-loops and out-of-range ids are rejected.
    DomainGraph(std::size_t vertex_count, std::span<const Edge> edges,
                std::optional<std::vector<double>> edge_weights = std::nullopt,
                std::optional<std::vector<Point3>> positions = std::nullopt);

    std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

    std::span<const VertexId> neighbors(VertexId v) const;
    /// Weights parallel to `neighbors(v)`; empty when the graph is unweighted.
    std::span<const double> neighbor_weights(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    bool has_weights() const noexcept { return !weights_.empty(); }
    bool has_positions() const noexcept { return !positions_.empty(); }
    std::span<const Point3> positions() const noexcept { return positions_; }

    /// Weight of an existing edge; 1 when the graph is unweighted.
    double weight(VertexId u, VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;

    /// Every edge once, as (u, v) with u < v, in ascending order.
    std::vector<Edge> edges() const;

private:
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> neighbors_;
    std::vector<double> weights_;
    std::vector<Point3> positions_;
};

enum class Adjacency { four_neighbor, eight_neighbor };

struct Grid2D {
    std::size_t width = 1;
    std::size_t height = 1;
    Adjacency adjacency = Adjacency::four_neighbor;

    std::size_t size() const noexcept { return width * height; }
    VertexId vertex_id(std::size_t x, std::size_t y) const noexcept { return y * width + x; }
};

using Triangle = std::array<VertexId, 3>;

struct TriMesh {
    std::vector<Point3> vertices;
    std::vector<Triangle> triangles;
};

/// Checks index range and distinct corners; throws IndexOutOfRange or
/// DegenerateTriangle. The manifold-edge condition is checked by the graph
/// builders.
void validate_mesh(const TriMesh& mesh);

/// Each undirected mesh edge (a < b) with the ascending list of triangles that
/// contain it. Throws NonManifoldEdge when an edge has more than two.
std::vector<std::pair<Edge, std::vector<std::size_t>>> mesh_edge_faces(const TriMesh& mesh);

DomainGraph build_grid_graph(const Grid2D& grid);

enum class EdgeLengths { unit, euclidean };

DomainGraph build_vertex_graph(const TriMesh& mesh, EdgeLengths lengths = EdgeLengths::unit);

/// Dual graph: vertex i is triangle i; edges join triangles sharing a mesh
/// edge. Positions are triangle centroids; with `euclidean`, edge weights are
/// centroid distances.
DomainGraph build_cell_graph(const TriMesh& mesh, EdgeLengths lengths = EdgeLengths::unit);

bool is_connected(const DomainGraph& g);

/// Distance from the nearest source to every vertex; `kUnreachable` where no
/// source reaches. Hop metric ignores weights.
std::vector<double> multi_source_distances(const DomainGraph& g, std::span<const VertexId> sources,
                                           Metric metric = Metric::hop);

/// Dense symmetric matrix of shortest-path distances between guiding vertices.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

DistanceMatrix pairwise_guiding_distances(const DomainGraph& g,
                                          std::span<const VertexId> guiding_vertices,
                                          Metric metric = Metric::hop);

}  // namespace gvf
