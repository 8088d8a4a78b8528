#include "gvf/domain_graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <queue>
#include <string>

#include "gvf/error.hpp"

namespace gvf {

namespace {

std::string edge_str(VertexId u, VertexId v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

double distance(const Point3& a, const Point3& b) {
    const double dx = a[0] - b[0];
    const double dy = a[1] - b[1];
    const double dz = a[2] - b[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// Coincident points would give a zero-length edge; keep weights positive.
double edge_length(const Point3& a, const Point3& b) {
    const double d = distance(a, b);
    return d > 0.0 ? d : std::numeric_limits<double>::min();
}

}  // namespace

DomainGraph::DomainGraph(std::size_t vertex_count, std::span<const Edge> edges,
                         std::optional<std::vector<double>> edge_weights,
                         std::optional<std::vector<Point3>> positions) {
    if (edge_weights && edge_weights->size() != edges.size())
        throw Error(Errc::DimensionMismatch, "edge weight count differs from edge count");
    if (positions && positions->size() != vertex_count)
        throw Error(Errc::DimensionMismatch, "position count differs from vertex count");

    // (min, max) -> weight; duplicates merged.
    std::map<Edge, double> unique;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u >= vertex_count || v >= vertex_count)
            throw Error(Errc::IndexOutOfRange, "edge " + edge_str(u, v) + " references a missing vertex");
        if (u == v) throw Error(Errc::InvalidArgument, "self-loop at vertex " + std::to_string(u));
        const double w = edge_weights ? (*edge_weights)[i] : 1.0;
        if (!(w > 0.0) || !std::isfinite(w))
            throw Error(Errc::InvalidArgument, "edge " + edge_str(u, v) + " has non-positive weight");
        auto key = std::minmax(u, v);
        auto [it, inserted] = unique.emplace(Edge{key.first, key.second}, w);
        if (!inserted && it->second != w)
            throw Error(Errc::InvalidArgument, "edge " + edge_str(u, v) + " listed with different weights");
    }

    std::vector<std::size_t> degree(vertex_count, 0);
    for (const auto& [e, w] : unique) {
        ++degree[e.first];
        ++degree[e.second];
    }
    offsets_.assign(vertex_count + 1, 0);
    for (std::size_t v = 0; v < vertex_count; ++v) offsets_[v + 1] = offsets_[v] + degree[v];

    neighbors_.resize(offsets_.back());
    if (edge_weights) weights_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    // Map order is ascending (u, v): for a fixed vertex, edges to smaller ids
    // come first, so every row is filled already sorted.
    for (const auto& [e, w] : unique) {
        neighbors_[fill[e.first]] = e.second;
        neighbors_[fill[e.second]] = e.first;
        if (edge_weights) {
            weights_[fill[e.first]] = w;
            weights_[fill[e.second]] = w;
        }
        ++fill[e.first];
        ++fill[e.second];
    }
    if (vertex_count == 0) offsets_.assign(1, 0);
    if (positions) positions_ = std::move(*positions);
}

std::span<const VertexId> DomainGraph::neighbors(VertexId v) const {
    if (v >= vertex_count()) throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v));
    return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::span<const double> DomainGraph::neighbor_weights(VertexId v) const {
    if (v >= vertex_count()) throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v));
    if (weights_.empty()) return {};
    return {weights_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool DomainGraph::has_edge(VertexId u, VertexId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

double DomainGraph::weight(VertexId u, VertexId v) const {
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) throw Error(Errc::InvalidArgument, "no edge " + edge_str(u, v));
    if (weights_.empty()) return 1.0;
    return weights_[offsets_[u] + static_cast<std::size_t>(it - nb.begin())];
}

std::vector<Edge> DomainGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (VertexId u = 0; u < vertex_count(); ++u)
        for (VertexId v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

void validate_mesh(const TriMesh& mesh) {
    const auto nv = mesh.vertices.size();
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        const auto& tri = mesh.triangles[t];
        for (VertexId i : tri)
            if (i >= nv)
                throw Error(Errc::IndexOutOfRange,
                            "triangle " + std::to_string(t) + " references vertex " + std::to_string(i));
        if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
            throw Error(Errc::DegenerateTriangle, "triangle " + std::to_string(t) + " repeats a vertex");
    }
}

std::vector<std::pair<Edge, std::vector<std::size_t>>> mesh_edge_faces(const TriMesh& mesh) {
    validate_mesh(mesh);
    std::map<Edge, std::vector<std::size_t>> faces;
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        const auto& tri = mesh.triangles[t];
        for (int k = 0; k < 3; ++k) {
            auto key = std::minmax(tri[k], tri[(k + 1) % 3]);
            auto& list = faces[Edge{key.first, key.second}];
            list.push_back(t);
            if (list.size() > 2)
                throw Error(Errc::NonManifoldEdge,
                            "edge " + edge_str(key.first, key.second) + " is shared by more than two triangles");
        }
    }
    return {faces.begin(), faces.end()};
}

DomainGraph build_grid_graph(const Grid2D& grid) {
    if (grid.width == 0 || grid.height == 0)
        throw Error(Errc::InvalidArgument, "grid dimensions must be positive");
    std::vector<Edge> edges;
    const bool diag = grid.adjacency == Adjacency::eight_neighbor;
    for (std::size_t y = 0; y < grid.height; ++y) {
        for (std::size_t x = 0; x < grid.width; ++x) {
            const VertexId v = grid.vertex_id(x, y);
            if (x + 1 < grid.width) edges.emplace_back(v, grid.vertex_id(x + 1, y));
            if (y + 1 < grid.height) edges.emplace_back(v, grid.vertex_id(x, y + 1));
            if (diag && y + 1 < grid.height) {
                if (x + 1 < grid.width) edges.emplace_back(v, grid.vertex_id(x + 1, y + 1));
                if (x > 0) edges.emplace_back(v, grid.vertex_id(x - 1, y + 1));
            }
        }
    }
    std::vector<Point3> pos(grid.size());
    for (std::size_t y = 0; y < grid.height; ++y)
        for (std::size_t x = 0; x < grid.width; ++x)
            pos[grid.vertex_id(x, y)] = {static_cast<double>(x), static_cast<double>(y), 0.0};
    return DomainGraph(grid.size(), edges, std::nullopt, std::move(pos));
}

DomainGraph build_vertex_graph(const TriMesh& mesh, EdgeLengths lengths) {
    const auto edge_faces = mesh_edge_faces(mesh);
    std::vector<Edge> edges;
    std::vector<double> weights;
    edges.reserve(edge_faces.size());
    for (const auto& [e, faces] : edge_faces) {
        edges.push_back(e);
        if (lengths == EdgeLengths::euclidean) weights.push_back(edge_length(mesh.vertices[e.first], mesh.vertices[e.second]));
    }
    std::optional<std::vector<double>> w;
    if (lengths == EdgeLengths::euclidean) w = std::move(weights);
    return DomainGraph(mesh.vertices.size(), edges, std::move(w), mesh.vertices);
}

DomainGraph build_cell_graph(const TriMesh& mesh, EdgeLengths lengths) {
    const auto edge_faces = mesh_edge_faces(mesh);
    std::vector<Point3> centroids(mesh.triangles.size());
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        Point3 c{0.0, 0.0, 0.0};
        for (VertexId i : mesh.triangles[t])
            for (int k = 0; k < 3; ++k) c[k] += mesh.vertices[i][k] / 3.0;
        centroids[t] = c;
    }
    std::vector<Edge> edges;
    std::vector<double> weights;
    for (const auto& [e, faces] : edge_faces) {
        if (faces.size() != 2) continue;
        edges.emplace_back(faces[0], faces[1]);
        if (lengths == EdgeLengths::euclidean) weights.push_back(edge_length(centroids[faces[0]], centroids[faces[1]]));
    }
    std::optional<std::vector<double>> w;
    if (lengths == EdgeLengths::euclidean) w = std::move(weights);
    return DomainGraph(mesh.triangles.size(), edges, std::move(w), std::move(centroids));
}

bool is_connected(const DomainGraph& g) {
    if (g.vertex_count() == 0) return true;
    const VertexId start = 0;
    const auto d = multi_source_distances(g, std::span<const VertexId>(&start, 1), Metric::hop);
    return std::none_of(d.begin(), d.end(), [](double x) { return x == kUnreachable; });
}

std::vector<double> multi_source_distances(const DomainGraph& g, std::span<const VertexId> sources,
                                           Metric metric) {
    if (sources.empty()) throw Error(Errc::EmptySourceSet, "at least one source is required");
    for (VertexId s : sources)
        if (s >= g.vertex_count()) throw Error(Errc::IndexOutOfRange, "source vertex " + std::to_string(s));

    std::vector<double> dist(g.vertex_count(), kUnreachable);

    if (metric == Metric::hop) {
        std::deque<VertexId> queue;
        for (VertexId s : sources) {
            if (dist[s] != 0.0) queue.push_back(s);
            dist[s] = 0.0;
        }
        while (!queue.empty()) {
            const VertexId u = queue.front();
            queue.pop_front();
            for (VertexId v : g.neighbors(u)) {
                if (dist[v] == kUnreachable) {
                    dist[v] = dist[u] + 1.0;
                    queue.push_back(v);
                }
            }
        }
        return dist;
    }

    if (!g.has_weights() && g.edge_count() > 0) throw Error(Errc::MissingWeights, "weighted metric needs edge weights");
    using Item = std::pair<double, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (VertexId s : sources) {
        dist[s] = 0.0;
        heap.emplace(0.0, s);
    }
    while (!heap.empty()) {
        auto [du, u] = heap.top();
        heap.pop();
        if (du > dist[u]) continue;
        auto nb = g.neighbors(u);
        auto wt = g.neighbor_weights(u);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            const double nd = du + wt[i];
            if (nd < dist[nb[i]]) {
                dist[nb[i]] = nd;
                heap.emplace(nd, nb[i]);
            }
        }
    }
    return dist;
}

DistanceMatrix pairwise_guiding_distances(const DomainGraph& g, std::span<const VertexId> guiding_vertices,
                                          Metric metric) {
    const auto n = guiding_vertices.size();
    {
        std::vector<VertexId> sorted(guiding_vertices.begin(), guiding_vertices.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error(Errc::DuplicateVertex, "guiding vertices must be distinct");
    }
    DistanceMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto d = multi_source_distances(g, guiding_vertices.subspan(i, 1), metric);
        for (std::size_t j = 0; j < n; ++j) {
            const double dij = d[guiding_vertices[j]];
            if (dij == kUnreachable)
                throw Error(Errc::UnreachablePair, "guiding vertices " + std::to_string(guiding_vertices[i]) +
                                                       " and " + std::to_string(guiding_vertices[j]) +
                                                       " are disconnected");
            m(i, j) = dij;
        }
    }
    // Dijkstra is exact, but symmetrize so M[i][j] == M[j][i] bitwise.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m(j, i) = m(i, j);
    return m;
}

}  // namespace gvf
