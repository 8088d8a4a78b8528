#include "gvf/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "gvf/error.hpp"

namespace gvf::fixtures {

TriMesh tetrahedron() {
    return {{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}},
            {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}}};
}

TriMesh octahedron() {
    return {{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}},
            {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4}, {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}}};
}

TriMesh icosphere(unsigned subdivisions) {
    const double t = (1.0 + std::sqrt(5.0)) / 2.0;
    TriMesh mesh;
    mesh.vertices = {{-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t}, {0, 1, t},
                     {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
    mesh.triangles = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
                      {11, 10, 2}, {10, 7, 6}, {7, 1, 8},   {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
                      {3, 8, 9},  {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};
    auto normalize = [](Point3 p) {
        const double n = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        return Point3{p[0] / n, p[1] / n, p[2] / n};
    };
    for (auto& p : mesh.vertices) p = normalize(p);

    for (unsigned s = 0; s < subdivisions; ++s) {
        std::map<Edge, VertexId> midpoints;
        auto midpoint = [&](VertexId a, VertexId b) {
            const Edge key{std::min(a, b), std::max(a, b)};
            auto it = midpoints.find(key);
            if (it != midpoints.end()) return it->second;
            const auto& pa = mesh.vertices[a];
            const auto& pb = mesh.vertices[b];
            mesh.vertices.push_back(normalize({(pa[0] + pb[0]) / 2, (pa[1] + pb[1]) / 2, (pa[2] + pb[2]) / 2}));
            return midpoints[key] = mesh.vertices.size() - 1;
        };
        std::vector<Triangle> refined;
        refined.reserve(mesh.triangles.size() * 4);
        for (const auto& [a, b, c] : mesh.triangles) {
            const auto ab = midpoint(a, b);
            const auto bc = midpoint(b, c);
            const auto ca = midpoint(c, a);
            refined.push_back({a, ab, ca});
            refined.push_back({b, bc, ab});
            refined.push_back({c, ca, bc});
            refined.push_back({ab, bc, ca});
        }
        mesh.triangles = std::move(refined);
    }
    return mesh;
}

TriMesh triangulated_grid(std::size_t cols, std::size_t rows, std::uint64_t seed) {
    if (cols == 0 || rows == 0) throw Error(Errc::InvalidArgument, "grid mesh needs positive dimensions");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-0.25, 0.25);
    std::bernoulli_distribution flip(0.5);
    TriMesh mesh;
    auto id = [&](std::size_t x, std::size_t y) { return y * (cols + 1) + x; };
    for (std::size_t y = 0; y <= rows; ++y) {
        for (std::size_t x = 0; x <= cols; ++x) {
            const bool interior = x > 0 && y > 0 && x < cols && y < rows;
            mesh.vertices.push_back({static_cast<double>(x) + (interior ? jitter(rng) : 0.0),
                                     static_cast<double>(y) + (interior ? jitter(rng) : 0.0), 0.0});
        }
    }
    for (std::size_t y = 0; y < rows; ++y) {
        for (std::size_t x = 0; x < cols; ++x) {
            const auto a = id(x, y), b = id(x + 1, y), c = id(x + 1, y + 1), d = id(x, y + 1);
            if (flip(rng)) {
                mesh.triangles.push_back({a, b, c});
                mesh.triangles.push_back({a, c, d});
            } else {
                mesh.triangles.push_back({a, b, d});
                mesh.triangles.push_back({b, c, d});
            }
        }
    }
    return mesh;
}

std::vector<Sample> random_samples(std::size_t vertex_count, std::size_t count, std::uint64_t seed, double lo,
                                   double hi) {
    if (count == 0) throw Error(Errc::InvalidArgument, "sample count must be positive");
    if (count > vertex_count)
        throw Error(Errc::InvalidArgument, "cannot draw " + std::to_string(count) + " distinct samples from " +
                                               std::to_string(vertex_count) + " vertices");
    std::mt19937_64 rng(seed);
    std::vector<VertexId> ids(vertex_count);
    std::iota(ids.begin(), ids.end(), VertexId{0});
    // Partial Fisher-Yates with an explicit index draw keeps the sequence
    // independent of std::shuffle's implementation.
    for (std::size_t i = 0; i < count; ++i) {
        const auto j = i + static_cast<std::size_t>(rng() % (vertex_count - i));
        std::swap(ids[i], ids[j]);
    }
    std::vector<Sample> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        out.push_back({ids[i], std::round((lo + (hi - lo) * u) * 1000.0) / 1000.0});
    }
    std::sort(out.begin(), out.end(), [](const Sample& a, const Sample& b) { return a.vertex < b.vertex; });
    return out;
}

}  // namespace gvf::fixtures
