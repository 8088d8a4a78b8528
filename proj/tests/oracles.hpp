#pragma once

// Independent reference computations for tests. Nothing here calls the
// library's algorithms; graphs are plain edge lists.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

struct SmallGraph {
    std::string name;
    std::size_t n = 0;
    EdgeList edges;
};

inline SmallGraph path(std::size_t n) {
    SmallGraph g{"path" + std::to_string(n), n, {}};
    for (std::size_t i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

inline SmallGraph cycle(std::size_t n) {
    SmallGraph g = path(n);
    g.name = "cycle" + std::to_string(n);
    g.edges.emplace_back(0, n - 1);
    return g;
}

/// Hub 0 with `leaves` spokes.
inline SmallGraph star(std::size_t leaves) {
    SmallGraph g{"star" + std::to_string(leaves), leaves + 1, {}};
    for (std::size_t i = 1; i <= leaves; ++i) g.edges.emplace_back(0, i);
    return g;
}

inline SmallGraph complete(std::size_t n) {
    SmallGraph g{"K" + std::to_string(n), n, {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
    return g;
}

/// w x h four-neighbor grid, id = y * w + x.
inline SmallGraph grid(std::size_t w, std::size_t h) {
    SmallGraph g{"grid" + std::to_string(w) + "x" + std::to_string(h), w * h, {}};
    for (std::size_t y = 0; y < h; ++y)
        for (std::size_t x = 0; x < w; ++x) {
            if (x + 1 < w) g.edges.emplace_back(y * w + x, y * w + x + 1);
            if (y + 1 < h) g.edges.emplace_back(y * w + x, (y + 1) * w + x);
        }
    return g;
}

/// Connected catalog with at most six vertices.
inline std::vector<SmallGraph> small_catalog() {
    std::vector<SmallGraph> out;
    for (std::size_t n = 1; n <= 6; ++n) out.push_back(path(n));
    for (std::size_t n = 3; n <= 6; ++n) out.push_back(cycle(n));
    for (std::size_t k = 3; k <= 5; ++k) out.push_back(star(k));
    out.push_back(complete(4));
    out.push_back(grid(2, 3));
    return out;
}

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// All-pairs shortest paths; unit weights when `weights` is empty.
inline std::vector<std::vector<double>> floyd_warshall(std::size_t n, const EdgeList& edges,
                                                       const std::vector<double>& weights = {}) {
    std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const double w = weights.empty() ? 1.0 : weights[e];
        auto [a, b] = edges[e];
        d[a][b] = std::min(d[a][b], w);
        d[b][a] = std::min(d[b][a], w);
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

/// Single-source hop distances by plain BFS over an edge list.
inline std::vector<double> bfs(std::size_t n, const EdgeList& edges, std::size_t src) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<double> d(n, kInf);
    std::vector<std::size_t> queue{src};
    d[src] = 0.0;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t v : adj[queue[i]])
            if (d[v] == kInf) {
                d[v] = d[queue[i]] + 1.0;
                queue.push_back(v);
            }
    return d;
}

inline bool gradually_varied(const EdgeList& edges, const std::vector<int>& f) {
    for (auto [a, b] : edges)
        if (std::abs(f[a] - f[b]) > 1) return false;
    return true;
}

/// Every gradually varied map V -> {1..levels}, by odometer enumeration.
inline std::vector<std::vector<int>> all_gv_functions(std::size_t n, const EdgeList& edges, int levels) {
    std::vector<std::vector<int>> out;
    std::vector<int> f(n, 1);
    while (true) {
        if (gradually_varied(edges, f)) out.push_back(f);
        std::size_t i = 0;
        while (i < n && f[i] == levels) f[i++] = 1;
        if (i == n) break;
        ++f[i];
    }
    return out;
}

using Assignment = std::vector<std::pair<std::size_t, int>>;

inline bool extends(const std::vector<int>& f, const Assignment& a) {
    return std::all_of(a.begin(), a.end(), [&](const auto& p) { return f[p.first] == p.second; });
}

inline bool gv_extension_exists(const std::vector<std::vector<int>>& gv, const Assignment& a) {
    return std::any_of(gv.begin(), gv.end(), [&](const auto& f) { return extends(f, a); });
}

/// Straightforward version of the bound-intersection extension: every bound is
/// recomputed from scratch against all assigned vertices.
inline std::optional<std::vector<int>> reference_extend(std::size_t n, const EdgeList& edges, int levels,
                                                        const Assignment& guiding) {
    const auto d = floyd_warshall(n, edges);
    std::vector<int> f(n, 0);
    std::vector<std::size_t> assigned;
    for (auto [v, l] : guiding) {
        f[v] = l;
        assigned.push_back(v);
    }
    std::sort(assigned.begin(), assigned.end());
    std::vector<double> dj(n, kInf);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t x : assigned) dj[u] = std::min(dj[u], d[u][x]);
    std::vector<std::size_t> order;
    for (std::size_t u = 0; u < n; ++u)
        if (dj[u] != 0.0) order.push_back(u);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return dj[a] < dj[b]; });
    for (std::size_t u : order) {
        long long lo = 1, hi = levels;
        for (std::size_t x : assigned) {
            const auto dx = static_cast<long long>(d[u][x]);
            lo = std::max(lo, f[x] - dx);
            hi = std::min(hi, f[x] + dx);
        }
        if (lo > hi) return std::nullopt;
        f[u] = static_cast<int>((lo + hi) / 2);
        assigned.push_back(u);
    }
    return f;
}

/// Random connected graph: random spanning tree plus `extra` random chords.
inline SmallGraph random_connected(std::size_t n, std::size_t extra, std::mt19937_64& rng) {
    SmallGraph g{"random", n, {}};
    std::vector<std::pair<std::size_t, std::size_t>> seen;
    auto add = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        auto e = std::minmax(a, b);
        if (std::find(seen.begin(), seen.end(), std::pair(e.first, e.second)) != seen.end()) return;
        seen.emplace_back(e.first, e.second);
        g.edges.emplace_back(e.first, e.second);
    };
    for (std::size_t v = 1; v < n; ++v) add(v, std::uniform_int_distribution<std::size_t>(0, v - 1)(rng));
    for (std::size_t k = 0; k < extra && n > 1; ++k) {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        add(pick(rng), pick(rng));
    }
    return g;
}

/// Integer 1-Lipschitz field min_j (c_j + d(u, j)) for random cones; every
/// restriction of it is a feasible guiding set.
inline std::vector<int> random_gv_field(const std::vector<std::vector<double>>& d, std::size_t cones,
                                        int max_base, std::mt19937_64& rng) {
    const std::size_t n = d.size();
    std::vector<int> f(n, std::numeric_limits<int>::max());
    std::uniform_int_distribution<std::size_t> vpick(0, n - 1);
    std::uniform_int_distribution<int> lpick(1, max_base);
    for (std::size_t c = 0; c < cones; ++c) {
        const std::size_t j = vpick(rng);
        const int base = lpick(rng);
        for (std::size_t u = 0; u < n; ++u) f[u] = std::min(f[u], base + static_cast<int>(d[u][j]));
    }
    return f;
}

struct Pgm {
    std::size_t width = 0;
    std::size_t height = 0;
    int maxval = 0;
    std::vector<int> pixels;
};

/// Strict plain PGM: `P2`, width, height, maxval 255, then exactly
/// width * height integer tokens in [0, maxval]. No comments accepted.
inline std::optional<Pgm> parse_pgm_strict(const std::string& text) {
    std::istringstream in(text);
    std::string magic;
    if (!(in >> magic) || magic != "P2") return std::nullopt;
    Pgm p;
    long long w = 0, h = 0, m = 0;
    if (!(in >> w >> h >> m) || w <= 0 || h <= 0 || m != 255) return std::nullopt;
    p.width = static_cast<std::size_t>(w);
    p.height = static_cast<std::size_t>(h);
    p.maxval = static_cast<int>(m);
    std::string tok;
    while (in >> tok) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
        const long long v = std::stoll(tok);
        if (v > m) return std::nullopt;
        p.pixels.push_back(static_cast<int>(v));
    }
    if (p.pixels.size() != p.width * p.height) return std::nullopt;
    return p;
}

}  // namespace oracle
