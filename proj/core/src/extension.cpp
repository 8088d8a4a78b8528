#include "gvf/extension.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <string>

#include "gvf/smoothing.hpp"

namespace gvf {

namespace {

std::string witness_message(const FeasibilityWitness& w) {
    return "guiding vertices " + std::to_string(w.x) + " and " + std::to_string(w.y) + " are at distance " +
           std::to_string(static_cast<long long>(w.distance)) + " but their levels differ by " +
           std::to_string(w.level_gap);
}

void require_vertices(const DomainGraph& g, std::span<const VertexId> vertices) {
    for (VertexId v : vertices)
        if (v >= g.vertex_count())
            throw Error(Errc::IndexOutOfRange, "guiding vertex " + std::to_string(v) + " is not in the domain (" +
                                                   std::to_string(g.vertex_count()) + " vertices)");
}

void require_connected(const DomainGraph& g) {
    if (!is_connected(g)) throw Error(Errc::DisconnectedDomain, "the domain graph is not connected");
}

std::vector<double> hop_from(const DomainGraph& g, VertexId v) {
    return multi_source_distances(g, std::span<const VertexId>(&v, 1), Metric::hop);
}

/// Scans guiding pairs in ascending (vertex, vertex) order; `gap(i, j)` is the
/// level or tree distance between sorted entries i and j.
template <class Gap>
FeasibilityReport scan_pairs(const DomainGraph& g, std::span<const VertexId> sorted_vertices, Gap gap) {
    for (std::size_t i = 0; i + 1 < sorted_vertices.size(); ++i) {
        const auto d = hop_from(g, sorted_vertices[i]);
        for (std::size_t j = i + 1; j < sorted_vertices.size(); ++j) {
            const double dij = d[sorted_vertices[j]];
            const std::size_t need = gap(i, j);
            if (dij < static_cast<double>(need))
                return {false, FeasibilityWitness{sorted_vertices[i], sorted_vertices[j], dij, need}};
        }
    }
    return {true, std::nullopt};
}

/// Non-guiding vertices ordered by (hop distance to J, vertex id).
std::vector<VertexId> visiting_order(const DomainGraph& g, std::span<const VertexId> guiding_vertices) {
    const auto dj = multi_source_distances(g, guiding_vertices, Metric::hop);
    std::vector<VertexId> order;
    order.reserve(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (dj[v] != 0.0) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        return dj[a] != dj[b] ? dj[a] < dj[b] : a < b;
    });
    return order;
}

/// Pointwise lower/upper level bounds implied by the assigned vertices.
class IntervalBounds {
public:
    IntervalBounds(const DomainGraph& g, long long n)
        : g_(g), lo_(g.vertex_count(), 1), hi_(g.vertex_count(), n), seen_(g.vertex_count(), 0) {}

    long long lo(VertexId v) const { return lo_[v]; }
    long long hi(VertexId v) const { return hi_[v]; }

    /// Intersects every bound with [value - d(x, .), value + d(x, .)].
    void assign(VertexId x, long long value) {
        ++stamp_;
        queue_.clear();
        queue_.emplace_back(x, 0);
        seen_[x] = stamp_;
        while (!queue_.empty()) {
            auto [w, d] = queue_.front();
            queue_.pop_front();
            const long long nl = std::max(lo_[w], value - d);
            const long long nh = std::min(hi_[w], value + d);
            if (w != x && nl == lo_[w] && nh == hi_[w]) continue;
            lo_[w] = nl;
            hi_[w] = nh;
            for (VertexId z : g_.neighbors(w)) {
                if (seen_[z] == stamp_) continue;
                seen_[z] = stamp_;
                queue_.emplace_back(z, d + 1);
            }
        }
    }

private:
    const DomainGraph& g_;
    std::vector<long long> lo_;
    std::vector<long long> hi_;
    std::vector<unsigned> seen_;
    unsigned stamp_ = 0;
    std::deque<std::pair<VertexId, long long>> queue_;
};

}  // namespace

InfeasibleError::InfeasibleError(const FeasibilityWitness& witness)
    : Error(Errc::InfeasibleGuidingSet, witness_message(witness)), witness_(witness) {}

IndexField::IndexField(std::vector<LevelIndex> indices, LevelChain chain)
    : indices_(std::move(indices)), chain_(std::move(chain)) {
    for (LevelIndex i : indices_)
        if (!chain_.contains(i)) throw Error(Errc::IndexOutOfRange, "level index " + std::to_string(i));
}

ScalarField IndexField::values() const {
    ScalarField out(indices_.size());
    for (std::size_t v = 0; v < indices_.size(); ++v) out[v] = dequantize(indices_[v], chain_);
    return out;
}

bool is_gradually_varied(const DomainGraph& g, std::span<const LevelIndex> indices) {
    if (indices.size() != g.vertex_count()) throw Error(Errc::DimensionMismatch, "index field size");
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v : g.neighbors(u))
            if (std::abs(indices[u] - indices[v]) > 1) return false;
    return true;
}

FeasibilityReport check_feasible(const DomainGraph& g, const GuidingIndices& guiding, const LevelChain& chain) {
    if (guiding.empty()) throw Error(Errc::EmptyGuidingSet, "feasibility needs at least one guiding point");
    auto entries = std::vector<IndexedSample>(guiding.entries().begin(), guiding.entries().end());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.vertex < b.vertex; });
    std::vector<VertexId> vertices;
    for (const auto& e : entries) vertices.push_back(e.vertex);
    require_vertices(g, vertices);
    guiding.validate_against(chain);
    require_connected(g);
    return scan_pairs(g, vertices, [&](std::size_t i, std::size_t j) {
        return static_cast<std::size_t>(std::abs(entries[i].level - entries[j].level));
    });
}

IndexField gvf_extend_int(const DomainGraph& g, const GuidingIndices& guiding, const LevelChain& chain) {
    const auto report = check_feasible(g, guiding, chain);
    if (!report.feasible) throw InfeasibleError(*report.witness);

    const auto n = static_cast<long long>(chain.size());
    std::vector<LevelIndex> field(g.vertex_count(), 0);
    IntervalBounds bounds(g, n);

    auto entries = std::vector<IndexedSample>(guiding.entries().begin(), guiding.entries().end());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.vertex < b.vertex; });
    for (const auto& e : entries) {
        field[e.vertex] = e.level;
        bounds.assign(e.vertex, e.level);
    }

    for (VertexId u : visiting_order(g, guiding.vertices())) {
        const long long lo = bounds.lo(u);
        const long long hi = bounds.hi(u);
        if (lo > hi)
            throw Error(Errc::InternalIntervalEmpty, "empty level interval at vertex " + std::to_string(u));
        const long long pick = (lo + hi) / 2;
        field[u] = static_cast<LevelIndex>(pick);
        bounds.assign(u, pick);
    }
    return IndexField(std::move(field), chain);
}

RealFit gvf_fit_real_detailed(const DomainGraph& g, const GuidingSet& guiding, std::size_t smoothing_passes) {
    if (guiding.empty()) throw Error(Errc::EmptyGuidingSet, "fitting needs at least one sample");
    const auto vertices = guiding.vertices();
    require_vertices(g, vertices);
    require_connected(g);

    const auto distances = pairwise_guiding_distances(g, vertices, Metric::hop);
    auto chain = levels_from_max_slope(guiding, distances);
    const double delta = chain.size() > 1 ? max_slope(guiding, distances) : 0.0;

    const auto extended = gvf_extend_int(g, quantize(guiding, chain), chain);
    ScalarField field = extended.values();
    // The top chain level can overshoot the largest observation by up to delta/2.
    const double lo = guiding.min_value(), hi = guiding.max_value();
    for (double& v : field) v = std::clamp(v, lo, hi);
    for (const auto& s : guiding.entries()) field[s.vertex] = s.value;
    if (smoothing_passes > 0) field = constrained_smooth(g, field, vertices, smoothing_passes);
    return RealFit{std::move(field), std::move(chain), delta, smoothing_passes};
}

ScalarField gvf_fit_real(const DomainGraph& g, const GuidingSet& guiding, std::size_t smoothing_passes) {
    return gvf_fit_real_detailed(g, guiding, smoothing_passes).field;
}

FeasibilityReport check_tree_feasible(const DomainGraph& g, const RangeTree& tree,
                                      std::span<const TreeSample> guiding) {
    if (guiding.empty()) throw Error(Errc::EmptyGuidingSet, "feasibility needs at least one guiding point");
    std::vector<TreeSample> entries(guiding.begin(), guiding.end());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.vertex < b.vertex; });
    std::vector<VertexId> vertices;
    for (const auto& e : entries) {
        vertices.push_back(e.vertex);
        if (e.element >= tree.element_count())
            throw Error(Errc::ElementNotFound, "tree element " + std::to_string(e.element));
    }
    detail::require_distinct(vertices);
    require_vertices(g, vertices);
    require_connected(g);
    return scan_pairs(g, vertices, [&](std::size_t i, std::size_t j) {
        return tree.distance(entries[i].element, entries[j].element);
    });
}

std::vector<ElementId> gvf_extend_tree(const DomainGraph& g, const RangeTree& tree,
                                       std::span<const TreeSample> guiding) {
    const auto report = check_tree_feasible(g, tree, guiding);
    if (!report.feasible) throw InfeasibleError(*report.witness);

    std::vector<ElementId> field(g.vertex_count(), 0);
    std::vector<char> assigned(g.vertex_count(), 0);
    std::vector<VertexId> assigned_list;
    std::vector<VertexId> guiding_vertices;
    for (const auto& s : guiding) {
        field[s.vertex] = s.element;
        assigned[s.vertex] = 1;
        assigned_list.push_back(s.vertex);
        guiding_vertices.push_back(s.vertex);
    }

    std::vector<ElementId> candidates;
    for (VertexId u : visiting_order(g, guiding_vertices)) {
        const auto du = hop_from(g, u);

        // A vertex visited in BFS-layer order always has an assigned neighbor,
        // and its unit ball is one of the constraints, so it bounds the search.
        const auto nb = g.neighbors(u);
        const auto anchor = std::find_if(nb.begin(), nb.end(), [&](VertexId v) { return assigned[v] != 0; });
        if (anchor == nb.end())
            throw Error(Errc::EmptyCandidateSet, "vertex " + std::to_string(u) + " has no assigned neighbor");

        candidates.clear();
        candidates.push_back(field[*anchor]);
        for (ElementId e : tree.neighbors(field[*anchor])) candidates.push_back(e);
        std::erase_if(candidates, [&](ElementId c) {
            return std::any_of(assigned_list.begin(), assigned_list.end(), [&](VertexId x) {
                return static_cast<double>(tree.distance(c, field[x])) > du[x];
            });
        });
        if (candidates.empty())
            throw Error(Errc::EmptyCandidateSet, "no tree element fits at vertex " + std::to_string(u));

        auto eccentricity = [&](ElementId c) {
            std::size_t ecc = 0;
            for (ElementId o : candidates) ecc = std::max(ecc, tree.distance(c, o));
            return ecc;
        };
        ElementId best = candidates.front();
        std::size_t best_ecc = eccentricity(best);
        for (std::size_t k = 1; k < candidates.size(); ++k) {
            const ElementId c = candidates[k];
            const std::size_t ecc = eccentricity(c);
            if (ecc < best_ecc || (ecc == best_ecc && tree.dfs_rank(c) < tree.dfs_rank(best))) {
                best = c;
                best_ecc = ecc;
            }
        }
        field[u] = best;
        assigned[u] = 1;
        assigned_list.push_back(u);
    }
    return field;
}

}  // namespace gvf
