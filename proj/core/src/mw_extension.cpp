#include "gvf/mw_extension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gvf/error.hpp"

namespace gvf {

LipschitzEstimate lipschitz_constant(const GuidingSet& guiding, const DistanceMatrix& distances) {
    if (guiding.empty()) throw Error(Errc::EmptyGuidingSet, "Lipschitz estimate needs at least one sample");
    if (distances.size() != guiding.size())
        throw Error(Errc::DimensionMismatch, "distance matrix does not match the guiding set");
    const auto e = guiding.entries();
    LipschitzEstimate est;
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            const double d = distances(i, j);
            if (!(d > 0.0) || !std::isfinite(d))
                throw Error(Errc::InvalidArgument, "pairwise distances must be finite and positive");
            const double slope = std::abs(e[i].value - e[j].value) / d;
            if (slope > est.constant) {
                est.constant = slope;
                est.witness = std::make_pair(e[i].vertex, e[j].vertex);
            }
        }
    }
    return est;
}

MwEnvelope mw_envelope(const DomainGraph& g, const GuidingSet& guiding, Metric metric,
                       std::optional<double> lipschitz_override) {
    if (guiding.empty()) throw Error(Errc::EmptyGuidingSet, "extension needs at least one sample");
    const auto vertices = guiding.vertices();
    for (VertexId v : vertices)
        if (v >= g.vertex_count()) throw Error(Errc::IndexOutOfRange, "guiding vertex " + std::to_string(v));
    if (!is_connected(g)) throw Error(Errc::DisconnectedDomain, "the domain graph is not connected");
    if (lipschitz_override && (!(*lipschitz_override >= 0.0) || !std::isfinite(*lipschitz_override)))
        throw Error(Errc::InvalidArgument, "Lipschitz constant must be finite and nonnegative");

    const auto entries = guiding.entries();
    const auto n = g.vertex_count();

    // One shortest-path sweep per sample; also yields the pairwise matrix.
    std::vector<std::vector<double>> dist;
    dist.reserve(entries.size());
    for (VertexId v : vertices) dist.push_back(multi_source_distances(g, std::span<const VertexId>(&v, 1), metric));
    DistanceMatrix pairwise(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = 0; j < entries.size(); ++j) pairwise(i, j) = std::min(dist[i][vertices[j]], dist[j][vertices[i]]);

    MwEnvelope env;
    env.lipschitz = lipschitz_constant(guiding, pairwise);
    env.constant = lipschitz_override.value_or(env.lipschitz.constant);
    const double L = env.constant;
    const bool dominates = L >= env.lipschitz.constant;

    env.inf.assign(n, 0.0);
    env.sup.assign(n, 0.0);
    for (VertexId u = 0; u < n; ++u) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < entries.size(); ++j) {
            const double reach = L * dist[j][u];
            lo = std::min(lo, entries[j].value + reach);
            hi = std::max(hi, entries[j].value - reach);
        }
        if (dominates && hi > lo) hi = lo = lo + (hi - lo) / 2.0;
        env.inf[u] = lo;
        env.sup[u] = hi;
    }
    if (dominates) {
        for (const auto& s : entries) env.inf[s.vertex] = env.sup[s.vertex] = s.value;
    }

    const double fmin = guiding.min_value();
    const double fmax = guiding.max_value();
    env.mid.resize(n);
    for (VertexId u = 0; u < n; ++u) {
        // The clamp only absorbs rounding: MID lies in [min f, max f] for any L.
        env.mid[u] = std::clamp((env.inf[u] + env.sup[u]) / 2.0, fmin, fmax);
    }
    return env;
}

ScalarField mw_inf(const DomainGraph& g, const GuidingSet& guiding, double lipschitz, Metric metric) {
    return mw_envelope(g, guiding, metric, lipschitz).inf;
}

ScalarField mw_sup(const DomainGraph& g, const GuidingSet& guiding, double lipschitz, Metric metric) {
    return mw_envelope(g, guiding, metric, lipschitz).sup;
}

ScalarField mw_mid(const DomainGraph& g, const GuidingSet& guiding, Metric metric,
                   std::optional<double> lipschitz_override) {
    return mw_envelope(g, guiding, metric, lipschitz_override).mid;
}

}  // namespace gvf
