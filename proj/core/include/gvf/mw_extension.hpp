#pragma once

#include <optional>
#include <utility>

#include "gvf/domain_graph.hpp"
#include "gvf/level_space.hpp"

namespace gvf {

struct LipschitzEstimate {
    double constant = 0.0;
    std::optional<std::pair<VertexId, VertexId>> witness;  // first pair attaining the max slope
};

/// Largest pairwise slope |f(x) - f(y)| / d(x, y) over the samples; the
/// matrix is indexed like `guiding.entries()`.
LipschitzEstimate lipschitz_constant(const GuidingSet& guiding, const DistanceMatrix& distances);

/// Graph-metric McShane-Whitney envelopes over a connected domain:
///   INF(u) = min_j f(j) + L d(u, j)
///   SUP(u) = max_j f(j) - L d(u, j)
///   MID    = (INF + SUP) / 2
///
/// When L is at least the sample-certified constant, INF and SUP equal f on
/// the guiding set and SUP <= INF everywhere. Both facts are exact in real
/// arithmetic; the implementation enforces them against rounding (guiding
/// vertices take their observed value, an ulp-level SUP > INF collapses to the
/// average). MID always lies in [min f, max f] and is clamped there.
struct MwEnvelope {
    ScalarField inf;
    ScalarField sup;
    ScalarField mid;
    LipschitzEstimate lipschitz;  // sample-certified estimate
    double constant = 0.0;        // L actually used
};

MwEnvelope mw_envelope(const DomainGraph& g, const GuidingSet& guiding, Metric metric = Metric::hop,
                       std::optional<double> lipschitz_override = std::nullopt);

ScalarField mw_inf(const DomainGraph& g, const GuidingSet& guiding, double lipschitz, Metric metric = Metric::hop);
ScalarField mw_sup(const DomainGraph& g, const GuidingSet& guiding, double lipschitz, Metric metric = Metric::hop);
ScalarField mw_mid(const DomainGraph& g, const GuidingSet& guiding, Metric metric = Metric::hop,
                   std::optional<double> lipschitz_override = std::nullopt);

}  // namespace gvf
