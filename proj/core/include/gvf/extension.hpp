#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gvf/domain_graph.hpp"
#include "gvf/error.hpp"
#include "gvf/level_space.hpp"
#include "gvf/range_tree.hpp"

namespace gvf {

/// A guiding pair (x < y) whose graph distance is smaller than the gap
/// between their levels (or tree elements).
struct FeasibilityWitness {
    VertexId x = 0;
    VertexId y = 0;
    double distance = 0.0;
    std::size_t level_gap = 0;
};

struct FeasibilityReport {
    bool feasible = true;
    std::optional<FeasibilityWitness> witness;
};

class InfeasibleError : public Error {
public:
    explicit InfeasibleError(const FeasibilityWitness& witness);
    const FeasibilityWitness& witness() const noexcept { return witness_; }

private:
    FeasibilityWitness witness_;
};

/// Level-index field F: D -> {1..n} with its chain.
class IndexField {
public:
    IndexField(std::vector<LevelIndex> indices, LevelChain chain);

    std::span<const LevelIndex> indices() const noexcept { return indices_; }
    const LevelChain& chain() const noexcept { return chain_; }
    LevelIndex operator[](VertexId v) const { return indices_[v]; }
    std::size_t size() const noexcept { return indices_.size(); }

    ScalarField values() const;

private:
    std::vector<LevelIndex> indices_;
    LevelChain chain_;
};

/// Every edge joins equal or consecutive levels.
bool is_gradually_varied(const DomainGraph& g, std::span<const LevelIndex> indices);

/// Existence test for a gradually varied extension: every guiding pair must
/// satisfy d(x, y) >= |i - j| under the hop metric. Pairs are scanned in
/// ascending (vertex, vertex) order and the first violation is the witness.
FeasibilityReport check_feasible(const DomainGraph& g, const GuidingIndices& guiding, const LevelChain& chain);

/**
 * Gradually varied extension of integer level observations.
 *
 * Non-guiding vertices are visited by increasing hop distance to the guiding
 * set, ties by vertex id. Each visited vertex u takes the floor midpoint of
 *
 *     [1, n]  ∩  ⋂_{x assigned} [F(x) - d(u, x), F(x) + d(u, x)]
 *
 * where "assigned" covers the guiding set and every vertex visited so far.
 * Keeping the whole assigned set feasible makes the interval nonempty at every
 * step, so the result is gradually varied and exact on the guiding set.
 *
 * The bounds are maintained incrementally: each assignment runs a BFS that
 * tightens lower/upper bounds and stops expanding wherever neither bound
 * changes (both bound functions are 1-Lipschitz, so nothing beyond can change).
 *
 * Throws InfeasibleError when check_feasible fails, DisconnectedDomain,
 * EmptyGuidingSet and IndexOutOfRange on bad input.
 */
IndexField gvf_extend_int(const DomainGraph& g, const GuidingIndices& guiding, const LevelChain& chain);

struct RealFit {
    ScalarField field;
    LevelChain chain;
    double delta = 0.0;  // chain spacing; 0 for a one-level chain
    std::size_t passes = 0;
};

/// Real-valued fitting: max-slope chain, quantize, integer extension,
/// dequantize, clamp to [min f, max f], restore exact observations on the
/// guiding set, then
/// `smoothing_passes` constrained Jacobi averaging rounds with J fixed.
RealFit gvf_fit_real_detailed(const DomainGraph& g, const GuidingSet& guiding, std::size_t smoothing_passes);

ScalarField gvf_fit_real(const DomainGraph& g, const GuidingSet& guiding, std::size_t smoothing_passes);

struct TreeSample {
    VertexId vertex;
    ElementId element;
};

/// Requires d_D(x, y) >= tree_distance(f(x), f(y)) for every guiding pair.
FeasibilityReport check_tree_feasible(const DomainGraph& g, const RangeTree& tree,
                                      std::span<const TreeSample> guiding);

/**
 * Gradually varied extension into a range tree. Same visiting order as
 * gvf_extend_int. The candidate set for u is the intersection of the tree
 * balls Ball(F(x), d(u, x)) over all assigned x; balls in a tree have the
 * Helly property, so the set is nonempty. The chosen element is the center of
 * the candidate set (least eccentricity within it), ties broken by depth-first
 * rank. On a chain-shaped tree this reproduces gvf_extend_int exactly.
 */
std::vector<ElementId> gvf_extend_tree(const DomainGraph& g, const RangeTree& tree,
                                       std::span<const TreeSample> guiding);

}  // namespace gvf
