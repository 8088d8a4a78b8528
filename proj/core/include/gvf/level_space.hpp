#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gvf/domain_graph.hpp"

namespace gvf {

/// 1-based position in a LevelChain.
using LevelIndex = int;

/// Strictly increasing, nonempty ladder of values A_1 < ... < A_n.
class LevelChain {
public:
    explicit LevelChain(std::vector<double> levels);

    /// The chain 1, 2, ..., n; used when samples are given as level indices.
    static LevelChain indices(std::size_t n);

    std::size_t size() const noexcept { return levels_.size(); }
    std::span<const double> levels() const noexcept { return levels_; }
    double front() const noexcept { return levels_.front(); }
    double back() const noexcept { return levels_.back(); }

    bool contains(LevelIndex i) const noexcept { return i >= 1 && static_cast<std::size_t>(i) <= levels_.size(); }

private:
    std::vector<double> levels_;
};

struct Sample {
    VertexId vertex;
    double value;
};

struct IndexedSample {
    VertexId vertex;
    LevelIndex level;
};

namespace detail {
void require_distinct(std::span<const VertexId> vertices);
}

/// Observed real values on the guiding set J. Vertex ids are distinct.
class GuidingSet {
public:
    GuidingSet() = default;
    explicit GuidingSet(std::vector<Sample> entries);

    std::span<const Sample> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    std::vector<VertexId> vertices() const;
    double min_value() const;
    double max_value() const;

private:
    std::vector<Sample> entries_;
};

/// Level-index observations on J. Ids are distinct; range against a chain is
/// checked where a chain is supplied.
class GuidingIndices {
public:
    GuidingIndices() = default;
    explicit GuidingIndices(std::vector<IndexedSample> entries);

    std::span<const IndexedSample> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    std::vector<VertexId> vertices() const;

    /// Throws IndexOutOfRange unless every index lies in [1, chain.size()].
    void validate_against(const LevelChain& chain) const;

private:
    std::vector<IndexedSample> entries_;
};

/// Uniform chain v_min + k*delta, k = 0..ceil((v_max - v_min)/delta), where
/// delta is the largest pairwise slope |f(x) - f(y)| / d(x, y). A single entry
/// or constant data gives the one-level chain {v_min}.
LevelChain levels_from_max_slope(const GuidingSet& guiding, const DistanceMatrix& distances);

/// The spacing used by levels_from_max_slope (0 for a one-level chain).
double max_slope(const GuidingSet& guiding, const DistanceMatrix& distances);

/// Nearest level; exact ties go to the lower index; out-of-range values clamp.
LevelIndex quantize(double value, const LevelChain& chain);

double dequantize(LevelIndex index, const LevelChain& chain);

GuidingIndices quantize(const GuidingSet& guiding, const LevelChain& chain);

}  // namespace gvf
