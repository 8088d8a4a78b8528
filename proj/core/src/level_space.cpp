#include "gvf/level_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gvf/error.hpp"

namespace gvf {

LevelChain::LevelChain(std::vector<double> levels) : levels_(std::move(levels)) {
    if (levels_.empty()) throw Error(Errc::InvalidArgument, "level chain must be nonempty");
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        if (!std::isfinite(levels_[i])) throw Error(Errc::InvalidArgument, "level chain values must be finite");
        if (i > 0 && !(levels_[i - 1] < levels_[i]))
            throw Error(Errc::InvalidArgument, "level chain must be strictly increasing at position " +
                                                   std::to_string(i + 1));
    }
}

LevelChain LevelChain::indices(std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<double>(i + 1);
    return LevelChain(std::move(v));
}

namespace detail {

void require_distinct(std::span<const VertexId> vertices) {
    std::vector<VertexId> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
        throw Error(Errc::DuplicateVertex, "vertex " + std::to_string(*dup) + " appears twice in the guiding set");
}

}  // namespace detail

GuidingSet::GuidingSet(std::vector<Sample> entries) : entries_(std::move(entries)) {
    for (const auto& s : entries_)
        if (!std::isfinite(s.value))
            throw Error(Errc::InvalidArgument, "guiding value at vertex " + std::to_string(s.vertex) + " is not finite");
    detail::require_distinct(vertices());
}

std::vector<VertexId> GuidingSet::vertices() const {
    std::vector<VertexId> v;
    v.reserve(entries_.size());
    for (const auto& s : entries_) v.push_back(s.vertex);
    return v;
}

double GuidingSet::min_value() const {
    if (entries_.empty()) throw Error(Errc::EmptyGuidingSet, "no samples");
    return std::min_element(entries_.begin(), entries_.end(),
                            [](const Sample& a, const Sample& b) { return a.value < b.value; })
        ->value;
}

double GuidingSet::max_value() const {
    if (entries_.empty()) throw Error(Errc::EmptyGuidingSet, "no samples");
    return std::max_element(entries_.begin(), entries_.end(),
                            [](const Sample& a, const Sample& b) { return a.value < b.value; })
        ->value;
}

GuidingIndices::GuidingIndices(std::vector<IndexedSample> entries) : entries_(std::move(entries)) {
    detail::require_distinct(vertices());
}

std::vector<VertexId> GuidingIndices::vertices() const {
    std::vector<VertexId> v;
    v.reserve(entries_.size());
    for (const auto& s : entries_) v.push_back(s.vertex);
    return v;
}

void GuidingIndices::validate_against(const LevelChain& chain) const {
    for (const auto& s : entries_)
        if (!chain.contains(s.level))
            throw Error(Errc::IndexOutOfRange, "level index " + std::to_string(s.level) + " at vertex " +
                                                   std::to_string(s.vertex) + " is outside [1, " +
                                                   std::to_string(chain.size()) + "]");
}

double max_slope(const GuidingSet& guiding, const DistanceMatrix& distances) {
    if (guiding.empty()) throw Error(Errc::EmptyGuidingSet, "levels need at least one sample");
    if (distances.size() != guiding.size())
        throw Error(Errc::DimensionMismatch, "distance matrix does not match the guiding set");
    const auto e = guiding.entries();
    double delta = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            const double d = distances(i, j);
            if (!(d > 0.0) || !std::isfinite(d))
                throw Error(Errc::InvalidArgument, "pairwise distances must be finite and positive");
            delta = std::max(delta, std::abs(e[i].value - e[j].value) / d);
        }
    }
    return delta;
}

LevelChain levels_from_max_slope(const GuidingSet& guiding, const DistanceMatrix& distances) {
    const double delta = max_slope(guiding, distances);
    const double lo = guiding.min_value();
    const double hi = guiding.max_value();
    if (delta == 0.0 || lo == hi) return LevelChain({lo});

    auto steps = static_cast<std::size_t>(std::ceil((hi - lo) / delta));
    // Rounding in lo + steps*delta can land one ulp short of hi.
    if (lo + static_cast<double>(steps) * delta < hi) ++steps;
    std::vector<double> levels(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k) levels[k] = lo + static_cast<double>(k) * delta;
    return LevelChain(std::move(levels));
}

LevelIndex quantize(double value, const LevelChain& chain) {
    const auto lv = chain.levels();
    auto it = std::lower_bound(lv.begin(), lv.end(), value);
    if (it == lv.begin()) return 1;
    if (it == lv.end()) return static_cast<LevelIndex>(lv.size());
    const auto above = static_cast<LevelIndex>(it - lv.begin()) + 1;
    const double down = value - *(it - 1);
    const double up = *it - value;
    return down <= up ? above - 1 : above;
}

double dequantize(LevelIndex index, const LevelChain& chain) {
    if (!chain.contains(index))
        throw Error(Errc::IndexOutOfRange,
                    "level index " + std::to_string(index) + " outside [1, " + std::to_string(chain.size()) + "]");
    return chain.levels()[static_cast<std::size_t>(index - 1)];
}

GuidingIndices quantize(const GuidingSet& guiding, const LevelChain& chain) {
    std::vector<IndexedSample> out;
    out.reserve(guiding.size());
    for (const auto& s : guiding.entries()) out.push_back({s.vertex, quantize(s.value, chain)});
    return GuidingIndices(std::move(out));
}

}  // namespace gvf
