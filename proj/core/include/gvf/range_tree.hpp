#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gvf/level_space.hpp"

namespace gvf {

using ElementId = std::size_t;

/// One strictly increasing run of values. A child segment starts AT its
/// attachment element: values[0] must equal the parent's value at
/// `parent_ordinal`, and the two denote the same tree element.
struct TreeSegment {
    std::string id;
    std::optional<std::string> parent;  // nullopt for the root segment
    std::size_t parent_ordinal = 0;     // 0-based position in the parent
    std::vector<double> values;
};

/// Tree-valued range. Elements are identified by position, never by numeric
/// value, so equal values on different branches stay distinct.
class RangeTree {
public:
    explicit RangeTree(std::vector<TreeSegment> segments);

    /// Single-segment tree with the chain's levels, in order.
    static RangeTree from_chain(const LevelChain& chain, std::string id = "chain");

    std::span<const TreeSegment> segments() const noexcept { return segments_; }
    std::size_t element_count() const noexcept { return values_.size(); }

    double value(ElementId e) const;
    /// Throws ElementNotFound for an unknown segment or ordinal.
    ElementId element(std::string_view segment, std::size_t ordinal) const;
    /// Parses "segment:ordinal".
    ElementId element(std::string_view ref) const;
    /// Canonical "segment:ordinal" of the segment that introduces `e`.
    std::string element_ref(ElementId e) const;

    std::span<const ElementId> neighbors(ElementId e) const;
    std::size_t distance(ElementId a, ElementId b) const;

    /// Position of `e` in a depth-first walk from the root element that visits
    /// children in ascending element id. On a chain this is the chain order.
    std::size_t dfs_rank(ElementId e) const;

private:
    void require(ElementId e) const;

    std::vector<TreeSegment> segments_;
    std::vector<double> values_;
    std::vector<ElementId> parent_;     // parent_[root] == root
    std::vector<std::size_t> depth_;
    std::vector<std::vector<ElementId>> adjacency_;
    std::vector<std::vector<ElementId>> segment_elements_;  // per segment, per ordinal
    std::vector<std::pair<std::size_t, std::size_t>> owner_;  // element -> (segment, ordinal)
    std::vector<std::size_t> dfs_rank_;
};

std::size_t tree_distance(const RangeTree& tree, ElementId a, ElementId b);

/// Text format, one segment per line:
///   segment <id> parent=<id>@<ordinal> values=v1,v2,...
///   segment <id> parent=root values=v1,v2,...
/// Blank lines and '#' comments are skipped.
RangeTree read_range_tree(std::istream& in);
void write_range_tree(const RangeTree& tree, std::ostream& out);

}  // namespace gvf
