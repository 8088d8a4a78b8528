#include "gvf/range_tree.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <map>
#include <ostream>

#include "gvf/error.hpp"
#include "text.hpp"

namespace gvf {

namespace {

bool valid_segment_id(std::string_view id) {
    if (id.empty() || id == "root") return false;
    return id.find_first_of(" \t\r\n=@:,#") == std::string_view::npos;
}

}  // namespace

RangeTree::RangeTree(std::vector<TreeSegment> segments) : segments_(std::move(segments)) {
    if (segments_.empty()) throw Error(Errc::InvalidTree, "a range tree needs at least one segment");

    std::map<std::string, std::size_t, std::less<>> index;
    std::optional<std::size_t> root;
    for (std::size_t s = 0; s < segments_.size(); ++s) {
        const auto& seg = segments_[s];
        if (!valid_segment_id(seg.id)) throw Error(Errc::InvalidTree, "invalid segment id '" + seg.id + "'");
        if (!index.emplace(seg.id, s).second) throw Error(Errc::InvalidTree, "duplicate segment id '" + seg.id + "'");
        if (seg.values.empty()) throw Error(Errc::InvalidTree, "segment '" + seg.id + "' has no values");
        for (std::size_t i = 0; i < seg.values.size(); ++i) {
            if (!std::isfinite(seg.values[i])) throw Error(Errc::InvalidTree, "segment '" + seg.id + "' has a non-finite value");
            if (i > 0 && !(seg.values[i - 1] < seg.values[i]))
                throw Error(Errc::InvalidTree, "segment '" + seg.id + "' is not strictly increasing");
        }
        if (!seg.parent) {
            if (root) throw Error(Errc::InvalidTree, "more than one root segment");
            root = s;
        }
    }
    if (!root) throw Error(Errc::InvalidTree, "no root segment");

    std::vector<std::vector<std::size_t>> children(segments_.size());
    for (std::size_t s = 0; s < segments_.size(); ++s) {
        const auto& seg = segments_[s];
        if (!seg.parent) continue;
        auto it = index.find(*seg.parent);
        if (it == index.end())
            throw Error(Errc::InvalidTree, "segment '" + seg.id + "' attaches to unknown segment '" + *seg.parent + "'");
        children[it->second].push_back(s);
    }

    segment_elements_.resize(segments_.size());
    auto add_element = [&](std::size_t seg, std::size_t ord, std::optional<ElementId> parent) {
        const ElementId e = values_.size();
        values_.push_back(segments_[seg].values[ord]);
        parent_.push_back(parent ? *parent : e);
        depth_.push_back(parent ? depth_[*parent] + 1 : 0);
        owner_.emplace_back(seg, ord);
        segment_elements_[seg].push_back(e);
        return e;
    };

    std::deque<std::size_t> queue{*root};
    std::size_t processed = 0;
    {
        std::optional<ElementId> prev;
        for (std::size_t i = 0; i < segments_[*root].values.size(); ++i) prev = add_element(*root, i, prev);
    }
    while (!queue.empty()) {
        const auto s = queue.front();
        queue.pop_front();
        ++processed;
        for (std::size_t c : children[s]) {
            const auto& child = segments_[c];
            if (child.parent_ordinal >= segments_[s].values.size())
                throw Error(Errc::InvalidTree, "segment '" + child.id + "' attaches past the end of '" + segments_[s].id + "'");
            const ElementId anchor = segment_elements_[s][child.parent_ordinal];
            if (values_[anchor] != child.values.front())
                throw Error(Errc::InvalidTree, "segment '" + child.id +
                                                   "' must start with its attachment value " +
                                                   text::format_double(values_[anchor]));
            segment_elements_[c].push_back(anchor);
            ElementId prev = anchor;
            for (std::size_t i = 1; i < child.values.size(); ++i) prev = add_element(c, i, prev);
            queue.push_back(c);
        }
    }
    if (processed != segments_.size())
        throw Error(Errc::InvalidTree, "some segments are not reachable from the root (cycle in parent links)");

    adjacency_.resize(values_.size());
    for (ElementId e = 0; e < values_.size(); ++e) {
        if (parent_[e] != e) {
            adjacency_[e].push_back(parent_[e]);
            adjacency_[parent_[e]].push_back(e);
        }
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());

    dfs_rank_.assign(values_.size(), 0);
    std::vector<ElementId> stack{0};
    std::size_t rank = 0;
    while (!stack.empty()) {
        const ElementId e = stack.back();
        stack.pop_back();
        dfs_rank_[e] = rank++;
        // Push children in descending id so the smallest is visited first.
        for (auto it = adjacency_[e].rbegin(); it != adjacency_[e].rend(); ++it)
            if (*it != parent_[e]) stack.push_back(*it);
    }
}

RangeTree RangeTree::from_chain(const LevelChain& chain, std::string id) {
    TreeSegment seg;
    seg.id = std::move(id);
    seg.values.assign(chain.levels().begin(), chain.levels().end());
    return RangeTree({std::move(seg)});
}

void RangeTree::require(ElementId e) const {
    if (e >= values_.size()) throw Error(Errc::ElementNotFound, "element " + std::to_string(e));
}

double RangeTree::value(ElementId e) const {
    require(e);
    return values_[e];
}

ElementId RangeTree::element(std::string_view segment, std::size_t ordinal) const {
    for (std::size_t s = 0; s < segments_.size(); ++s) {
        if (segments_[s].id != segment) continue;
        if (ordinal >= segment_elements_[s].size())
            throw Error(Errc::ElementNotFound, std::string(segment) + ":" + std::to_string(ordinal));
        return segment_elements_[s][ordinal];
    }
    throw Error(Errc::ElementNotFound, "unknown segment '" + std::string(segment) + "'");
}

ElementId RangeTree::element(std::string_view ref) const {
    const auto colon = ref.rfind(':');
    if (colon == std::string_view::npos)
        throw Error(Errc::ElementNotFound, "element reference '" + std::string(ref) + "' is not segment:ordinal");
    auto ord = text::parse_int<std::size_t>(ref.substr(colon + 1));
    if (!ord) throw Error(Errc::ElementNotFound, "bad ordinal in '" + std::string(ref) + "'");
    return element(ref.substr(0, colon), *ord);
}

std::string RangeTree::element_ref(ElementId e) const {
    require(e);
    return segments_[owner_[e].first].id + ":" + std::to_string(owner_[e].second);
}

std::span<const ElementId> RangeTree::neighbors(ElementId e) const {
    require(e);
    return adjacency_[e];
}

std::size_t RangeTree::distance(ElementId a, ElementId b) const {
    require(a);
    require(b);
    std::size_t d = 0;
    while (depth_[a] > depth_[b]) a = parent_[a], ++d;
    while (depth_[b] > depth_[a]) b = parent_[b], ++d;
    while (a != b) a = parent_[a], b = parent_[b], d += 2;
    return d;
}

std::size_t RangeTree::dfs_rank(ElementId e) const {
    require(e);
    return dfs_rank_[e];
}

std::size_t tree_distance(const RangeTree& tree, ElementId a, ElementId b) { return tree.distance(a, b); }

RangeTree read_range_tree(std::istream& in) {
    std::vector<TreeSegment> segments;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto body = text::trim(line);
        if (body.empty() || body.front() == '#') continue;
        const auto tok = text::tokens(body);
        if (tok.size() != 4 || tok[0] != "segment")
            throw ParseError(lineno, "expected 'segment <id> parent=<id>@<ordinal>|root values=v1,...'");
        TreeSegment seg;
        seg.id = std::string(tok[1]);
        if (!valid_segment_id(seg.id)) throw ParseError(lineno, "invalid segment id '" + seg.id + "'");

        if (tok[2].substr(0, 7) != "parent=") throw ParseError(lineno, "missing parent=");
        const auto parent = tok[2].substr(7);
        if (parent != "root") {
            const auto at = parent.find('@');
            if (at == std::string_view::npos) throw ParseError(lineno, "parent must be root or <id>@<ordinal>");
            auto ord = text::parse_int<std::size_t>(parent.substr(at + 1));
            if (!ord) throw ParseError(lineno, "bad attachment ordinal");
            seg.parent = std::string(parent.substr(0, at));
            seg.parent_ordinal = *ord;
        }

        if (tok[3].substr(0, 7) != "values=") throw ParseError(lineno, "missing values=");
        for (auto field : text::split(tok[3].substr(7), ',')) {
            auto v = text::parse_double(field);
            if (!v) throw ParseError(lineno, "bad value '" + std::string(field) + "'");
            seg.values.push_back(*v);
        }
        segments.push_back(std::move(seg));
    }
    return RangeTree(std::move(segments));
}

void write_range_tree(const RangeTree& tree, std::ostream& out) {
    for (const auto& seg : tree.segments()) {
        out << "segment " << seg.id << " parent=";
        if (seg.parent)
            out << *seg.parent << '@' << seg.parent_ordinal;
        else
            out << "root";
        out << " values=";
        for (std::size_t i = 0; i < seg.values.size(); ++i) out << (i ? "," : "") << text::format_double(seg.values[i]);
        out << '\n';
    }
}

}  // namespace gvf
