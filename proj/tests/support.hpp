#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "gvf/gvf.hpp"
#include "oracles.hpp"

namespace support {

inline gvf::DomainGraph to_domain(const oracle::SmallGraph& g) {
    std::vector<gvf::Edge> edges(g.edges.begin(), g.edges.end());
    return gvf::DomainGraph(g.n, edges);
}

inline oracle::EdgeList to_edge_list(const gvf::DomainGraph& g) {
    const auto e = g.edges();
    return oracle::EdgeList(e.begin(), e.end());
}

inline gvf::GuidingIndices to_indices(const oracle::Assignment& a) {
    std::vector<gvf::IndexedSample> s;
    for (auto [v, l] : a) s.push_back({v, l});
    return gvf::GuidingIndices(std::move(s));
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path temp_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("gvf_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace support
