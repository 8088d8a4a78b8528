#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gvf/domain_graph.hpp"
#include "gvf/extension.hpp"
#include "gvf/level_space.hpp"
#include "gvf/range_tree.hpp"

namespace gvf {

enum class SampleMode { grid_xy, entity_id };

/// Grid cell (x, y) or entity id (y unused). Signed so that out-of-range
/// input survives parsing and is reported once bounds are known.
struct SampleLocation {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const SampleLocation&, const SampleLocation&) = default;
    friend auto operator<=>(const SampleLocation&, const SampleLocation&) = default;
};

struct SampleRecord {
    SampleLocation location;
    double value = 0.0;
    std::size_t line = 0;
};

/// `x,y,value` rows (grid_xy) or `id,value` rows (entity_id). Blank lines and
/// lines starting with '#' are skipped. Throws ParseError (with line number)
/// and DuplicateLocation.
std::vector<SampleRecord> read_samples_csv(std::istream& in, SampleMode mode);

/// Inverse of read_samples_csv: grid rows when `grid` is given, id rows otherwise.
void write_samples_csv(std::span<const Sample> samples, std::ostream& out, std::optional<Grid2D> grid = std::nullopt);

/// Bounds-checked conversion; throws OutOfBounds naming the offending line.
GuidingSet to_guiding_set(std::span<const SampleRecord> records, const Grid2D& grid);
GuidingSet to_guiding_set(std::span<const SampleRecord> records, std::size_t entity_count);

/// Tree-mode samples: the last column is an element reference `segment:ordinal`.
struct TreeSampleRecord {
    SampleLocation location;
    std::string element;
    std::size_t line = 0;
};

std::vector<TreeSampleRecord> read_tree_samples_csv(std::istream& in, SampleMode mode);
std::vector<TreeSample> to_tree_samples(std::span<const TreeSampleRecord> records, const RangeTree& tree,
                                        std::optional<Grid2D> grid, std::size_t entity_count);

/// Plain OFF with triangle faces only. Comments (#) and blank lines are
/// skipped; extra tokens after a face's three indices (colors) are ignored.
TriMesh read_off_mesh(std::istream& in);
void write_off_mesh(const TriMesh& mesh, std::ostream& out);

/// Plain PGM (P2), maxval 255, min-max rescaled with round-half-up; a constant
/// field maps to 128. Rows go y ascending, x ascending within a row.
void write_field_pgm(const Grid2D& grid, std::span<const double> field, std::ostream& out);

enum class EntityKind { grid_cell, vertex, face };

/// `id,value` rows, or `x,y,value` rows for grid cells (requires `grid`).
/// Values use the shortest decimal form that reads back exactly.
void write_field_csv(EntityKind kind, std::span<const double> field, std::ostream& out,
                     std::optional<Grid2D> grid = std::nullopt);

}  // namespace gvf
