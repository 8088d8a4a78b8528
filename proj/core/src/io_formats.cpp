#include "gvf/io_formats.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>

#include "gvf/error.hpp"
#include "text.hpp"

namespace gvf {

namespace {

std::string location_str(const SampleLocation& loc, SampleMode mode) {
    if (mode == SampleMode::grid_xy) return "(" + std::to_string(loc.x) + ", " + std::to_string(loc.y) + ")";
    return std::to_string(loc.x);
}

/// Reads data lines, splitting on commas; `row` receives (fields, line number).
template <class Row>
void for_each_row(std::istream& in, std::size_t expected_fields, Row row) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto body = text::trim(line);
        if (body.empty() || body.front() == '#') continue;
        const auto fields = text::split(body, ',');
        if (fields.size() != expected_fields)
            throw ParseError(lineno, "expected " + std::to_string(expected_fields) + " comma-separated fields, got " +
                                         std::to_string(fields.size()));
        row(fields, lineno);
    }
}

SampleLocation parse_location(const std::vector<std::string_view>& fields, SampleMode mode, std::size_t lineno) {
    SampleLocation loc;
    auto x = text::parse_int<std::int64_t>(fields[0]);
    if (!x) throw ParseError(lineno, "bad integer '" + std::string(fields[0]) + "'");
    loc.x = *x;
    if (mode == SampleMode::grid_xy) {
        auto y = text::parse_int<std::int64_t>(fields[1]);
        if (!y) throw ParseError(lineno, "bad integer '" + std::string(fields[1]) + "'");
        loc.y = *y;
    }
    return loc;
}

VertexId resolve(const SampleLocation& loc, std::size_t line, const std::optional<Grid2D>& grid,
                 std::size_t entity_count) {
    if (grid) {
        if (loc.x < 0 || loc.y < 0 || static_cast<std::size_t>(loc.x) >= grid->width ||
            static_cast<std::size_t>(loc.y) >= grid->height)
            throw ParseError(Errc::OutOfBounds, line,
                             "cell " + location_str(loc, SampleMode::grid_xy) + " is outside the " +
                                 std::to_string(grid->width) + "x" + std::to_string(grid->height) + " grid");
        return grid->vertex_id(static_cast<std::size_t>(loc.x), static_cast<std::size_t>(loc.y));
    }
    if (loc.x < 0 || static_cast<std::size_t>(loc.x) >= entity_count)
        throw ParseError(Errc::OutOfBounds, line,
                         "id " + std::to_string(loc.x) + " is outside [0, " + std::to_string(entity_count) + ")");
    return static_cast<VertexId>(loc.x);
}

}  // namespace

std::vector<SampleRecord> read_samples_csv(std::istream& in, SampleMode mode) {
    std::vector<SampleRecord> out;
    std::set<SampleLocation> seen;
    const std::size_t fields = mode == SampleMode::grid_xy ? 3 : 2;
    for_each_row(in, fields, [&](const std::vector<std::string_view>& f, std::size_t lineno) {
        SampleRecord rec;
        rec.location = parse_location(f, mode, lineno);
        auto v = text::parse_double(f.back());
        if (!v) throw ParseError(lineno, "bad value '" + std::string(f.back()) + "'");
        rec.value = *v;
        rec.line = lineno;
        if (!seen.insert(rec.location).second)
            throw ParseError(Errc::DuplicateLocation, lineno,
                             "location " + location_str(rec.location, mode) + " appears more than once");
        out.push_back(rec);
    });
    return out;
}

void write_samples_csv(std::span<const Sample> samples, std::ostream& out, std::optional<Grid2D> grid) {
    for (const auto& s : samples) {
        if (grid)
            out << s.vertex % grid->width << ',' << s.vertex / grid->width << ',';
        else
            out << s.vertex << ',';
        out << text::format_double(s.value) << '\n';
    }
}

GuidingSet to_guiding_set(std::span<const SampleRecord> records, const Grid2D& grid) {
    std::vector<Sample> s;
    s.reserve(records.size());
    for (const auto& r : records) s.push_back({resolve(r.location, r.line, grid, 0), r.value});
    return GuidingSet(std::move(s));
}

GuidingSet to_guiding_set(std::span<const SampleRecord> records, std::size_t entity_count) {
    std::vector<Sample> s;
    s.reserve(records.size());
    for (const auto& r : records) s.push_back({resolve(r.location, r.line, std::nullopt, entity_count), r.value});
    return GuidingSet(std::move(s));
}

std::vector<TreeSampleRecord> read_tree_samples_csv(std::istream& in, SampleMode mode) {
    std::vector<TreeSampleRecord> out;
    std::set<SampleLocation> seen;
    const std::size_t fields = mode == SampleMode::grid_xy ? 3 : 2;
    for_each_row(in, fields, [&](const std::vector<std::string_view>& f, std::size_t lineno) {
        TreeSampleRecord rec;
        rec.location = parse_location(f, mode, lineno);
        if (f.back().find(':') == std::string_view::npos)
            throw ParseError(lineno, "expected an element reference segment:ordinal, got '" + std::string(f.back()) + "'");
        rec.element = std::string(f.back());
        rec.line = lineno;
        if (!seen.insert(rec.location).second)
            throw ParseError(Errc::DuplicateLocation, lineno,
                             "location " + location_str(rec.location, mode) + " appears more than once");
        out.push_back(std::move(rec));
    });
    return out;
}

std::vector<TreeSample> to_tree_samples(std::span<const TreeSampleRecord> records, const RangeTree& tree,
                                        std::optional<Grid2D> grid, std::size_t entity_count) {
    std::vector<TreeSample> out;
    out.reserve(records.size());
    for (const auto& r : records) {
        ElementId e = 0;
        try {
            e = tree.element(r.element);
        } catch (const Error& err) {
            throw ParseError(err.code(), r.line, err.what());
        }
        out.push_back({resolve(r.location, r.line, grid, entity_count), e});
    }
    return out;
}

TriMesh read_off_mesh(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto next = [&]() -> std::optional<std::vector<std::string_view>> {
        while (std::getline(in, line)) {
            ++lineno;
            auto body = text::trim(line);
            const auto hash = body.find('#');
            if (hash != std::string_view::npos) body = text::trim(body.substr(0, hash));
            if (!body.empty()) return text::tokens(body);
        }
        return std::nullopt;
    };

    auto header = next();
    if (!header || (*header)[0] != "OFF") throw ParseError(header ? lineno : 1, "missing OFF header");
    // Counts may share the header line ("OFF 8 6 0").
    std::vector<std::string_view> counts(header->begin() + 1, header->end());
    if (counts.empty()) {
        auto c = next();
        if (!c) throw ParseError(lineno + 1, "missing vertex/face/edge counts");
        counts = *c;
    }
    if (counts.size() < 2 || counts.size() > 3) throw ParseError(lineno, "expected counts 'V F E'");
    auto nv = text::parse_int<std::size_t>(counts[0]);
    auto nf = text::parse_int<std::size_t>(counts[1]);
    if (!nv || !nf) throw ParseError(lineno, "bad vertex or face count");

    TriMesh mesh;
    mesh.vertices.reserve(*nv);
    for (std::size_t i = 0; i < *nv; ++i) {
        auto tok = next();
        if (!tok) throw ParseError(lineno + 1, "expected " + std::to_string(*nv) + " vertices, found " + std::to_string(i));
        if (tok->size() < 3) throw ParseError(lineno, "vertex needs three coordinates");
        Point3 p{};
        for (int k = 0; k < 3; ++k) {
            auto v = text::parse_double((*tok)[k]);
            if (!v) throw ParseError(lineno, "bad coordinate '" + std::string((*tok)[k]) + "'");
            p[k] = *v;
        }
        mesh.vertices.push_back(p);
    }
    mesh.triangles.reserve(*nf);
    for (std::size_t i = 0; i < *nf; ++i) {
        auto tok = next();
        if (!tok) throw ParseError(lineno + 1, "expected " + std::to_string(*nf) + " faces, found " + std::to_string(i));
        auto arity = text::parse_int<std::size_t>((*tok)[0]);
        if (!arity) throw ParseError(lineno, "bad face vertex count '" + std::string((*tok)[0]) + "'");
        if (*arity != 3) throw ParseError(Errc::NonTriangleFace, lineno, "face with " + std::to_string(*arity) + " vertices");
        if (tok->size() < 4) throw ParseError(lineno, "face needs three vertex indices");
        Triangle t{};
        for (int k = 0; k < 3; ++k) {
            auto idx = text::parse_int<std::size_t>((*tok)[k + 1]);
            if (!idx) throw ParseError(lineno, "bad vertex index '" + std::string((*tok)[k + 1]) + "'");
            if (*idx >= *nv)
                throw ParseError(Errc::IndexOutOfRange, lineno,
                                 "vertex index " + std::to_string(*idx) + " >= " + std::to_string(*nv));
            t[k] = *idx;
        }
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
            throw ParseError(Errc::DegenerateTriangle, lineno, "face repeats a vertex");
        mesh.triangles.push_back(t);
    }
    return mesh;
}

void write_off_mesh(const TriMesh& mesh, std::ostream& out) {
    out << "OFF\n" << mesh.vertices.size() << ' ' << mesh.triangles.size() << " 0\n";
    for (const auto& p : mesh.vertices)
        out << text::format_double(p[0]) << ' ' << text::format_double(p[1]) << ' ' << text::format_double(p[2]) << '\n';
    for (const auto& t : mesh.triangles) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

void write_field_pgm(const Grid2D& grid, std::span<const double> field, std::ostream& out) {
    if (field.size() != grid.size())
        throw Error(Errc::DimensionMismatch, "field has " + std::to_string(field.size()) + " values for a " +
                                                 std::to_string(grid.width) + "x" + std::to_string(grid.height) +
                                                 " grid");
    const auto [lo, hi] = std::minmax_element(field.begin(), field.end());
    const double min = *lo;
    const double range = *hi - *lo;
    out << "P2\n" << grid.width << ' ' << grid.height << "\n255\n";
    for (std::size_t y = 0; y < grid.height; ++y) {
        for (std::size_t x = 0; x < grid.width; ++x) {
            int pixel = 128;
            if (range > 0.0) {
                const double scaled = (field[grid.vertex_id(x, y)] - min) / range * 255.0;
                pixel = std::clamp(static_cast<int>(std::floor(scaled + 0.5)), 0, 255);
            }
            out << (x ? " " : "") << pixel;
        }
        out << '\n';
    }
}

void write_field_csv(EntityKind kind, std::span<const double> field, std::ostream& out, std::optional<Grid2D> grid) {
    if (kind == EntityKind::grid_cell) {
        if (!grid) throw Error(Errc::InvalidArgument, "grid cell output needs the grid dimensions");
        if (field.size() != grid->size()) throw Error(Errc::DimensionMismatch, "field does not match the grid");
        for (std::size_t y = 0; y < grid->height; ++y)
            for (std::size_t x = 0; x < grid->width; ++x)
                out << x << ',' << y << ',' << text::format_double(field[grid->vertex_id(x, y)]) << '\n';
        return;
    }
    for (std::size_t i = 0; i < field.size(); ++i) out << i << ',' << text::format_double(field[i]) << '\n';
}

}  // namespace gvf
