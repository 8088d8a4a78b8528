#include "gvf/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gvf/error.hpp"

namespace gvf {

namespace {

void require_size(const DomainGraph& g, std::span<const double> field) {
    if (field.size() != g.vertex_count())
        throw Error(Errc::DimensionMismatch, "field has " + std::to_string(field.size()) + " values for " +
                                                 std::to_string(g.vertex_count()) + " vertices");
}

std::vector<char> fixed_mask(const DomainGraph& g, std::span<const VertexId> fixed) {
    std::vector<char> mask(g.vertex_count(), 0);
    for (VertexId v : fixed) {
        if (v >= g.vertex_count()) throw Error(Errc::IndexOutOfRange, "fixed vertex " + std::to_string(v));
        mask[v] = 1;
    }
    return mask;
}

double neighbor_mean(const DomainGraph& g, std::span<const double> field, VertexId v) {
    const auto nb = g.neighbors(v);
    double sum = 0.0;
    double lo = field[nb.front()], hi = lo;
    for (VertexId w : nb) {
        sum += field[w];
        lo = std::min(lo, field[w]);
        hi = std::max(hi, field[w]);
    }
    // Rounding can push the quotient an ulp outside the neighbor range.
    return std::clamp(sum / static_cast<double>(nb.size()), lo, hi);
}

void jacobi_round(const DomainGraph& g, const std::vector<char>& mask, const ScalarField& in, ScalarField& out) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out[v] = (mask[v] || g.degree(v) == 0) ? in[v] : neighbor_mean(g, in, v);
}

double residual(const DomainGraph& g, std::span<const double> field, const std::vector<char>& mask) {
    double r = 0.0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (mask[v] || g.degree(v) == 0) continue;
        r = std::max(r, std::abs(field[v] - neighbor_mean(g, field, v)));
    }
    return r;
}

}  // namespace

GradientField finite_diff_gradient(const Grid2D& grid, std::span<const double> field, double spacing) {
    if (field.size() != grid.size())
        throw Error(Errc::DimensionMismatch, "field has " + std::to_string(field.size()) + " values for a " +
                                                 std::to_string(grid.width) + "x" + std::to_string(grid.height) +
                                                 " grid");
    if (!(spacing > 0.0)) throw Error(Errc::InvalidArgument, "spacing must be positive");

    const auto w = grid.width;
    const auto h = grid.height;
    GradientField g{ScalarField(grid.size(), 0.0), ScalarField(grid.size(), 0.0)};
    auto at = [&](std::size_t x, std::size_t y) { return field[grid.vertex_id(x, y)]; };

    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            const auto id = grid.vertex_id(x, y);
            if (w > 1) {
                if (x == 0)
                    g.ddx[id] = (at(1, y) - at(0, y)) / spacing;
                else if (x == w - 1)
                    g.ddx[id] = (at(x, y) - at(x - 1, y)) / spacing;
                else
                    g.ddx[id] = (at(x + 1, y) - at(x - 1, y)) / (2.0 * spacing);
            }
            if (h > 1) {
                if (y == 0)
                    g.ddy[id] = (at(x, 1) - at(x, 0)) / spacing;
                else if (y == h - 1)
                    g.ddy[id] = (at(x, y) - at(x, y - 1)) / spacing;
                else
                    g.ddy[id] = (at(x, y + 1) - at(x, y - 1)) / (2.0 * spacing);
            }
        }
    }
    return g;
}

ScalarField constrained_smooth(const DomainGraph& g, std::span<const double> field,
                               std::span<const VertexId> fixed, std::size_t passes) {
    require_size(g, field);
    const auto mask = fixed_mask(g, fixed);
    ScalarField cur(field.begin(), field.end());
    ScalarField next(cur.size());
    for (std::size_t p = 0; p < passes; ++p) {
        jacobi_round(g, mask, cur, next);
        cur.swap(next);
    }
    return cur;
}

double harmonic_residual(const DomainGraph& g, std::span<const double> field, std::span<const VertexId> fixed) {
    require_size(g, field);
    return residual(g, field, fixed_mask(g, fixed));
}

RelaxationResult harmonic_relax(const DomainGraph& g, std::span<const double> field,
                                std::span<const VertexId> fixed, std::size_t max_iter, double tol) {
    require_size(g, field);
    if (fixed.empty()) throw Error(Errc::EmptyFixedSet, "harmonic relaxation needs at least one fixed vertex");
    if (!(tol > 0.0)) throw Error(Errc::InvalidArgument, "tolerance must be positive");
    const auto mask = fixed_mask(g, fixed);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!mask[v] && g.degree(v) == 0)
            throw Error(Errc::IsolatedFreeVertex, "free vertex " + std::to_string(v) + " has no neighbors");

    RelaxationResult result{ScalarField(field.begin(), field.end()), 0, 0.0};
    ScalarField next(result.field.size());
    result.final_residual = residual(g, result.field, mask);
    while (result.final_residual >= tol && result.iterations_run < max_iter) {
        jacobi_round(g, mask, result.field, next);
        result.field.swap(next);
        ++result.iterations_run;
        result.final_residual = residual(g, result.field, mask);
    }
    return result;
}

double laplacian_energy(const DomainGraph& g, std::span<const double> field) {
    require_size(g, field);
    double e = 0.0;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v : g.neighbors(u))
            if (u < v) e += (field[u] - field[v]) * (field[u] - field[v]);
    return e;
}

}  // namespace gvf
