#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "gvf/domain_graph.hpp"
#include "gvf/error.hpp"
#include "gvf/extension.hpp"
#include "gvf/fixtures.hpp"
#include "gvf/io_formats.hpp"
#include "gvf/level_space.hpp"
#include "gvf/mw_extension.hpp"
#include "gvf/range_tree.hpp"
#include "gvf/smoothing.hpp"

namespace gvf::cli {

namespace {

enum class Space { grid, vertex, cell };
enum class Mode { int_levels, real, tree };

struct RunConfig {
    std::string grid_dims;
    std::string mesh_path;
    std::string fixture;
    std::optional<Space> space;
    Mode mode = Mode::real;
    Adjacency adjacency = Adjacency::four_neighbor;
    Metric metric = Metric::hop;
    std::size_t passes = 0;
    std::size_t max_iter = 100;
    double tol = 1e-8;
    std::string samples_path;
    std::string tree_path;
    std::string out_prefix = "gvf_out";
    std::uint64_t seed = 0;
    std::size_t count = 0;
    std::size_t levels = 0;
    bool verify = false;
};

/// Raised for bad flags or files; maps to exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Domain {
    Space space = Space::grid;
    DomainGraph graph;
    std::optional<Grid2D> grid;

    SampleMode sample_mode() const { return grid ? SampleMode::grid_xy : SampleMode::entity_id; }
    EntityKind entity_kind() const {
        switch (space) {
            case Space::grid: return EntityKind::grid_cell;
            case Space::vertex: return EntityKind::vertex;
            case Space::cell: return EntityKind::face;
        }
        return EntityKind::vertex;
    }

    std::string describe(VertexId v) const {
        if (grid) return "cell (" + std::to_string(v % grid->width) + "," + std::to_string(v / grid->width) + ")";
        return (space == Space::cell ? "face " : "vertex ") + std::to_string(v);
    }
};

Grid2D parse_grid(const std::string& dims, Adjacency adjacency) {
    const auto x = dims.find_first_of("xX");
    std::size_t w = 0, h = 0;
    try {
        if (x == std::string::npos) throw std::invalid_argument(dims);
        std::size_t used = 0;
        w = std::stoul(dims.substr(0, x), &used);
        if (used != x) throw std::invalid_argument(dims);
        h = std::stoul(dims.substr(x + 1), &used);
        if (used != dims.size() - x - 1) throw std::invalid_argument(dims);
    } catch (const std::logic_error&) {
        throw UsageError("--grid expects WxH, got '" + dims + "'");
    }
    if (w == 0 || h == 0) throw UsageError("grid dimensions must be positive");
    return Grid2D{w, h, adjacency};
}

std::ifstream open_in(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw UsageError(std::string("cannot open ") + what + " '" + path + "'");
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write '" + path + "'");
    return out;
}

TriMesh load_mesh(const std::string& path) {
    auto in = open_in(path, "mesh");
    return read_off_mesh(in);
}

Domain load_domain(const RunConfig& cfg) {
    const bool has_grid = !cfg.grid_dims.empty();
    const bool has_mesh = !cfg.mesh_path.empty();
    if (has_grid == has_mesh) throw UsageError("exactly one of --grid or --mesh is required");

    Domain d;
    if (has_grid) {
        d.space = cfg.space.value_or(Space::grid);
        if (d.space != Space::grid) throw UsageError("--space vertex|cell needs --mesh");
        if (cfg.metric == Metric::weighted) throw UsageError("--metric weighted needs a mesh domain");
        d.grid = parse_grid(cfg.grid_dims, cfg.adjacency);
        d.graph = build_grid_graph(*d.grid);
        return d;
    }
    d.space = cfg.space.value_or(Space::vertex);
    if (d.space == Space::grid) throw UsageError("--space grid needs --grid");
    const auto mesh = load_mesh(cfg.mesh_path);
    const auto lengths = cfg.metric == Metric::weighted ? EdgeLengths::euclidean : EdgeLengths::unit;
    d.graph = d.space == Space::vertex ? build_vertex_graph(mesh, lengths) : build_cell_graph(mesh, lengths);
    return d;
}

std::vector<SampleRecord> load_samples(const RunConfig& cfg, const Domain& d) {
    if (cfg.samples_path.empty()) throw UsageError("--samples is required");
    auto in = open_in(cfg.samples_path, "samples");
    return read_samples_csv(in, d.sample_mode());
}

GuidingSet load_guiding(const RunConfig& cfg, const Domain& d) {
    const auto records = load_samples(cfg, d);
    return d.grid ? to_guiding_set(records, *d.grid) : to_guiding_set(records, d.graph.vertex_count());
}

struct IntInput {
    GuidingIndices guiding;
    LevelChain chain;
};

IntInput load_int_guiding(const RunConfig& cfg, const Domain& d) {
    const auto values = load_guiding(cfg, d);
    std::vector<IndexedSample> idx;
    int top = 0;
    for (const auto& s : values.entries()) {
        if (s.value != std::floor(s.value) || s.value < 1.0 || s.value > 1e9)
            throw UsageError("int mode expects positive integer level indices; " + d.describe(s.vertex) + " has " +
                             std::to_string(s.value));
        idx.push_back({s.vertex, static_cast<LevelIndex>(s.value)});
        top = std::max(top, idx.back().level);
    }
    const std::size_t n = cfg.levels ? cfg.levels : static_cast<std::size_t>(top);
    IntInput in{GuidingIndices(std::move(idx)), LevelChain::indices(std::max<std::size_t>(n, 1))};
    in.guiding.validate_against(in.chain);
    return in;
}

struct TreeInput {
    RangeTree tree;
    std::vector<TreeSample> guiding;
};

TreeInput load_tree_input(const RunConfig& cfg, const Domain& d) {
    if (cfg.tree_path.empty()) throw UsageError("--mode tree needs --tree");
    if (cfg.samples_path.empty()) throw UsageError("--samples is required");
    auto tin = open_in(cfg.tree_path, "range tree");
    auto tree = read_range_tree(tin);
    auto sin = open_in(cfg.samples_path, "samples");
    const auto records = read_tree_samples_csv(sin, d.sample_mode());
    auto guiding = to_tree_samples(records, tree, d.grid, d.graph.vertex_count());
    return {std::move(tree), std::move(guiding)};
}

void print_infeasible(std::ostream& out, const Domain& d, const FeasibilityWitness& w, const char* gap_name) {
    out << "INFEASIBLE\n"
        << "witness: " << d.describe(w.x) << " and " << d.describe(w.y) << '\n'
        << "violated: d(x,y) = " << w.distance << " < " << gap_name << " = " << w.level_gap << '\n';
}

void write_field(const Domain& d, const ScalarField& field, const std::string& prefix, std::ostream& out) {
    {
        auto f = open_out(prefix + ".csv");
        write_field_csv(d.entity_kind(), field, f, d.grid);
    }
    out << "wrote " << prefix << ".csv\n";
    if (d.grid) {
        auto f = open_out(prefix + ".pgm");
        write_field_pgm(*d.grid, field, f);
        out << "wrote " << prefix << ".pgm\n";
    }
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
    const auto d = load_domain(cfg);
    FeasibilityReport report;
    const char* gap = "|i-j|";
    if (cfg.mode == Mode::tree) {
        const auto in = load_tree_input(cfg, d);
        report = check_tree_feasible(d.graph, in.tree, in.guiding);
        gap = "d_T(f(x),f(y))";
    } else if (cfg.mode == Mode::int_levels) {
        const auto in = load_int_guiding(cfg, d);
        report = check_feasible(d.graph, in.guiding, in.chain);
        out << "levels: " << in.chain.size() << '\n';
    } else {
        const auto values = load_guiding(cfg, d);
        if (!is_connected(d.graph)) throw Error(Errc::DisconnectedDomain, "the domain graph is not connected");
        const auto vs = values.vertices();
        const auto chain = levels_from_max_slope(values, pairwise_guiding_distances(d.graph, vs));
        report = check_feasible(d.graph, quantize(values, chain), chain);
        out << "levels: " << chain.size() << '\n';
    }
    if (!report.feasible) {
        print_infeasible(out, d, *report.witness, gap);
        return kExitInfeasible;
    }
    out << "FEASIBLE\n";
    return kExitOk;
}

int cmd_fit(const RunConfig& cfg, std::ostream& out) {
    const auto d = load_domain(cfg);
    if (cfg.mode != Mode::real && cfg.passes > 0) throw UsageError("--passes applies to real mode only");
    ScalarField field;
    try {
        if (cfg.mode == Mode::real) {
            const auto fit = gvf_fit_real_detailed(d.graph, load_guiding(cfg, d), cfg.passes);
            out << "mode: real\nlevels: " << fit.chain.size() << "\ndelta: " << fit.delta << "\npasses: " << fit.passes
                << '\n';
            field = fit.field;
        } else if (cfg.mode == Mode::int_levels) {
            const auto in = load_int_guiding(cfg, d);
            const auto ext = gvf_extend_int(d.graph, in.guiding, in.chain);
            out << "mode: int\nlevels: " << in.chain.size() << '\n';
            field = ext.values();
        } else {
            const auto in = load_tree_input(cfg, d);
            const auto ext = gvf_extend_tree(d.graph, in.tree, in.guiding);
            out << "mode: tree\nelements: " << in.tree.element_count() << '\n';
            field.resize(ext.size());
            auto f = open_out(cfg.out_prefix + "_elements.csv");
            for (std::size_t v = 0; v < ext.size(); ++v) {
                field[v] = in.tree.value(ext[v]);
                f << v << ',' << in.tree.element_ref(ext[v]) << '\n';
            }
            out << "wrote " << cfg.out_prefix << "_elements.csv\n";
        }
    } catch (const InfeasibleError& e) {
        print_infeasible(out, d, e.witness(), cfg.mode == Mode::tree ? "d_T(f(x),f(y))" : "|i-j|");
        return kExitInfeasible;
    }
    write_field(d, field, cfg.out_prefix, out);
    return kExitOk;
}

int cmd_harmonic(const RunConfig& cfg, std::ostream& out) {
    const auto d = load_domain(cfg);
    ScalarField seed;
    std::vector<VertexId> fixed;
    try {
        if (cfg.mode == Mode::real) {
            const auto guiding = load_guiding(cfg, d);
            seed = gvf_fit_real(d.graph, guiding, cfg.passes);
            fixed = guiding.vertices();
        } else if (cfg.mode == Mode::int_levels) {
            const auto in = load_int_guiding(cfg, d);
            seed = gvf_extend_int(d.graph, in.guiding, in.chain).values();
            fixed = in.guiding.vertices();
        } else {
            throw UsageError("harmonic supports --mode int or real");
        }
    } catch (const InfeasibleError& e) {
        print_infeasible(out, d, e.witness(), "|i-j|");
        return kExitInfeasible;
    }
    const auto result = harmonic_relax(d.graph, seed, fixed, cfg.max_iter, cfg.tol);
    out << "iterations_run: " << result.iterations_run << '\n'
        << "final_residual: " << result.final_residual << '\n'
        << "converged: " << (result.final_residual < cfg.tol ? "yes" : "no") << '\n';
    write_field(d, result.field, cfg.out_prefix, out);
    return kExitOk;
}

int cmd_mw(const RunConfig& cfg, std::ostream& out) {
    const auto d = load_domain(cfg);
    const auto guiding = load_guiding(cfg, d);
    const auto env = mw_envelope(d.graph, guiding, cfg.metric);
    out << "L: " << env.constant << '\n';
    if (env.lipschitz.witness)
        out << "witness: " << d.describe(env.lipschitz.witness->first) << " and "
            << d.describe(env.lipschitz.witness->second) << '\n';
    else
        out << "witness: none\n";
    write_field(d, env.inf, cfg.out_prefix + "_inf", out);
    write_field(d, env.sup, cfg.out_prefix + "_sup", out);
    write_field(d, env.mid, cfg.out_prefix + "_mid", out);

    if (cfg.verify) {
        std::size_t checked = 0;
        for (const auto& [u, v] : d.graph.edges()) {
            const double bound = env.constant * d.graph.weight(u, v);
            const double diff = std::abs(env.mid[u] - env.mid[v]);
            if (diff > bound + 1e-12 * std::max(bound, std::abs(env.mid[u]) + std::abs(env.mid[v]))) {
                out << "verify: FAILED at edge " << d.describe(u) << " - " << d.describe(v) << " (|dMID| = " << diff
                    << " > L*w = " << bound << ")\n";
                return kExitError;
            }
            ++checked;
        }
        out << "verify: edge-Lipschitz OK on " << checked << " edges\n";
    }
    return kExitOk;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
    const int sources = !cfg.grid_dims.empty() + !cfg.mesh_path.empty() + !cfg.fixture.empty();
    if (sources != 1) throw UsageError("gen needs exactly one of --grid, --mesh or --fixture");

    std::optional<Grid2D> grid;
    std::optional<TriMesh> mesh;
    if (!cfg.grid_dims.empty()) {
        grid = parse_grid(cfg.grid_dims, cfg.adjacency);
    } else if (!cfg.mesh_path.empty()) {
        mesh = load_mesh(cfg.mesh_path);
    } else {
        if (cfg.fixture == "tetrahedron")
            mesh = fixtures::tetrahedron();
        else if (cfg.fixture == "octahedron")
            mesh = fixtures::octahedron();
        else if (cfg.fixture == "sphere")
            mesh = fixtures::icosphere(2);
        else
            throw UsageError("unknown fixture '" + cfg.fixture + "' (tetrahedron, octahedron, sphere)");
        auto f = open_out(cfg.out_prefix + ".off");
        write_off_mesh(*mesh, f);
        out << "wrote " << cfg.out_prefix << ".off\n";
    }
    if (cfg.count == 0) {
        if (!cfg.fixture.empty()) return kExitOk;
        throw UsageError("--count must be positive");
    }

    const Space space = grid ? Space::grid : cfg.space.value_or(Space::vertex);
    if (grid && space != Space::grid) throw UsageError("--space vertex|cell needs a mesh");
    if (!grid && space == Space::grid) throw UsageError("--space grid needs --grid");
    const std::size_t entities = grid ? grid->size() : space == Space::vertex ? mesh->vertices.size()
                                                                              : mesh->triangles.size();
    if (cfg.count > entities)
        throw UsageError("--count " + std::to_string(cfg.count) + " exceeds the " + std::to_string(entities) +
                         " available locations");
    const auto samples = fixtures::random_samples(entities, cfg.count, cfg.seed);

    auto f = open_out(cfg.out_prefix + "_samples.csv");
    f << "# gvf gen seed=" << cfg.seed << " count=" << cfg.count << '\n';
    write_samples_csv(samples, f, grid);
    out << "wrote " << cfg.out_prefix << "_samples.csv (" << samples.size() << " samples)\n";
    return kExitOk;
}

void add_domain_options(CLI::App& sub, RunConfig& cfg) {
    sub.add_option("--grid", cfg.grid_dims, "grid domain WxH");
    sub.add_option("--mesh", cfg.mesh_path, "OFF triangle mesh domain");
    sub.add_option("--space", cfg.space, "grid | vertex | cell")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Space>{{"grid", Space::grid}, {"vertex", Space::vertex}, {"cell", Space::cell}}));
    sub.add_option("--adjacency", cfg.adjacency, "grid adjacency 4 | 8")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Adjacency>{{"4", Adjacency::four_neighbor}, {"8", Adjacency::eight_neighbor}}));
}

void add_mode_option(CLI::App& sub, RunConfig& cfg) {
    sub.add_option("--mode", cfg.mode, "int | real | tree")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Mode>{{"int", Mode::int_levels}, {"real", Mode::real}, {"tree", Mode::tree}}));
    sub.add_option("--samples", cfg.samples_path, "sample CSV");
    sub.add_option("--tree", cfg.tree_path, "range tree file (tree mode)");
    sub.add_option("--levels", cfg.levels, "chain length n for int mode (default: largest sample index)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Gradually varied reconstruction of scalar fields on graph domains", "gvf"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "test whether the samples admit a gradually varied extension");
    auto* fit = app.add_subcommand("fit", "reconstruct a field from the samples");
    auto* harmonic = app.add_subcommand("harmonic", "GVF fit followed by harmonic relaxation");
    auto* mw = app.add_subcommand("mw", "McShane-Whitney INF/SUP/MID extensions");
    auto* gen = app.add_subcommand("gen", "write a deterministic synthetic fixture");

    for (auto* sub : {check, fit, harmonic, mw, gen}) add_domain_options(*sub, cfg);
    for (auto* sub : {check, fit, harmonic}) add_mode_option(*sub, cfg);
    for (auto* sub : {fit, harmonic, mw, gen}) sub->add_option("--out", cfg.out_prefix, "output path prefix");
    for (auto* sub : {fit, harmonic}) sub->add_option("--passes", cfg.passes, "constrained smoothing passes");
    harmonic->add_option("--max-iter", cfg.max_iter, "relaxation iteration cap")->capture_default_str();
    harmonic->add_option("--tol", cfg.tol, "residual tolerance")->capture_default_str()->check(CLI::PositiveNumber);
    mw->add_option("--samples", cfg.samples_path, "sample CSV");
    mw->add_option("--metric", cfg.metric, "hop | weighted")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Metric>{{"hop", Metric::hop}, {"weighted", Metric::weighted}}));
    mw->add_flag("--verify", cfg.verify, "re-check the edge-Lipschitz bound of MID");
    gen->add_option("--seed", cfg.seed, "generator seed");
    gen->add_option("--count", cfg.count, "number of samples");
    gen->add_option("--fixture", cfg.fixture, "tetrahedron | octahedron | sphere (320 faces)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "gvf: " << e.what() << '\n';
        return kExitError;
    }

    try {
        if (check->parsed()) return cmd_check(cfg, out);
        if (fit->parsed()) return cmd_fit(cfg, out);
        if (harmonic->parsed()) return cmd_harmonic(cfg, out);
        if (mw->parsed()) return cmd_mw(cfg, out);
        return cmd_gen(cfg, out);
    } catch (const InfeasibleError& e) {
        err << "gvf: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::exception& e) {
        err << "gvf: " << e.what() << '\n';
        return kExitError;
    }
}

}  // namespace gvf::cli
