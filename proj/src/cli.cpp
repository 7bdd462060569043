#include "rrgd/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rrgd/analysis.hpp"
#include "rrgd/bench.hpp"
#include "rrgd/init_layout.hpp"
#include "rrgd/io.hpp"
#include "rrgd/metrics.hpp"
#include "rrgd/optimizer.hpp"

namespace rrgd {

namespace {

namespace fs = std::filesystem;

OpacityMode parse_mode(const std::string& name, double eps) {
    if (name == "det") return OpacityMode::deterministic();
    if (name == "rand") return OpacityMode::randomized(eps);
    throw std::invalid_argument("unknown opacity mode '" + name + "' (expected det or rand)");
}

struct LayoutOptions {
    std::string graph;
    std::string init{"random"};
    std::string mode{"det"};
    double eps_rand{0.05};
    std::size_t rays{10};
    std::size_t ray_size{10};
    std::optional<double> delta_e;
    double pw{0.1};
    std::uint64_t seed{0};
    std::size_t max_iter{0};
    std::string out;
    std::string svg;
    std::string trace;
};

int run_layout(const LayoutOptions& o, std::ostream& out) {
    const LabeledGraph lg = read_graph_file(o.graph);
    const InitKind init = parse_init_kind(o.init);

    EngineConfig cfg;
    cfg.rays = o.rays;
    cfg.ray.ray_size = o.ray_size;
    cfg.ray.mode = parse_mode(o.mode, o.eps_rand);
    cfg.delta_e = o.delta_e;
    cfg.prohibition_ratio = o.pw;
    cfg.seed = o.seed;
    cfg.max_outer_iterations = o.max_iter;
    cfg.validate();

    Rng init_rng(derive_seed(o.seed, {0}));
    const Drawing d0 = init_layout(lg.graph, init, init_rng);
    const RunResult res = rrgd(lg.graph, d0, cfg);
    const RunStats& st = res.stats;
    const ResolvedConfig& rc = st.resolved;

    DrawingDocument doc{lg.graph, res.drawing, lg.labels, {}};
    nlohmann::ordered_json config;
    config["init"] = o.init;
    config["mode"] = o.mode;
    config["eps_rand"] = o.eps_rand;
    config["rays"] = o.rays;
    config["ray_size"] = o.ray_size;
    config["delta_e"] = rc.delta_e;
    config["pw_ratio"] = o.pw;
    config["window"] = rc.window;
    config["theta0"] = cfg.theta0.value();
    config["rest_length"] = rc.energy.rest_length;
    config["stiffness"] = rc.energy.stiffness;
    doc.metadata["seed"] = o.seed;
    doc.metadata["config"] = config;
    doc.metadata["initial_cr"] = st.initial_crossings();
    doc.metadata["final_cr"] = st.final_crossings();
    doc.metadata["energy"] = st.final_energy();
    doc.metadata["moves"] = st.moves();
    doc.metadata["outer_iterations"] = st.outer_iterations;
    doc.metadata["termination"] =
        st.termination == Termination::converged ? "converged" : "safety_cap";

    if (!o.out.empty()) write_text_file(o.out, write_drawing(doc));
    if (!o.svg.empty()) write_text_file(o.svg, write_svg(lg.graph, res.drawing));
    if (!o.trace.empty()) write_text_file(o.trace, write_trace(st));

    out << "vertices " << lg.graph.vertex_count() << " edges " << lg.graph.edge_count() << "\n"
        << "crossings " << st.initial_crossings() << " -> " << st.final_crossings() << "\n"
        << "energy " << format_double(st.final_energy()) << "\n"
        << "moves " << st.moves() << " outer_iterations " << st.outer_iterations << "\n"
        << "termination "
        << (st.termination == Termination::converged ? "converged" : "safety_cap") << "\n"
        << "seconds " << st.wall_seconds << "\n";
    return st.termination == Termination::converged ? 0 : 2;
}

// "3conn:N[:COUNT]" generates COUNT 3-connected graphs with N vertices.
std::optional<std::vector<BenchCase>> generated_corpus(const std::string& spec, std::uint64_t seed) {
    const std::string prefix = "3conn:";
    if (spec.rfind(prefix, 0) != 0) return std::nullopt;
    std::size_t n = 0;
    std::size_t count = 1;
    const std::string rest = spec.substr(prefix.size());
    const auto colon = rest.find(':');
    auto parse = [&](std::string_view s, std::size_t& v) {
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size()) {
            throw std::invalid_argument("bad generator spec '" + spec + "' (expected 3conn:N[:COUNT])");
        }
    };
    parse(std::string_view(rest).substr(0, colon), n);
    if (colon != std::string::npos) parse(std::string_view(rest).substr(colon + 1), count);

    std::vector<BenchCase> corpus;
    for (std::size_t i = 0; i < count; ++i) {
        Rng rng(derive_seed(seed, {0x6e6e, i}));
        corpus.push_back({"3conn_" + std::to_string(n) + "_" + std::to_string(i),
                          gen_3connected(n, rng)});
    }
    return corpus;
}

std::vector<BenchCase> directory_corpus(const fs::path& dir) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string ext = entry.path().extension().string();
        if (ext == ".txt" || ext == ".edges" || ext == ".el" || ext == ".graphml" || ext == ".xml") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<BenchCase> corpus;
    for (const auto& f : files) corpus.push_back({f.filename().string(), read_graph_file(f).graph});
    return corpus;
}

struct BenchOptions {
    std::string source;
    std::vector<std::string> inits{"random"};
    std::vector<std::string> modes{"det"};
    double eps_rand{0.05};
    std::vector<double> delta_e_factors{1e-3};
    std::vector<double> pws{0.1};
    std::size_t runs{5};
    std::size_t rays{10};
    std::size_t ray_size{10};
    std::uint64_t seed{0};
    unsigned threads{1};
    std::string report;
};

int run_bench(const BenchOptions& o, std::ostream& out) {
    std::vector<BenchCase> corpus;
    if (auto gen = generated_corpus(o.source, o.seed)) {
        corpus = std::move(*gen);
    } else if (fs::is_directory(o.source)) {
        corpus = directory_corpus(o.source);
    } else if (fs::is_regular_file(o.source)) {
        corpus.push_back({fs::path(o.source).filename().string(), read_graph_file(o.source).graph});
    } else {
        throw std::invalid_argument("bench source '" + o.source +
                                    "' is neither a directory, a file nor a generator spec");
    }
    if (corpus.empty()) throw std::invalid_argument("bench corpus is empty");

    BenchGrid grid;
    grid.inits.clear();
    for (const auto& s : o.inits) grid.inits.push_back(parse_init_kind(s));
    grid.modes.clear();
    for (const auto& s : o.modes) grid.modes.push_back(parse_mode(s, o.eps_rand));
    grid.delta_e_factors = o.delta_e_factors;
    grid.prohibition_ratios = o.pws;
    grid.runs_per_config = o.runs;
    grid.rays = o.rays;
    grid.ray_size = o.ray_size;
    grid.seed = o.seed;
    grid.threads = o.threads;

    const BenchReport report = run_benchmark(corpus, grid);
    if (!o.report.empty()) write_text_file(o.report, bench_runs_jsonl(report));
    out << bench_summary_table(report);
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ray-based rectilinear crossing minimization", "rrgd"};
    app.require_subcommand(1);

    LayoutOptions lo;
    auto* layout = app.add_subcommand("layout", "Lay out a graph and minimize its crossings");
    layout->add_option("graph", lo.graph, "Edge list or GraphML file")->required();
    layout->add_option("--init", lo.init, "Initial layout")
        ->check(CLI::IsMember({"random", "circle", "force"}));
    layout->add_option("--mode", lo.mode, "Opacity mode")->check(CLI::IsMember({"det", "rand"}));
    layout->add_option("--eps-rand", lo.eps_rand, "Randomized opacity interval excess");
    layout->add_option("-R,--rays", lo.rays, "Rays per move");
    layout->add_option("--nr", lo.ray_size, "Ray size (hits per ray)");
    layout->add_option("--delta-e", lo.delta_e, "Energy delta (default 1e-3 * L0^2)");
    layout->add_option("--pw", lo.pw, "Prohibition window as a ratio of |V|");
    layout->add_option("--seed", lo.seed, "RNG seed");
    layout->add_option("--max-iter", lo.max_iter, "Accepted-move cap (0 = automatic)");
    layout->add_option("--out", lo.out, "Drawing JSON output");
    layout->add_option("--svg", lo.svg, "SVG output");
    layout->add_option("--trace", lo.trace, "Per-iteration JSON lines output");

    BenchOptions bo;
    auto* bench = app.add_subcommand("bench", "Run a parameter grid over a corpus");
    bench->add_option("source", bo.source, "Directory of graphs, a graph file or 3conn:N[:COUNT]")
        ->required();
    bench->add_option("--init", bo.inits, "Initial layouts")->delimiter(',');
    bench->add_option("--mode", bo.modes, "Opacity modes")->delimiter(',');
    bench->add_option("--eps-rand", bo.eps_rand, "Randomized opacity interval excess");
    bench->add_option("--delta-e-factor", bo.delta_e_factors, "Energy delta as a factor of L0^2")
        ->delimiter(',');
    bench->add_option("--pw", bo.pws, "Prohibition window ratios")->delimiter(',');
    bench->add_option("--runs", bo.runs, "Seeded runs per configuration");
    bench->add_option("-R,--rays", bo.rays, "Rays per move");
    bench->add_option("--nr", bo.ray_size, "Ray size");
    bench->add_option("--seed", bo.seed, "Master seed");
    bench->add_option("--threads", bo.threads, "Worker threads");
    bench->add_option("--report", bo.report, "Per-run JSON lines output");

    auto* analyze = app.add_subcommand("analyze", "Facet-access probability tools");
    analyze->require_subcommand(1);

    std::size_t samples = 1'000'000;
    std::uint64_t mc_seed = 0;
    auto* mc = analyze->add_subcommand("mc-cross", "Monte Carlo ray/segment crossing probability");
    mc->add_option("--samples", samples, "Number of samples");
    mc->add_option("--seed", mc_seed, "RNG seed");

    std::size_t nv = 0;
    std::size_t ne = 0;
    std::size_t cr = 0;
    std::size_t rays = 10;
    auto* fp = analyze->add_subcommand("facet-prob", "Probability that R rays reach a facet");
    fp->add_option("--nv", nv, "Vertex count")->required();
    fp->add_option("--ne", ne, "Edge count")->required();
    fp->add_option("--cr", cr, "Crossing number")->required();
    fp->add_option("-R,--rays", rays, "Ray count")->required();

    double q = 0.1;
    auto* rn = analyze->add_subcommand("rays-needed", "Smallest R reaching probability q");
    rn->add_option("--q", q, "Target probability")->required();
    rn->add_option("--nv", nv, "Vertex count")->required();
    rn->add_option("--ne", ne, "Edge count")->required();
    rn->add_option("--cr", cr, "Crossing number")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*layout) return run_layout(lo, out);
        if (*bench) return run_bench(bo, out);
        if (*mc) {
            Rng rng(mc_seed);
            out << format_double(ray_edge_probability_mc(samples, rng)) << "\n";
        } else if (*fp) {
            out << format_double(facet_hit_probability(nv, ne, cr, rays)) << "\n";
        } else if (*rn) {
            out << rays_needed(q, nv, ne, cr) << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace rrgd
