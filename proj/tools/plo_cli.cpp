// plo: generate planar graphs, build vertex-label distance oracles, query,
// relabel, verify against exact distances and benchmark.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "plo/bench.hpp"
#include "plo/error.hpp"
#include "plo/generators.hpp"
#include "plo/oracle.hpp"
#include "plo/verify.hpp"

namespace {

enum Exit : int {
    kOk = 0,
    kIo = 1,
    kUsage = 2,
    kLabelAbsent = 3,
    kBadVertex = 4,
    kVerificationFailed = 5,
    kBadInput = 6,
};

int exit_code(plo::ErrorCode code) {
    using plo::ErrorCode;
    switch (code) {
        case ErrorCode::IoError: return kIo;
        case ErrorCode::BadConfig: return kUsage;
        case ErrorCode::LabelAbsent: return kLabelAbsent;
        case ErrorCode::BadVertex: return kBadVertex;
        case ErrorCode::VerificationFailed: return kVerificationFailed;
        default: return kBadInput;
    }
}

plo::RangeMode parse_mode(const std::string& s) {
    if (s == "binary") return plo::RangeMode::BinarySearch;
    if (s == "bitvector") return plo::RangeMode::Bitvector;
    throw plo::Error(plo::ErrorCode::BadConfig, "range mode must be 'binary' or 'bitvector'");
}

const char* mode_name(plo::RangeMode mode) {
    return mode == plo::RangeMode::Bitvector ? "bitvector" : "binary";
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

void print_space(const plo::Oracle& o) {
    plo::SpaceReport s = o.stats();
    std::cout << "n " << o.graph().n() << "\n"
              << "m " << o.graph().m() << "\n"
              << "artificial_edges " << o.triangulated().artificial_count() << "\n"
              << "center " << o.center().root << "\n"
              << "rho " << o.center().radius << "\n"
              << "weighted_eccentricity " << o.center().weighted_eccentricity << "\n"
              << "rgd_depth " << o.rgd().depth() << "\n"
              << "pieces " << s.pieces << "\n"
              << "vertex_portals " << s.vertex_portals << "\n"
              << "max_portal_list " << o.portal_tables().max_list() << "\n"
              << "label_entries " << s.label_entries << "\n"
              << "contributors " << s.contributors << "\n"
              << "rmq_cells " << s.rmq_cells << "\n"
              << "bitvector_words " << s.bitvector_words << "\n"
              << "leaf_cells " << s.leaf_cells << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Approximate vertex-to-label distance oracle for planar graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Write a random planar graph in PLGRAPH format");
    uint32_t rows = 0, cols = 0, gen_n = 0, gen_labels = 3;
    uint64_t gen_seed = 1, wmin = 1, wmax = 100;
    double density = 1.0;
    std::string gen_out;
    gen->add_option("--rows", rows, "Grid rows");
    gen->add_option("--cols", cols, "Grid columns");
    gen->add_option("--n", gen_n, "Target vertex count (grid with random edge deletions)");
    gen->add_option("--density", density, "Fraction of grid edges kept (with --n)")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--labels", gen_labels, "Number of labels")->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_seed, "Random seed");
    gen->add_option("--wmin", wmin, "Smallest edge length");
    gen->add_option("--wmax", wmax, "Largest edge length");
    gen->add_option("-o,--out", gen_out, "Output file (default: stdout)");

    // build
    auto* build = app.add_subcommand("build", "Preprocess a graph into an oracle file");
    std::string build_graph, build_out, eps_text, build_mode = "binary";
    bool three_stretch = false;
    uint32_t leaf_max = 1;
    int64_t root = -1;
    build->add_option("--graph", build_graph, "PLGRAPH input")->required();
    auto* eps_opt = build->add_option("--eps", eps_text, "Stretch parameter P/Q, 0 < eps < 1");
    auto* three_opt = build->add_flag("--three-stretch", three_stretch, "One projection portal per path");
    eps_opt->excludes(three_opt);
    build->add_option("--range-mode", build_mode, "binary | bitvector");
    build->add_option("--leaf-max", leaf_max, "Largest leaf piece")->check(CLI::PositiveNumber);
    build->add_option("--root", root, "Shortest-path tree root (skips center search)");
    build->add_option("-o,--out", build_out, "Oracle output file")->required();

    // query
    auto* query = app.add_subcommand("query", "Approximate distance from a vertex to a label");
    std::string query_oracle, query_mode;
    uint32_t query_vertex = 0, query_label = 0;
    bool query_stats = false;
    query->add_option("--oracle", query_oracle)->required();
    query->add_option("--vertex", query_vertex)->required();
    query->add_option("--label", query_label)->required();
    query->add_option("--range-mode", query_mode, "Override the stored range mode");
    query->add_flag("--stats", query_stats, "Print query work counters");

    // relabel
    auto* relabel = app.add_subcommand("relabel", "Change a vertex label in an oracle file");
    std::string relabel_oracle, relabel_out;
    uint32_t relabel_vertex = 0, relabel_label = 0;
    relabel->add_option("--oracle", relabel_oracle)->required();
    relabel->add_option("--vertex", relabel_vertex)->required();
    relabel->add_option("--label", relabel_label)->required();
    relabel->add_option("-o,--out", relabel_out, "Output file (default: rewrite in place)");

    // verify
    auto* verify = app.add_subcommand("verify", "Check every answer against exact distances");
    std::string verify_oracle_path, verify_graph;
    size_t sample = 0;
    uint64_t verify_seed = 1;
    verify->add_option("--oracle", verify_oracle_path)->required();
    verify->add_option("--graph", verify_graph, "Graph the oracle must have been built from");
    verify->add_option("--sample", sample, "Check a random subset of this many queries");
    verify->add_option("--seed", verify_seed);

    // bench
    auto* bench = app.add_subcommand("bench", "Size/eps sweep, CSV on stdout");
    std::string sizes_text = "64,256,1024", bench_eps = "1/4", bench_mode = "binary";
    plo::BenchScenario scenario;
    bench->add_option("--sizes", sizes_text, "Comma-separated target vertex counts");
    auto* bench_eps_opt = bench->add_option("--eps", bench_eps, "Comma-separated P/Q values");
    auto* bench_three = bench->add_flag("--three-stretch", scenario.three_stretch);
    bench_eps_opt->excludes(bench_three);
    bench->add_option("--labels", scenario.labels)->check(CLI::PositiveNumber);
    bench->add_option("--range-mode", bench_mode);
    bench->add_option("--queries", scenario.queries, "Queries per repetition (0 = all pairs)");
    bench->add_option("--reps", scenario.reps)->check(CLI::PositiveNumber);
    bench->add_option("--seed", scenario.seed);
    bench->add_option("--density", scenario.density)->check(CLI::Range(0.0, 1.0));
    bench->add_option("--wmin", scenario.weights.lo);
    bench->add_option("--wmax", scenario.weights.hi);

    // stats
    auto* stats = app.add_subcommand("stats", "Space accounting of an oracle file");
    std::string stats_oracle;
    stats->add_option("--oracle", stats_oracle)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gen) {
            plo::WeightRange weights{wmin, wmax};
            plo::PlanarGraph g;
            if (gen_n) {
                if (rows || cols) throw plo::Error(plo::ErrorCode::BadConfig, "--n excludes --rows/--cols");
                g = plo::gen_planar(gen_n, density, weights, gen_labels, gen_seed);
            } else {
                if (!rows || !cols) throw plo::Error(plo::ErrorCode::BadConfig, "need --rows and --cols, or --n");
                if (density != 1.0) throw plo::Error(plo::ErrorCode::BadConfig, "--density needs --n");
                g = plo::gen_grid(rows, cols, weights, gen_labels, gen_seed);
            }
            if (gen_out.empty()) {
                plo::serialize_graph(g, std::cout);
            } else {
                plo::save_graph(g, gen_out);
            }
        } else if (*build) {
            plo::OracleConfig cfg;
            if (three_stretch) {
                cfg.three_stretch = true;
            } else if (!eps_text.empty()) {
                cfg.eps = plo::Rational::parse(eps_text);
            } else {
                throw plo::Error(plo::ErrorCode::BadConfig, "give --eps P/Q or --three-stretch");
            }
            cfg.range_mode = parse_mode(build_mode);
            cfg.leaf_max = leaf_max;
            if (root >= 0) cfg.root_override = plo::VertexId(root);
            plo::Oracle oracle = plo::Oracle::build(plo::load_graph(build_graph), cfg);
            oracle.save(build_out);
            std::cout << "eps " << (cfg.three_stretch ? "3-stretch" : cfg.eps.str()) << "\n"
                      << "range_mode " << mode_name(cfg.range_mode) << "\n";
            print_space(oracle);
        } else if (*query) {
            plo::Oracle oracle = plo::Oracle::load(query_oracle);
            plo::RangeMode mode = query_mode.empty() ? oracle.config().range_mode : parse_mode(query_mode);
            plo::QueryResult r = oracle.query(query_vertex, query_label, mode);
            std::cout << r.d << ' ' << r.witness << '\n';
            if (query_stats) {
                std::cout << "pieces_visited " << r.stats.pieces_visited << "\n"
                          << "portals_examined " << r.stats.portals_examined << "\n"
                          << "search_steps " << r.stats.search_steps << "\n"
                          << "rmq_calls " << r.stats.rmq_calls << "\n";
            }
        } else if (*relabel) {
            plo::Oracle oracle = plo::Oracle::load(relabel_oracle);
            size_t touched = oracle.change_label(relabel_vertex, relabel_label);
            oracle.save(relabel_out.empty() ? relabel_oracle : relabel_out);
            std::cout << "touched " << touched << "\n";
        } else if (*verify) {
            plo::Oracle oracle = plo::Oracle::load(verify_oracle_path);
            if (!verify_graph.empty()) {
                plo::PlanarGraph g = plo::load_graph(verify_graph);
                if (g.edges != oracle.graph().edges || g.rotation != oracle.graph().rotation) {
                    throw plo::Error(plo::ErrorCode::VerificationFailed,
                                     "oracle was not built from " + verify_graph);
                }
            }
            plo::VerifyOptions options;
            options.sample = sample;
            options.seed = verify_seed;
            plo::VerifyReport report = plo::verify_oracle(oracle, options);
            if (!report.ok()) {
                const auto& v = *report.violation;
                std::cerr << "verification failed: " << v.reason << " at u=" << v.u
                          << " label=" << v.label << " d=" << v.d << " delta=" << v.delta << "\n";
                return kVerificationFailed;
            }
            std::cout << "queries " << report.queries << "\n"
                      << "max_stretch " << report.max_stretch() << "\n"
                      << "mean_stretch " << report.mean_stretch << "\n"
                      << "mean_portals " << report.mean_portals << "\n"
                      << "max_portals " << report.max_portals << "\n"
                      << "work_bound " << plo::query_work_bound(oracle.graph().n(), oracle.config()) << "\n"
                      << "ok\n";
        } else if (*bench) {
            scenario.sizes.clear();
            for (const auto& s : split_list(sizes_text)) scenario.sizes.push_back(uint32_t(std::stoul(s)));
            scenario.eps.clear();
            for (const auto& s : split_list(bench_eps)) scenario.eps.push_back(plo::Rational::parse(s));
            scenario.mode = parse_mode(bench_mode);
            if (!scenario.three_stretch) {
                for (const auto& e : scenario.eps) {
                    plo::OracleConfig probe;
                    probe.eps = e;
                    probe.validate();
                }
            }
            plo::write_csv(std::cout, plo::run_bench(scenario));
        } else if (*stats) {
            print_space(plo::Oracle::load(stats_oracle));
        }
    } catch (const plo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}
