#include "cluscomp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cluscomp/builders.hpp"
#include "cluscomp/clustering.hpp"
#include "cluscomp/experiments.hpp"
#include "cluscomp/io.hpp"
#include "cluscomp/metrics.hpp"
#include "cluscomp/random_walk.hpp"
#include "cluscomp/vin.hpp"

namespace cluscomp {

namespace {

// Bad invocations exit with 2; bad data (files, domain errors) with 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr double kDefaultEps = 0.36787944117144233;  // exp(-1)
constexpr const char* kRngName = "mt19937_64+box-muller";

LogBase parse_log_base(const std::string& s) {
    return s == "2" ? LogBase::two : LogBase::e;
}

struct CompareOptions {
    std::string labels_a;
    std::string labels_b;
    std::vector<std::string> indices;
    std::string graph_path;
    std::string adjacency_path;
    double eps = kDefaultEps;
    std::string log_base = "e";
    double self_loop = 0.0;
};

void run_compare(const CompareOptions& opt, std::ostream& out) {
    std::set<std::string> requested(opt.indices.begin(), opt.indices.end());
    if (requested.empty()) {
        requested.insert("vi");
    }
    if (opt.self_loop < 0.0) {
        throw UsageError("--self-loop weight must be nonnegative");
    }
    const bool want_rwi = requested.count("rwi") > 0;
    const bool want_vin = requested.count("vin") > 0;
    if (want_rwi && opt.graph_path.empty()) {
        throw UsageError("rwi needs a similarity graph: pass --graph FILE");
    }
    if (want_vin && opt.adjacency_path.empty() && opt.graph_path.empty()) {
        throw UsageError(
            "vin needs an adjacency graph: pass --adjacency FILE, or --graph FILE "
            "(thresholded at --epsilon)");
    }

    const Clustering a = Clustering::from_labels(read_labels(opt.labels_a));
    const Clustering b = Clustering::from_labels(read_labels(opt.labels_b));
    if (a.size() != b.size()) {
        throw std::invalid_argument("clustering size mismatch");
    }
    const LogBase base = parse_log_base(opt.log_base);

    std::optional<SimilarityGraph> graph;
    const bool need_graph = want_rwi || (want_vin && opt.adjacency_path.empty());
    if (need_graph) {
        graph = read_similarity(opt.graph_path, a.size());
    }

    for (const char* name : {"vi", "rwi", "vin"}) {
        if (requested.count(name) == 0) {
            continue;
        }
        double value = 0.0;
        if (std::string(name) == "vi") {
            value = vi(a, b, base);
        } else if (std::string(name) == "rwi") {
            const SimilarityGraph walk_graph =
                opt.self_loop > 0.0 ? graph->with_uniform_self_loops(opt.self_loop) : *graph;
            value = rwi(walk_graph, a, b, base);
        } else {
            const AdjacencyGraph adj = opt.adjacency_path.empty()
                                           ? threshold_adjacency(*graph, opt.eps)
                                           : read_adjacency(opt.adjacency_path, a.size());
            value = vin(a, b, adj, base);
        }
        out << name << '\t' << format_value(value) << '\n';
    }
}

struct ExperimentOptions {
    std::string name;
    std::size_t n = 0;  // 0 = per-experiment default
    std::size_t m = 2;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    double eps = kDefaultEps;
    std::string log_base = "e";
    std::string output = "table";
    bool plot_data = false;
    unsigned threads = 1;
    std::size_t height = 60;
    std::size_t width = 60;
    std::string variant = "square-block";
};

GridVariant parse_variant(const std::string& s) {
    if (s == "square-block") {
        return GridVariant::square_block;
    }
    if (s == "boundary-strip") {
        return GridVariant::boundary_strip;
    }
    return GridVariant::distant_line;
}

void run_experiment(const ExperimentOptions& opt, std::ostream& out) {
    const LogBase base = parse_log_base(opt.log_base);
    const OutputFormat format = opt.output == "tsv" ? OutputFormat::tsv : OutputFormat::table;
    if (opt.plot_data && opt.name != "gaussian") {
        throw UsageError("--plot-data is only available for the gaussian experiment");
    }

    ConfigEcho config;
    config.emplace_back("experiment", opt.name);
    if (opt.name == "chain-single") {
        const std::size_t n = opt.n == 0 ? 10 : opt.n;
        config.emplace_back("n", std::to_string(n));
        config.emplace_back("log-base", opt.log_base);
        config.emplace_back("eps", format_value(opt.eps));
        config.emplace_back("seed", std::to_string(opt.seed));
        out << format_scenario_report(scenario_chain_single(n, base), config, format);
    } else if (opt.name == "chain-block") {
        const std::size_t n = opt.n == 0 ? 10 : opt.n;
        config.emplace_back("n", std::to_string(n));
        config.emplace_back("m", std::to_string(opt.m));
        config.emplace_back("log-base", opt.log_base);
        config.emplace_back("eps", format_value(opt.eps));
        config.emplace_back("seed", std::to_string(opt.seed));
        out << format_scenario_report(scenario_chain_block(n, opt.m, base), config, format);
    } else if (opt.name == "gaussian") {
        const std::size_t n = opt.n == 0 ? 100 : opt.n;
        config.emplace_back("trials", std::to_string(opt.trials));
        config.emplace_back("n", std::to_string(n));
        config.emplace_back("log-base", opt.log_base);
        config.emplace_back("eps", format_value(opt.eps));
        config.emplace_back("seed", std::to_string(opt.seed));
        config.emplace_back("threads", std::to_string(opt.threads));
        config.emplace_back("rng", kRngName);
        const TrialSummary summary =
            scenario_gaussian(opt.trials, n, opt.eps, opt.seed, base, opt.threads);
        out << format_summary_report(summary, config, format, opt.plot_data);
    } else {
        config.emplace_back("height", std::to_string(opt.height));
        config.emplace_back("width", std::to_string(opt.width));
        config.emplace_back("window", "5");
        config.emplace_back("variant", opt.variant);
        config.emplace_back("log-base", opt.log_base);
        config.emplace_back("eps", format_value(opt.eps));
        config.emplace_back("seed", std::to_string(opt.seed));
        const ScenarioResult result =
            scenario_grid(opt.height, opt.width, parse_variant(opt.variant), base);
        out << format_scenario_report(result, config, format);
    }
}

struct GenerateOptions {
    std::string kind;
    std::size_t n = 100;
    std::uint64_t seed = 0;
    std::string mode = "adjacent-unit";
    std::string decay = "gauss";
    std::string points_path;
    double eps = kDefaultEps;
    std::size_t height = 60;
    std::size_t width = 60;
    std::size_t window = 5;
    std::string out_path;
    std::string out_adjacency_path;
};

void write_to(const std::string& path, std::ostream& fallback,
              const std::function<void(std::ostream&)>& writer) {
    if (path.empty()) {
        writer(fallback);
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + path);
    }
    writer(out);
}

void run_generate(const GenerateOptions& opt, std::ostream& out) {
    if (opt.kind == "chain") {
        const ChainMode mode = opt.mode == "all-pairs-decay" ? ChainMode::all_pairs_decay
                                                             : ChainMode::adjacent_unit;
        const ChainDecay decay =
            opt.decay == "inverse" ? ChainDecay::inverse : ChainDecay::gauss;
        const SimilarityGraph g = chain_graph(opt.n, mode, decay);
        write_to(opt.out_path, out, [&](std::ostream& o) { write_similarity(g, o); });
    } else if (opt.kind == "points") {
        const PointSet p = sample_gaussian(opt.n, opt.seed);
        const std::string header = std::string("generator=") + kRngName +
                                   " seed=" + std::to_string(opt.seed) +
                                   " n=" + std::to_string(opt.n);
        write_to(opt.out_path, out, [&](std::ostream& o) { write_points(p, o, header); });
    } else if (opt.kind == "gaussian") {
        if (opt.points_path.empty()) {
            throw UsageError("generate gaussian needs --points FILE");
        }
        const SimilarityGraph g = gaussian_similarity(read_points(opt.points_path));
        write_to(opt.out_path, out, [&](std::ostream& o) { write_similarity(g, o); });
        if (!opt.out_adjacency_path.empty()) {
            const AdjacencyGraph a = threshold_adjacency(g, opt.eps);
            write_to(opt.out_adjacency_path, out,
                     [&](std::ostream& o) { write_adjacency(a, o); });
        }
    } else {
        const GridGraphs graphs = grid_graphs(opt.height, opt.width, opt.window);
        write_to(opt.out_path, out,
                 [&](std::ostream& o) { write_similarity(graphs.similarity, o); });
        if (!opt.out_adjacency_path.empty()) {
            write_to(opt.out_adjacency_path, out,
                     [&](std::ostream& o) { write_adjacency(graphs.adjacency, o); });
        }
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Compare two clusterings of a point set with graph-aware indices"};
    app.name("cluscomp");
    app.require_subcommand(1);

    CompareOptions cmp;
    CLI::App* compare = app.add_subcommand(
        "compare", "Compare two label files under the selected indices");
    compare->add_option("labels_a", cmp.labels_a, "first label file")->required();
    compare->add_option("labels_b", cmp.labels_b, "second label file")->required();
    compare->add_option("--index", cmp.indices, "index to compute (repeatable; default vi)")
        ->check(CLI::IsMember({"vi", "rwi", "vin"}))
        ->allow_extra_args(false);
    compare->add_option("--graph", cmp.graph_path, "similarity graph edge list (i j w)");
    compare->add_option("--adjacency", cmp.adjacency_path, "adjacency edge list (i j)");
    compare->add_option("--epsilon", cmp.eps,
                        "similarity threshold used to derive adjacency for vin");
    compare->add_option("--log-base", cmp.log_base, "logarithm base (default e)")
        ->check(CLI::IsMember({"e", "2"}));
    compare->add_option("--self-loop", cmp.self_loop,
                        "add this uniform self-weight to the rwi graph");

    ExperimentOptions exp;
    CLI::App* experiment = app.add_subcommand("experiment", "Run a named perturbation study");
    experiment->add_option("name", exp.name, "chain-single | chain-block | gaussian | grid")
        ->required()
        ->check(CLI::IsMember({"chain-single", "chain-block", "gaussian", "grid"}));
    experiment->add_option("--n", exp.n, "point count (default 10 for chains, 100 for gaussian)");
    experiment->add_option("--m", exp.m, "relabeled block size for chain-block (default 2)");
    experiment->add_option("--trials", exp.trials, "number of gaussian trials (default 100)");
    experiment->add_option("--seed", exp.seed, "rng seed (default 0)");
    experiment->add_option("--epsilon", exp.eps,
                           "similarity threshold for the vin adjacency (default e^-1)");
    experiment->add_option("--log-base", exp.log_base, "logarithm base (default e)")
        ->check(CLI::IsMember({"e", "2"}));
    experiment->add_option("--output", exp.output, "report format (default table)")
        ->check(CLI::IsMember({"table", "tsv"}));
    experiment->add_flag("--plot-data", exp.plot_data,
                         "emit per-trial columns instead of the summary (gaussian only)");
    experiment->add_option("--threads", exp.threads, "worker threads for trials (default 1)");
    experiment->add_option("--height", exp.height, "grid height (default 60)");
    experiment->add_option("--width", exp.width, "grid width (default 60)");
    experiment->add_option("--variant", exp.variant, "grid perturbation pair")
        ->check(CLI::IsMember({"square-block", "boundary-strip", "distant-line"}));

    GenerateOptions gen;
    CLI::App* generate =
        app.add_subcommand("generate", "Emit graphs and point sets as files");
    generate->add_option("kind", gen.kind, "chain | points | gaussian | grid")
        ->required()
        ->check(CLI::IsMember({"chain", "points", "gaussian", "grid"}));
    generate->add_option("--n", gen.n, "point count (default 100)");
    generate->add_option("--seed", gen.seed, "rng seed (default 0)");
    generate->add_option("--mode", gen.mode, "chain similarity mode")
        ->check(CLI::IsMember({"adjacent-unit", "all-pairs-decay"}));
    generate->add_option("--decay", gen.decay, "all-pairs chain weight law")
        ->check(CLI::IsMember({"gauss", "inverse"}));
    generate->add_option("--points", gen.points_path, "point file for gaussian similarity");
    generate->add_option("--epsilon", gen.eps, "threshold for the emitted adjacency");
    generate->add_option("--height", gen.height, "grid height (default 60)");
    generate->add_option("--width", gen.width, "grid width (default 60)");
    generate->add_option("--window", gen.window, "grid window size (default 5)");
    generate->add_option("--out", gen.out_path, "output file (default stdout)");
    generate->add_option("--out-adjacency", gen.out_adjacency_path,
                         "also emit the adjacency graph to this file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compare->parsed()) {
            run_compare(cmp, out);
        } else if (experiment->parsed()) {
            run_experiment(exp, out);
        } else if (generate->parsed()) {
            run_generate(gen, out);
        }
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace cluscomp
