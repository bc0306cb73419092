#include "roleembed/cli_app.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "roleembed/evaluation.hpp"
#include "roleembed/generators.hpp"
#include "roleembed/graph.hpp"
#include "roleembed/io_formats.hpp"
#include "roleembed/role_distance.hpp"
#include "roleembed/stress_solver.hpp"
#include "roleembed/svg_plot.hpp"

namespace fs = std::filesystem;

namespace roleembed {

namespace {

struct GlobalOpts {
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    std::string cache_dir;
    bool quiet = false;
    std::size_t threads = 0;
};

// Removes every file it tracked unless the command committed, so failed
// commands leave no partial outputs behind.
class OutputGuard {
public:
    ~OutputGuard() {
        if (committed_) return;
        for (const auto& p : created_) {
            std::error_code ec;
            fs::remove(p, ec);
        }
    }
    void track(const fs::path& p) { created_.push_back(p); }
    void commit() { committed_ = true; }

private:
    std::vector<fs::path> created_;
    bool committed_ = false;
};

void write_text_file(OutputGuard& guard, const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    guard.track(path);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    out << content;
    if (!out) throw std::runtime_error("failed writing output file: " + path.string());
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> dense_names(std::size_t n) {
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
    return names;
}

std::size_t threads_from_env(bool quiet) {
    const char* env = std::getenv("ROLE_EMBED_THREADS");
    if (!env || !*env) return 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
        if (!quiet)
            std::cerr << "warning: ignoring non-numeric ROLE_EMBED_THREADS='" << env << "'\n";
        return 0;
    }
    return static_cast<std::size_t>(v);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t run) {
    return seed + 0x9E3779B97F4A7C15ull * (run + 1);
}

std::string hex64(std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// ---------------------------------------------------------------- generate

struct GenerateBarbellOpts {
    std::size_t clique = 10;
    std::size_t bridge = 11;
    std::string out_edges, out_labels;
};

void cmd_generate_barbell(const GlobalOpts& g, const GenerateBarbellOpts& opt) {
    const Graph graph = gen_barbell(opt.clique, opt.bridge);
    const LabeledDataset roles = barbell_roles(opt.clique, opt.bridge);
    const auto names = dense_names(graph.node_count());

    const fs::path edges_path =
        opt.out_edges.empty() ? fs::path(g.out_dir) / "barbell_edges.txt" : fs::path(opt.out_edges);
    const fs::path labels_path =
        opt.out_labels.empty() ? fs::path(g.out_dir) / "barbell_labels.csv" : fs::path(opt.out_labels);

    OutputGuard guard;
    std::ostringstream edges, labels;
    save_edge_list(graph, names, edges);
    write_labels(roles, names, labels);
    write_text_file(guard, edges_path, edges.str());
    write_text_file(guard, labels_path, labels.str());
    guard.commit();

    if (!g.quiet)
        std::cout << "barbell: " << graph.node_count() << " nodes, " << graph.edge_count()
                  << " edges, " << roles.class_count() << " role classes -> "
                  << edges_path.string() << ", " << labels_path.string() << '\n';
}

struct GenerateShapesOpts {
    std::size_t cycle = 30;
    std::size_t houses = 10;
    std::size_t fans = 0;
    std::size_t stars = 0;
    std::size_t fan_size = 4;
    std::size_t star_size = 4;
    std::size_t perturb = 0;
    std::string out_edges, out_labels;
};

ShapesGraphConfig shapes_config(const GenerateShapesOpts& opt, std::uint64_t seed) {
    ShapesGraphConfig cfg;
    cfg.cycle_len = opt.cycle;
    cfg.shapes.clear();
    if (opt.houses) cfg.shapes.push_back({ShapeKind::House, opt.houses, 5});
    if (opt.fans) cfg.shapes.push_back({ShapeKind::Fan, opt.fans, opt.fan_size});
    if (opt.stars) cfg.shapes.push_back({ShapeKind::Star, opt.stars, opt.star_size});
    if (cfg.shapes.empty()) throw std::runtime_error("no shapes requested (use --houses/--fans/--stars)");
    cfg.perturb_edges = opt.perturb;
    cfg.seed = seed;
    return cfg;
}

void cmd_generate_shapes(const GlobalOpts& g, const GenerateShapesOpts& opt) {
    const ShapesGraph sg = gen_cycle_with_shapes(shapes_config(opt, g.seed));
    const auto names = dense_names(sg.graph.node_count());

    const fs::path edges_path =
        opt.out_edges.empty() ? fs::path(g.out_dir) / "shapes_edges.txt" : fs::path(opt.out_edges);
    const fs::path labels_path =
        opt.out_labels.empty() ? fs::path(g.out_dir) / "shapes_labels.csv" : fs::path(opt.out_labels);

    OutputGuard guard;
    std::ostringstream edges, labels;
    save_edge_list(sg.graph, names, edges);
    write_labels(sg.roles, names, labels);
    write_text_file(guard, edges_path, edges.str());
    write_text_file(guard, labels_path, labels.str());
    guard.commit();

    if (!g.quiet)
        std::cout << "shapes: " << sg.graph.node_count() << " nodes, " << sg.graph.edge_count()
                  << " edges, " << sg.roles.class_count() << " role classes -> "
                  << edges_path.string() << ", " << labels_path.string() << '\n';
}

// ------------------------------------------------------------------- embed

struct EmbedOpts {
    std::string edges_path;
    std::string config_path;
    std::size_t k = 0;
    bool has_k = false;
    std::vector<double> weights;
    std::size_t radius = 1;
    bool has_radius = false;
    SolverConfig solver;
    bool has_seed = false;
    bool has_d = false, has_epsilon = false, has_max_iters = false, has_init_scale = false;
    std::string out_embedding, out_trace, out_distances;
};

DistanceMatrix distances_with_cache(const GlobalOpts& g, const std::string& edge_bytes,
                                    const Graph& graph, const DistanceConfig& cfg) {
    if (g.cache_dir.empty()) return distance_matrix(graph, cfg, g.threads);

    const std::uint64_t key = distance_cache_key(edge_bytes, cfg);
    const fs::path cache_path = fs::path(g.cache_dir) / ("distances_" + hex64(key) + ".rdm");
    fs::create_directories(g.cache_dir);
    try {
        if (auto cached = load_cached(cache_path.string(), key)) {
            if (!g.quiet) std::cout << "distance cache hit: " << cache_path.string() << '\n';
            return *cached;
        }
    } catch (const CacheCorruptError& e) {
        std::cerr << "warning: " << e.what() << " (recomputing)\n";
    }
    DistanceMatrix D = distance_matrix(graph, cfg, g.threads);
    cache_distances(D, key, cache_path.string());
    if (!g.quiet) std::cout << "distance cache write: " << cache_path.string() << '\n';
    return D;
}

void cmd_embed(const GlobalOpts& g, EmbedOpts opt) {
    if (!opt.config_path.empty()) {
        // explicit flags win over the configuration file
        const RunConfig rc = load_run_config(opt.config_path);
        if (opt.edges_path.empty()) opt.edges_path = rc.edges_path;
        if (!opt.has_k && rc.has_k) { opt.k = rc.distance.k; opt.has_k = true; }
        if (opt.weights.empty()) opt.weights = rc.distance.weights;
        if (!opt.has_radius) opt.radius = rc.distance.fastdtw_radius;
        if (!opt.has_seed) opt.solver.seed = rc.solver.seed;
        if (!opt.has_d) opt.solver.d = rc.solver.d;
        if (!opt.has_epsilon) opt.solver.epsilon = rc.solver.epsilon;
        if (!opt.has_max_iters) opt.solver.max_iters = rc.solver.max_iters;
        if (!opt.has_init_scale) opt.solver.init_scale = rc.solver.init_scale;
    }
    if (opt.edges_path.empty()) throw std::runtime_error("embed: no edge list given");

    const std::string edge_bytes = slurp(opt.edges_path);
    std::istringstream edge_stream(edge_bytes);
    const LoadedGraph loaded = load_edge_list(edge_stream);
    if (loaded.graph.self_loops_dropped() + loaded.graph.duplicate_edges_dropped() > 0 && !g.quiet)
        std::cerr << "warning: dropped " << loaded.graph.self_loops_dropped() << " self-loops and "
                  << loaded.graph.duplicate_edges_dropped() << " duplicate edges\n";

    DistanceConfig dcfg;
    dcfg.k = opt.has_k ? opt.k : diameter(loaded.graph);
    dcfg.weights = opt.weights.empty() ? std::vector<double>(dcfg.k + 1, 1.0) : opt.weights;
    dcfg.fastdtw_radius = opt.radius;
    dcfg.validate();

    DistanceMatrix D;
    try {
        D = distances_with_cache(g, edge_bytes, loaded.graph, dcfg);
    } catch (const std::domain_error& e) {
        throw std::runtime_error(std::string(e.what()) +
                                 "\nhint: remove isolated nodes from the edge list; degree-0 nodes have no "
                                 "degree sequence to compare");
    }

    auto [X, trace] = embed(D, opt.solver);

    const fs::path emb_path = opt.out_embedding.empty()
                                  ? fs::path(g.out_dir) / "embedding.csv"
                                  : fs::path(opt.out_embedding);
    const fs::path trace_path =
        opt.out_trace.empty() ? fs::path(g.out_dir) / "trace.csv" : fs::path(opt.out_trace);

    OutputGuard guard;
    std::ostringstream emb, tr;
    write_embedding(X, loaded.node_names, emb);
    write_trace(trace, tr);
    write_text_file(guard, emb_path, emb.str());
    write_text_file(guard, trace_path, tr.str());
    if (!opt.out_distances.empty()) {
        std::ostringstream dcsv;
        write_distance_csv(D, dcsv);
        write_text_file(guard, opt.out_distances, dcsv.str());
    }
    guard.commit();

    if (!g.quiet)
        std::cout << "final stress " << trace.stresses.back() << " after " << trace.iterations
                  << " iterations (" << (trace.converged ? "converged" : "max-iters reached")
                  << ") -> " << emb_path.string() << '\n';
}

// ------------------------------------------------------------ eval-cluster

struct EvalClusterOpts {
    std::string embedding_path, labels_path;
    std::size_t clusters = 0; // 0 = number of ground-truth classes
    std::size_t runs = 25;
    GenerateShapesOpts shapes;
    bool regenerate = false;
    SolverConfig solver;
    std::string out_report;
};

void print_report(const GlobalOpts& g, OutputGuard& guard, const std::string& out_report,
                  double h, double c, double s) {
    std::ostringstream csv;
    csv << "metric,value\n";
    char buf[96];
    std::snprintf(buf, sizeof(buf), "homogeneity,%.6f\ncompleteness,%.6f\nsilhouette,%.6f\n", h, c, s);
    csv << buf;
    if (!out_report.empty()) write_text_file(guard, out_report, csv.str());
    std::cout << csv.str();
    if (!g.quiet) {
        std::snprintf(buf, sizeof(buf),
                      "clustering: homogeneity %.3f, completeness %.3f, silhouette %.3f\n", h, c, s);
        std::cout << buf;
        if (!out_report.empty()) std::cout << "report -> " << out_report << '\n';
    }
}

void cmd_eval_cluster(const GlobalOpts& g, const EvalClusterOpts& opt) {
    OutputGuard guard;
    if (!opt.regenerate) {
        std::ifstream emb_in(opt.embedding_path);
        if (!emb_in) throw std::runtime_error("cannot open embedding: " + opt.embedding_path);
        const ReadEmbedding emb = read_embedding(emb_in);
        std::ifstream lab_in(opt.labels_path);
        if (!lab_in) throw std::runtime_error("cannot open labels: " + opt.labels_path);
        const LabeledDataset truth = read_labels(lab_in, emb.node_names);
        const std::size_t K = opt.clusters ? opt.clusters : truth.class_count();
        const ClusteringReport rep = evaluate_clustering(emb.matrix, truth, K);
        print_report(g, guard, opt.out_report, rep.homogeneity, rep.completeness, rep.silhouette);
        guard.commit();
        return;
    }

    // regenerate mode: fresh graph + embedding per seeded run, mean metrics
    double sum_h = 0, sum_c = 0, sum_s = 0;
    for (std::size_t run = 0; run < opt.runs; ++run) {
        const ShapesGraph sg = gen_cycle_with_shapes(shapes_config(opt.shapes, g.seed + run));
        const DistanceConfig dcfg = DistanceConfig::defaults_for(sg.graph);
        const DistanceMatrix D = distance_matrix(sg.graph, dcfg, g.threads);
        SolverConfig scfg = opt.solver;
        scfg.seed = mix_seed(g.seed, run);
        const auto [X, trace] = embed(D, scfg);
        const std::size_t K = opt.clusters ? opt.clusters : sg.roles.class_count();
        const ClusteringReport rep = evaluate_clustering(X, sg.roles, K);
        sum_h += rep.homogeneity;
        sum_c += rep.completeness;
        sum_s += rep.silhouette;
        if (!g.quiet)
            std::cout << "run " << run << ": homogeneity " << rep.homogeneity << ", completeness "
                      << rep.completeness << ", silhouette " << rep.silhouette << '\n';
    }
    const double inv = 1.0 / static_cast<double>(opt.runs);
    print_report(g, guard, opt.out_report, sum_h * inv, sum_c * inv, sum_s * inv);
    guard.commit();
}

// ----------------------------------------------------------- eval-classify

struct EvalClassifyOpts {
    std::string embedding_path, labels_path;
    std::size_t folds = 10;
    std::string out_report;
};

void cmd_eval_classify(const GlobalOpts& g, const EvalClassifyOpts& opt) {
    std::ifstream emb_in(opt.embedding_path);
    if (!emb_in) throw std::runtime_error("cannot open embedding: " + opt.embedding_path);
    const ReadEmbedding emb = read_embedding(emb_in);
    std::ifstream lab_in(opt.labels_path);
    if (!lab_in) throw std::runtime_error("cannot open labels: " + opt.labels_path);
    const LabeledDataset truth = read_labels(lab_in, emb.node_names);

    const KFoldResult result = classify_kfold(emb.matrix, truth, opt.folds, g.seed);
    if (!result.stratified)
        std::cerr << "warning: a class has fewer members than folds; using an unstratified split\n";

    OutputGuard guard;
    std::ostringstream csv;
    csv << "fold,micro_f1\n";
    for (std::size_t f = 0; f < result.per_fold.size(); ++f) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%zu,%.6f\n", f, result.per_fold[f]);
        csv << buf;
    }
    char buf[48];
    std::snprintf(buf, sizeof(buf), "mean,%.6f\n", result.mean_micro_f1);
    csv << buf;
    if (!opt.out_report.empty()) write_text_file(guard, opt.out_report, csv.str());
    std::cout << csv.str();
    guard.commit();
}

// -------------------------------------------------------------------- plot

struct PlotOpts {
    std::string embedding_path, labels_path, out_svg;
    PlotSpec spec;
};

void cmd_plot(const GlobalOpts& g, const PlotOpts& opt) {
    std::ifstream emb_in(opt.embedding_path);
    if (!emb_in) throw std::runtime_error("cannot open embedding: " + opt.embedding_path);
    const ReadEmbedding emb = read_embedding(emb_in);
    std::ifstream lab_in(opt.labels_path);
    if (!lab_in) throw std::runtime_error("cannot open labels: " + opt.labels_path);
    const LabeledDataset labels = read_labels(lab_in, emb.node_names);

    const std::string svg = render_svg(emb.matrix, labels, opt.spec);
    const fs::path out_path =
        opt.out_svg.empty() ? fs::path(g.out_dir) / "embedding.svg" : fs::path(opt.out_svg);

    OutputGuard guard;
    write_text_file(guard, out_path, svg);
    guard.commit();
    if (!g.quiet) std::cout << "plot -> " << out_path.string() << '\n';
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    GlobalOpts global;

    CLI::App app{"structural role embeddings via stress majorization"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may appear after the subcommand
    app.add_option("--seed", global.seed, "random seed shared by all commands");
    app.add_option("--out-dir", global.out_dir, "directory for default output paths");
    app.add_option("--cache-dir", global.cache_dir, "directory for the distance-matrix cache");
    app.add_flag("--quiet", global.quiet, "suppress progress output");

    // generate
    auto* generate = app.add_subcommand("generate", "write a synthetic graph + role labels");
    generate->require_subcommand(1);
    GenerateBarbellOpts barbell;
    auto* gen_barbell_cmd = generate->add_subcommand("barbell", "two cliques joined by a path");
    gen_barbell_cmd->add_option("--clique", barbell.clique, "clique size (>= 2)")->capture_default_str();
    gen_barbell_cmd->add_option("--bridge", barbell.bridge, "bridge node count (>= 1)")->capture_default_str();
    gen_barbell_cmd->add_option("--out-edges", barbell.out_edges, "edge list path");
    gen_barbell_cmd->add_option("--out-labels", barbell.out_labels, "role label CSV path");

    GenerateShapesOpts shapes;
    auto* gen_shapes_cmd = generate->add_subcommand("shapes", "cycle with attached shapes");
    gen_shapes_cmd->add_option("--cycle", shapes.cycle, "cycle length")->capture_default_str();
    gen_shapes_cmd->add_option("--houses", shapes.houses, "number of house shapes")->capture_default_str();
    gen_shapes_cmd->add_option("--fans", shapes.fans, "number of fan shapes")->capture_default_str();
    gen_shapes_cmd->add_option("--stars", shapes.stars, "number of star shapes")->capture_default_str();
    gen_shapes_cmd->add_option("--fan-size", shapes.fan_size, "blades per fan")->capture_default_str();
    gen_shapes_cmd->add_option("--star-size", shapes.star_size, "leaves per star")->capture_default_str();
    gen_shapes_cmd->add_option("--perturb", shapes.perturb, "extra uniformly random edges")->capture_default_str();
    gen_shapes_cmd->add_option("--out-edges", shapes.out_edges, "edge list path");
    gen_shapes_cmd->add_option("--out-labels", shapes.out_labels, "role label CSV path");

    // embed
    EmbedOpts embed_opt;
    auto* embed_cmd = app.add_subcommand("embed", "edge list -> embedding CSV + stress trace");
    embed_cmd->add_option("edges", embed_opt.edges_path, "edge list file");
    embed_cmd->add_option("--config", embed_opt.config_path, "key=value run configuration file");
    auto* k_opt = embed_cmd->add_option("--k", embed_opt.k, "hop depth (default: graph diameter)");
    embed_cmd->add_option("--weights", embed_opt.weights, "per-hop weights w0..wk (default: all 1)")->delimiter(',');
    auto* r_opt = embed_cmd->add_option("--radius", embed_opt.radius, "FastDTW refinement radius")->capture_default_str();
    auto* d_opt = embed_cmd->add_option("--d", embed_opt.solver.d, "embedding dimension")->capture_default_str();
    auto* eps_opt = embed_cmd->add_option("--epsilon", embed_opt.solver.epsilon, "relative stress tolerance")->capture_default_str();
    auto* iters_opt = embed_cmd->add_option("--max-iters", embed_opt.solver.max_iters, "iteration cap")->capture_default_str();
    auto* scale_opt = embed_cmd->add_option("--init-scale", embed_opt.solver.init_scale, "initial coordinate range")->capture_default_str();
    embed_cmd->add_option("--out-embedding", embed_opt.out_embedding, "embedding CSV path");
    embed_cmd->add_option("--out-trace", embed_opt.out_trace, "per-iteration stress CSV path");
    embed_cmd->add_option("--out-distances", embed_opt.out_distances,
                          "also export the distance matrix as CSV");

    // eval-cluster
    EvalClusterOpts cluster_opt;
    auto* cluster_cmd = app.add_subcommand(
        "eval-cluster", "single-linkage clustering metrics for an embedding (or fresh seeded runs)");
    auto* ce = cluster_cmd->add_option("--embedding", cluster_opt.embedding_path, "embedding CSV");
    cluster_cmd->add_option("--labels", cluster_opt.labels_path, "ground-truth label CSV")->needs(ce);
    cluster_cmd->add_option("--clusters", cluster_opt.clusters,
                            "cluster count (default: number of label classes)");
    cluster_cmd->add_option("--runs", cluster_opt.runs, "seeded generate+embed runs")->capture_default_str();
    cluster_cmd->add_option("--cycle", cluster_opt.shapes.cycle, "cycle length")->capture_default_str();
    cluster_cmd->add_option("--houses", cluster_opt.shapes.houses, "house shapes")->capture_default_str();
    cluster_cmd->add_option("--fans", cluster_opt.shapes.fans, "fan shapes")->capture_default_str();
    cluster_cmd->add_option("--stars", cluster_opt.shapes.stars, "star shapes")->capture_default_str();
    cluster_cmd->add_option("--fan-size", cluster_opt.shapes.fan_size, "blades per fan")->capture_default_str();
    cluster_cmd->add_option("--star-size", cluster_opt.shapes.star_size, "leaves per star")->capture_default_str();
    cluster_cmd->add_option("--perturb", cluster_opt.shapes.perturb, "extra random edges")->capture_default_str();
    cluster_cmd->add_option("--d", cluster_opt.solver.d, "embedding dimension")->capture_default_str();
    cluster_cmd->add_option("--epsilon", cluster_opt.solver.epsilon, "relative stress tolerance")->capture_default_str();
    cluster_cmd->add_option("--max-iters", cluster_opt.solver.max_iters, "iteration cap")->capture_default_str();
    cluster_cmd->add_option("--out-report", cluster_opt.out_report, "metric CSV path");

    // eval-classify
    EvalClassifyOpts classify_opt;
    auto* classify_cmd =
        app.add_subcommand("eval-classify", "k-fold linear classification micro-F1");
    classify_cmd->add_option("--embedding", classify_opt.embedding_path, "embedding CSV")->required();
    classify_cmd->add_option("--labels", classify_opt.labels_path, "label CSV")->required();
    classify_cmd->add_option("--folds", classify_opt.folds, "fold count")->capture_default_str();
    classify_cmd->add_option("--out-report", classify_opt.out_report, "per-fold CSV path");

    // plot
    PlotOpts plot_opt;
    auto* plot_cmd = app.add_subcommand("plot", "SVG scatter plot of an embedding");
    plot_cmd->add_option("--embedding", plot_opt.embedding_path, "embedding CSV")->required();
    plot_cmd->add_option("--labels", plot_opt.labels_path, "label CSV")->required();
    plot_cmd->add_option("--out", plot_opt.out_svg, "output SVG path");
    plot_cmd->add_option("--width", plot_opt.spec.width, "plot width in px")->capture_default_str();
    plot_cmd->add_option("--height", plot_opt.spec.height, "plot height in px")->capture_default_str();
    plot_cmd->add_option("--point-radius", plot_opt.spec.point_radius, "circle radius in px")->capture_default_str();
    plot_cmd->add_option("--padding", plot_opt.spec.padding_fraction, "axis padding fraction")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    global.threads = threads_from_env(global.quiet);

    try {
        if (gen_barbell_cmd->parsed()) {
            cmd_generate_barbell(global, barbell);
        } else if (gen_shapes_cmd->parsed()) {
            cmd_generate_shapes(global, shapes);
        } else if (embed_cmd->parsed()) {
            embed_opt.has_k = k_opt->count() > 0;
            embed_opt.has_radius = r_opt->count() > 0;
            embed_opt.has_seed = app.count("--seed") > 0;
            embed_opt.has_d = d_opt->count() > 0;
            embed_opt.has_epsilon = eps_opt->count() > 0;
            embed_opt.has_max_iters = iters_opt->count() > 0;
            embed_opt.has_init_scale = scale_opt->count() > 0;
            embed_opt.solver.seed = global.seed;
            cmd_embed(global, embed_opt);
        } else if (cluster_cmd->parsed()) {
            cluster_opt.regenerate = cluster_opt.embedding_path.empty();
            if (!cluster_opt.regenerate && cluster_opt.labels_path.empty())
                throw std::runtime_error("eval-cluster: --labels is required with --embedding");
            cmd_eval_cluster(global, cluster_opt);
        } else if (classify_cmd->parsed()) {
            cmd_eval_classify(global, classify_opt);
        } else if (plot_cmd->parsed()) {
            cmd_plot(global, plot_opt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace roleembed
