#include "fnf/experiments.hpp"
#include "fnf/generators.hpp"
#include "fnf/graph.hpp"
#include "fnf/scheme.hpp"
#include "fnf/tuning.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

// exit codes: 0 success / verdict true, 1 verdict false, 2 operational error
constexpr int kOk = 0;
constexpr int kVerdictFalse = 1;
constexpr int kError = 2;

std::vector<double> parse_grid(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    if (out.empty()) throw std::invalid_argument("empty grid: " + csv);
    return out;
}

void echo_config(const std::vector<std::pair<std::string, std::string>>& kv) {
    std::cout << "# config:";
    for (const auto& [k, v] : kv) std::cout << " " << k << "=" << v;
    std::cout << "\n";
}

int cmd_keygen(std::int64_t m, double sigma, std::uint64_t seed,
               const std::string& out_path, bool force) {
    if (m < 1) {
        std::cerr << "error: empty key (m must be >= 1)\n";
        return kError;
    }
    if (!force && std::filesystem::exists(out_path)) {
        std::cerr << "error: " << out_path << " exists (use --force to overwrite)\n";
        return kError;
    }
    echo_config({{"m", std::to_string(m)},
                 {"sigma", std::to_string(sigma)},
                 {"seed", std::to_string(seed)},
                 {"out", out_path}});
    fnf::save_key(fnf::keygen(m, sigma, seed), out_path);
    std::cout << "wrote " << out_path << " (" << m << " values)\n";
    return kOk;
}

int cmd_embed(const std::string& graph_path, const std::string& key_path,
              std::int32_t n0, const std::string& out_graph,
              const std::string& out_receipt) {
    const auto loaded = fnf::load_edge_list(graph_path);
    const auto key = fnf::load_key(key_path);
    echo_config({{"graph", graph_path},
                 {"key", key_path},
                 {"n0", std::to_string(n0)},
                 {"n", std::to_string(loaded.graph.num_vertices())},
                 {"edges", std::to_string(loaded.graph.num_edges())},
                 {"self_loops_dropped", std::to_string(loaded.self_loops_dropped)}});

    const auto out = fnf::embed_reduced(loaded.graph, key, n0);
    fnf::save_edge_list(out.watermarked, out_graph);
    if (!out_receipt.empty()) fnf::save_receipt(out.receipt, out_receipt);

    std::printf("ED = %.6e %%\n", out.receipt.ed_percent);
    if (!out.receipt.succeeded()) {
        std::cerr << "error: embedding changed no edge; retry with larger key "
                     "parameters (m, sigma)\n";
        return kError;
    }
    std::cout << "wrote " << out_graph << "\n";
    return kOk;
}

int cmd_extract(const std::string& original_path, const std::string& suspect_path,
                const std::string& key_path, double theta, std::int32_t n0) {
    const auto original = fnf::load_edge_list(original_path).graph;
    const auto suspect = fnf::load_edge_list(suspect_path).graph;
    const auto key = fnf::load_key(key_path);
    echo_config({{"original", original_path},
                 {"suspect", suspect_path},
                 {"key", key_path},
                 {"theta", std::to_string(theta)},
                 {"n0", std::to_string(n0)}});

    const auto res = fnf::extract(original, suspect, key, theta, n0);
    std::printf("s = %.12g\n", res.score);
    std::printf("norm = %.12g\n", res.norm);
    std::printf("s/norm = %.12g\n", res.normalized);
    std::printf("theta = %.12g\n", res.theta);
    std::cout << "verdict: " << (res.verdict ? "true" : "false") << "\n";
    return res.verdict ? kOk : kVerdictFalse;
}

int cmd_attack(const std::string& graph_path, double flip_percent,
               std::uint64_t seed, const std::string& out_path) {
    const auto g = fnf::load_edge_list(graph_path).graph;
    echo_config({{"graph", graph_path},
                 {"flip_percent", std::to_string(flip_percent)},
                 {"seed", std::to_string(seed)},
                 {"out", out_path}});
    const auto attacked = fnf::edge_flip_attack(g, flip_percent, seed);
    fnf::save_edge_list(attacked, out_path);
    std::printf("realized ED = %.6e %%\n", fnf::edit_distance_percent(g, attacked));
    return kOk;
}

int cmd_edit_distance(const std::string& g1_path, const std::string& g2_path) {
    const auto g1 = fnf::load_edge_list(g1_path).graph;
    const auto g2 = fnf::load_edge_list(g2_path).graph;
    std::printf("ED = %.6e %%\n", fnf::edit_distance_percent(g1, g2));
    return kOk;
}

int cmd_generate(const std::string& model, std::int32_t n, double d,
                 std::uint64_t seed, const std::string& out_path) {
    const auto g = fnf::generate_with_density(fnf::parse_model(model), n, d, seed);
    fnf::save_edge_list(g, out_path);
    std::cout << "wrote " << out_path << " (n=" << g.num_vertices()
              << ", edges=" << g.num_edges() << ", density=" << fnf::density(g) << ")\n";
    return kOk;
}

int cmd_tune(const std::string& graph_path, std::int64_t m, double ed_low,
             double ed_high, double flip_percent, int trials, std::int32_t n0,
             std::uint64_t seed, const std::string& report_path) {
    const auto g = fnf::load_edge_list(graph_path).graph;
    echo_config({{"graph", graph_path},
                 {"m", std::to_string(m)},
                 {"ed_low", std::to_string(ed_low)},
                 {"ed_high", std::to_string(ed_high)},
                 {"flip_percent", std::to_string(flip_percent)},
                 {"trials", std::to_string(trials)},
                 {"n0", std::to_string(n0)},
                 {"seed", std::to_string(seed)}});

    fnf::TuneConfig cfg;
    cfg.m = m;
    cfg.ed_target_low = ed_low;
    cfg.ed_target_high = ed_high;
    cfg.n0 = n0;
    cfg.trial_seed = seed;
    const auto tuned = fnf::tune_sigma(g, cfg);

    const auto key = fnf::keygen(m, tuned.sigma, seed);
    const auto cal = fnf::calibrate_theta(g, key, flip_percent, trials, n0, seed + 100);

    std::ostringstream report;
    report << "# tuning report\n";
    report << "# probes (sigma, ed_percent):\n";
    for (const auto& p : tuned.probes)
        report << "probe," << p.sigma << "," << p.ed_percent << "\n";
    report << "m," << m << "\n";
    report << "sigma," << tuned.sigma << "\n";
    report << "ed_percent," << tuned.receipt.ed_percent << "\n";
    report << "theta," << cal.theta << "\n";
    report << "observed_max_ratio," << cal.observed_max_ratio << "\n";
    report << "flip_percent," << flip_percent << "\n";
    report << "trials," << trials << "\n";
    report << "seed," << seed << "\n";
    std::cout << report.str();

    // self-check: the tuned parameters survive an embed+attack+extract cycle
    const auto embedded = fnf::embed_reduced(g, key, n0);
    const auto attacked = fnf::edge_flip_attack(embedded.watermarked, flip_percent, seed + 999);
    const auto res = fnf::extract(g, attacked, key, cal.theta, n0);
    std::cout << "self_check," << (res.verdict ? "pass" : "fail") << "\n";

    if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << report.str();
    }
    return res.verdict ? kOk : kError;
}

int cmd_bench(const std::string& experiment, const std::string& model_str,
              std::int32_t n, const std::string& densities, const std::string& thetas,
              const std::string& flips, const std::string& sizes, int trials,
              std::int64_t m, double sigma, double theta, std::int32_t n0,
              double timeout, std::int32_t k, std::uint64_t seed,
              const std::string& graph_path, const std::string& key_path,
              const std::string& out_csv) {
    const auto model = fnf::parse_model(model_str);
    fnf::ExperimentReport rep;
    if (experiment == "uniqueness") {
        rep = fnf::uniqueness_experiment(model, n, parse_grid(densities), trials, m, n0, seed);
    } else if (experiment == "false-positives") {
        rep = fnf::false_positive_experiment(model, n, parse_grid(densities).at(0),
                                             parse_grid(thetas), trials, 5, m, n0, seed);
    } else if (experiment == "robustness") {
        const auto g = graph_path.empty()
                           ? fnf::generate_with_density(model, n, parse_grid(densities).at(0), seed)
                           : fnf::load_edge_list(graph_path).graph;
        fnf::Key key;
        if (!key_path.empty()) {
            key = fnf::load_key(key_path);
        } else if (sigma > 0.0) {
            key = fnf::keygen(m, sigma, seed + 1);
        } else {
            fnf::TuneConfig cfg;
            cfg.m = m;
            cfg.n0 = n0;
            cfg.ed_target_high = fnf::desk_scale_ed_high(g);
            cfg.trial_seed = seed + 1;
            key = fnf::keygen(m, fnf::tune_sigma(g, cfg).sigma, seed + 1);
        }
        double th = theta;
        if (th < 0.0)  // no --theta: calibrate against 10% flips
            th = fnf::calibrate_theta(g, key, 10.0, trials, n0, seed + 2).theta;
        rep = fnf::robustness_experiment(g, key, th, parse_grid(flips), trials, n0, seed);
    } else if (experiment == "timing") {
        std::vector<std::int32_t> size_grid;
        for (double s : parse_grid(sizes)) size_grid.push_back(static_cast<std::int32_t>(s));
        rep = fnf::timing_benchmark(model, size_grid, m, sigma, n0, timeout, seed);
    } else if (experiment == "attack-impact") {
        const auto g = graph_path.empty()
                           ? fnf::generate_with_density(model, n, parse_grid(densities).at(0), seed)
                           : fnf::load_edge_list(graph_path).graph;
        rep = fnf::attack_impact_spearman(g, parse_grid(flips), k, trials, seed);
    } else {
        std::cerr << "error: unknown experiment '" << experiment << "'\n";
        return kError;
    }
    if (out_csv.empty())
        std::cout << rep.to_csv();
    else
        rep.write_csv(out_csv);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"F&F in-spectrum graph watermarking"};
    app.require_subcommand(1);

    // shared option storage
    std::string graph_path, key_path, out_path, receipt_path, suspect_path, report_path;
    std::string model = "ba", experiment, densities = "5", thetas = "0,1,2,5,10",
                flips = "0,1,5,10", sizes = "10000";
    std::int64_t m = 0;
    double sigma = 0.0, theta = -1.0, flip_percent = 0.0;
    double ed_low = 1e-9, ed_high = 0.005, timeout = 1500.0;
    std::int32_t n0 = 10000, n = 1000, k = 100;
    std::uint64_t seed = 0;
    int trials = 3;
    bool force = false;

    auto* keygen_cmd = app.add_subcommand("keygen", "generate a key file");
    keygen_cmd->add_option("--m", m, "key length")->required();
    keygen_cmd->add_option("--sigma", sigma, "standard deviation")->required();
    keygen_cmd->add_option("--seed", seed, "generator seed")->required();
    keygen_cmd->add_option("--out", out_path, "output key file")->required();
    keygen_cmd->add_flag("--force", force, "overwrite an existing file");

    auto* embed_cmd = app.add_subcommand("embed", "embed a key into a graph");
    embed_cmd->add_option("--graph", graph_path)->required();
    embed_cmd->add_option("--key", key_path)->required();
    embed_cmd->add_option("--n0", n0, "reduction size (0 = full graph)");
    embed_cmd->add_option("--out", out_path, "watermarked edge list")->required();
    embed_cmd->add_option("--receipt", receipt_path, "receipt file (JSON)");

    auto* extract_cmd = app.add_subcommand("extract", "test a suspect graph");
    extract_cmd->add_option("--original", graph_path)->required();
    extract_cmd->add_option("--suspect", suspect_path)->required();
    extract_cmd->add_option("--key", key_path)->required();
    extract_cmd->add_option("--theta", theta)->required();
    extract_cmd->add_option("--n0", n0, "reduction size (0 = full graph)");

    auto* attack_cmd = app.add_subcommand("attack", "random edge-flip attack");
    attack_cmd->add_option("--graph", graph_path)->required();
    attack_cmd->add_option("--flip-percent", flip_percent)->required();
    attack_cmd->add_option("--seed", seed)->required();
    attack_cmd->add_option("--out", out_path)->required();

    auto* ed_cmd = app.add_subcommand("edit-distance", "ED between two graphs");
    ed_cmd->add_option("graph1", graph_path)->required();
    ed_cmd->add_option("graph2", suspect_path)->required();

    auto* gen_cmd = app.add_subcommand("generate", "generate a model graph");
    gen_cmd->add_option("--model", model, "er|ba|ws");
    gen_cmd->add_option("--n", n)->required();
    gen_cmd->add_option("--density", densities, "target |E|/n");
    gen_cmd->add_option("--seed", seed)->required();
    gen_cmd->add_option("--out", out_path)->required();

    auto* tune_cmd = app.add_subcommand("tune", "tune sigma and theta for a graph");
    tune_cmd->add_option("--graph", graph_path)->required();
    tune_cmd->add_option("--m", m, "key length")->required();
    tune_cmd->add_option("--ed-low", ed_low, "ED window lower bound (percent)");
    tune_cmd->add_option("--ed-high", ed_high, "ED window upper bound (percent)");
    tune_cmd->add_option("--flip-percent", flip_percent, "attack level theta must tolerate");
    tune_cmd->add_option("--trials", trials, "calibration trials");
    tune_cmd->add_option("--n0", n0, "reduction size (0 = full graph)");
    tune_cmd->add_option("--seed", seed)->required();
    tune_cmd->add_option("--report", report_path, "write the tuning report here");

    auto* bench_cmd = app.add_subcommand("bench", "run an experiment grid");
    bench_cmd->add_option("experiment", experiment,
                          "uniqueness|false-positives|robustness|timing|attack-impact")
        ->required();
    bench_cmd->add_option("--model", model, "er|ba|ws");
    bench_cmd->add_option("--n", n);
    bench_cmd->add_option("--densities", densities, "comma-separated");
    bench_cmd->add_option("--thetas", thetas, "comma-separated");
    bench_cmd->add_option("--flips", flips, "comma-separated flip percents");
    bench_cmd->add_option("--sizes", sizes, "comma-separated vertex counts");
    bench_cmd->add_option("--trials", trials);
    bench_cmd->add_option("--m", m);
    bench_cmd->add_option("--sigma", sigma);
    bench_cmd->add_option("--theta", theta, "robustness threshold (default: calibrate at 10% flips)");
    bench_cmd->add_option("--n0", n0);
    bench_cmd->add_option("--timeout", timeout, "seconds per timing cell");
    bench_cmd->add_option("--k", k, "top-k for attack-impact");
    bench_cmd->add_option("--seed", seed)->required();
    bench_cmd->add_option("--graph", graph_path, "use this graph instead of generating");
    bench_cmd->add_option("--key", key_path, "use this key instead of generating");
    bench_cmd->add_option("--out", out_path, "CSV output path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (keygen_cmd->parsed()) return cmd_keygen(m, sigma, seed, out_path, force);
        if (embed_cmd->parsed())
            return cmd_embed(graph_path, key_path, n0, out_path, receipt_path);
        if (extract_cmd->parsed())
            return cmd_extract(graph_path, suspect_path, key_path, theta, n0);
        if (attack_cmd->parsed())
            return cmd_attack(graph_path, flip_percent, seed, out_path);
        if (ed_cmd->parsed()) return cmd_edit_distance(graph_path, suspect_path);
        if (gen_cmd->parsed())
            return cmd_generate(model, n, std::stod(densities), seed, out_path);
        if (tune_cmd->parsed())
            return cmd_tune(graph_path, m, ed_low, ed_high, flip_percent, trials, n0,
                            seed, report_path);
        if (bench_cmd->parsed())
            return cmd_bench(experiment, model, n, densities, thetas, flips, sizes,
                             trials, m, sigma, theta, n0, timeout, k, seed,
                             graph_path, key_path, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
