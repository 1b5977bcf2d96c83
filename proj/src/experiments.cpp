#include "fnf/experiments.hpp"

#include "fnf/tuning.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fnf {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Retry rule: an embedding that changes nothing is repeated with a larger
// sigma until at least one edge flips.
struct RetriedEmbed {
    EmbedOutcome out;
    Key key;
};

RetriedEmbed embed_with_retry(const Graph& g, std::int64_t m, double sigma,
                              std::uint64_t key_seed, std::int32_t n0) {
    for (;; sigma *= 2.0) {
        Key key = keygen(m, sigma, key_seed);
        auto out = embed_reduced(g, key, n0);
        if (out.receipt.succeeded()) return {std::move(out), std::move(key)};
        if (sigma > 1e30) throw std::runtime_error("embedding never succeeds");
    }
}

}  // namespace

double desk_scale_ed_high(const Graph& g) {
    return std::max(0.005, 100.0 * 5.5 / static_cast<double>(g.num_edges()));
}

std::string ExperimentReport::to_csv() const {
    std::ostringstream os;
    for (std::size_t c = 0; c < columns.size(); ++c)
        os << columns[c] << (c + 1 < columns.size() ? "," : "\n");
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            os << row[c] << (c + 1 < row.size() ? "," : "\n");
    return os.str();
}

void ExperimentReport::write_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report: " + path);
    out << to_csv();
}

ExperimentReport uniqueness_experiment(GraphModel model, std::int32_t n,
                                       const std::vector<double>& density_grid,
                                       int trials, std::int64_t m,
                                       std::int32_t n0, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("uniqueness_experiment: trials >= 1");
    ExperimentReport rep;
    rep.name = "uniqueness";
    rep.columns = {"model", "n", "density", "m", "sigma", "trials", "collisions",
                   "success_rate", "seed"};

    std::uint64_t key_seed = seed * 1000003ULL;
    for (double d : density_grid) {
        const Graph g = generate_with_density(model, n, d, seed);
        TuneConfig cfg;
        cfg.m = m;
        cfg.n0 = n0;
        cfg.ed_target_high = desk_scale_ed_high(g);
        cfg.trial_seed = seed + 17;
        const auto tuned = tune_sigma(g, cfg);

        int collisions = 0;
        for (int t = 0; t < trials; ++t) {
            const std::uint64_t s1 = ++key_seed;
            const std::uint64_t s2 = ++key_seed;
            const auto w1 = embed_with_retry(g, m, tuned.sigma, s1, n0);
            const auto w2 = embed_with_retry(g, m, tuned.sigma, s2, n0);
            if (s1 != s2 && w1.out.watermarked == w2.out.watermarked) ++collisions;
        }
        rep.rows.push_back({model_name(model), std::to_string(n), fmt(d),
                            std::to_string(m), fmt(tuned.sigma), std::to_string(trials),
                            std::to_string(collisions),
                            fmt(1.0 - static_cast<double>(collisions) / trials),
                            std::to_string(seed)});
    }
    return rep;
}

ExperimentReport false_positive_experiment(GraphModel model, std::int32_t n,
                                           double density,
                                           const std::vector<double>& theta_grid,
                                           int base_graphs, int regenerations,
                                           std::int64_t m, std::int32_t n0,
                                           std::uint64_t seed) {
    ExperimentReport rep;
    rep.name = "false_positive";
    rep.columns = {"model", "n", "density", "theta", "attempts", "false_positives",
                   "fp_rate", "min_ratio", "seed"};

    // collect normalized scores of extraction attempts on fresh graphs
    std::vector<double> ratios;
    for (int b = 0; b < base_graphs; ++b) {
        const std::uint64_t gseed = seed + 1000ULL * b;
        const Graph g = generate_with_density(model, n, density, gseed);
        TuneConfig cfg;
        cfg.m = m;
        cfg.n0 = n0;
        cfg.ed_target_high = desk_scale_ed_high(g);
        cfg.trial_seed = gseed + 7;
        const auto tuned = tune_sigma(g, cfg);
        const Key key = embed_with_retry(g, m, tuned.sigma, gseed + 13, n0).key;
        for (int r = 1; r <= regenerations; ++r) {
            const Graph fresh = generate_with_density(model, n, density, gseed + r);
            const auto res = extract(g, fresh, key, 0.0, n0);
            ratios.push_back(res.normalized);
        }
    }
    const double min_ratio = *std::min_element(ratios.begin(), ratios.end());
    for (double theta : theta_grid) {
        const auto fp = static_cast<int>(
            std::count_if(ratios.begin(), ratios.end(), [theta](double r) { return r <= theta; }));
        rep.rows.push_back({model_name(model), std::to_string(n), fmt(density), fmt(theta),
                            std::to_string(static_cast<int>(ratios.size())), std::to_string(fp),
                            fmt(static_cast<double>(fp) / ratios.size()), fmt(min_ratio),
                            std::to_string(seed)});
    }
    return rep;
}

ExperimentReport robustness_experiment(const Graph& g, const Key& key,
                                       double theta,
                                       const std::vector<double>& flip_grid,
                                       int trials, std::int32_t n0,
                                       std::uint64_t seed) {
    const auto embedded = embed_reduced(g, key, n0);
    if (!embedded.receipt.succeeded())
        throw std::runtime_error("robustness_experiment: embedding failed");

    ExperimentReport rep;
    rep.name = "robustness";
    rep.columns = {"flip_percent", "trials", "successes", "success_rate", "theta", "seed"};
    std::uint64_t attack_seed = seed;
    for (double flip : flip_grid) {
        int successes = 0;
        for (int t = 0; t < trials; ++t) {
            const Graph attacked = edge_flip_attack(embedded.watermarked, flip, ++attack_seed);
            if (extract(g, attacked, key, theta, n0).verdict) ++successes;
        }
        rep.rows.push_back({fmt(flip), std::to_string(trials), std::to_string(successes),
                            fmt(static_cast<double>(successes) / trials), fmt(theta),
                            std::to_string(seed)});
    }
    return rep;
}

ExperimentReport timing_benchmark(GraphModel model,
                                  const std::vector<std::int32_t>& size_grid,
                                  std::int64_t m, double sigma,
                                  std::int32_t n0, double timeout_seconds,
                                  std::uint64_t seed) {
    ExperimentReport rep;
    rep.name = "timing";
    rep.columns = {"model", "n", "n0", "embed_seconds", "extract_seconds", "status", "seed"};
    for (auto n : size_grid) {
        const Graph g = generate_with_density(model, n, 3.0, seed);
        const Key key = keygen(m, sigma, seed + 3);

        const auto t0 = std::chrono::steady_clock::now();
        const auto embedded = embed_reduced(g, key, n0);
        const double embed_s = seconds_since(t0);
        if (embed_s > timeout_seconds) {
            rep.rows.push_back({model_name(model), std::to_string(n), std::to_string(n0),
                                fmt(embed_s), "", "discarded", std::to_string(seed)});
            continue;
        }
        double extract_s = 0.0;
        std::string status = "ok";
        if (embedded.receipt.succeeded()) {
            const auto t1 = std::chrono::steady_clock::now();
            extract(g, embedded.watermarked, key, 0.0, n0);
            extract_s = seconds_since(t1);
            if (extract_s > timeout_seconds) status = "discarded";
        } else {
            status = "embed_failed";
        }
        rep.rows.push_back({model_name(model), std::to_string(n), std::to_string(n0),
                            fmt(embed_s), fmt(extract_s), status, std::to_string(seed)});
    }
    return rep;
}

ExperimentReport attack_impact_spearman(const Graph& g,
                                        const std::vector<double>& flip_grid,
                                        std::int32_t k, int trials,
                                        std::uint64_t seed) {
    ExperimentReport rep;
    rep.name = "attack_impact_spearman";
    rep.columns = {"flip_percent", "k", "trials", "mean_spearman", "seed"};
    std::uint64_t attack_seed = seed;
    for (double flip : flip_grid) {
        double sum = 0.0;
        for (int t = 0; t < trials; ++t) {
            const Graph attacked = edge_flip_attack(g, flip, ++attack_seed);
            sum += topk_degree_spearman(g, attacked, k);
        }
        rep.rows.push_back({fmt(flip), std::to_string(k), std::to_string(trials),
                            fmt(sum / trials), std::to_string(seed)});
    }
    return rep;
}

double laplacian_delta(const Graph& g, const Graph& watermarked, std::int32_t max_n) {
    if (g.num_vertices() > max_n)
        throw std::invalid_argument("laplacian_delta: graph exceeds max_n");
    if (g.num_vertices() != watermarked.num_vertices())
        throw std::invalid_argument("laplacian_delta: vertex count mismatch");

    auto laplacian_eigs = [](const Graph& graph) {
        Eigen::MatrixXd l = -adjacency(graph);
        const auto deg = graph.degrees();
        for (std::int32_t i = 0; i < graph.num_vertices(); ++i)
            l(i, i) = static_cast<double>(deg[i]);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l, Eigen::EigenvaluesOnly);
        return Eigen::VectorXd(solver.eigenvalues());  // ascending
    };

    const Eigen::VectorXd e1 = laplacian_eigs(g);
    const Eigen::VectorXd e2 = laplacian_eigs(watermarked);
    const double zero_tol = 1e-8 * std::max(1.0, e1.cwiseAbs().maxCoeff());
    double max_rel = 0.0;
    for (Eigen::Index i = 0; i < e1.size(); ++i) {
        if (std::abs(e1[i]) <= zero_tol) continue;
        max_rel = std::max(max_rel, std::abs(e2[i] - e1[i]) / std::abs(e1[i]));
    }
    return max_rel;
}

}  // namespace fnf
