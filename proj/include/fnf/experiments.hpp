#ifndef FNF_EXPERIMENTS_HPP
#define FNF_EXPERIMENTS_HPP

#include "fnf/generators.hpp"
#include "fnf/graph.hpp"
#include "fnf/scheme.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fnf {

/// Tabular experiment output. Every row carries the seed that produced it,
/// so a report can be regenerated cell-for-cell.
struct ExperimentReport {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void write_csv(const std::string& path) const;
    std::string to_csv() const;
};

/// ED window upper bound (percent) admitting a handful of changed edges even
/// on graphs far below the million-vertex scale the 0.005% default assumes.
double desk_scale_ed_high(const Graph& g);

/// Per density: tune sigma once, then draw `trials` key pairs with distinct
/// seeds, embed both, and count collisions (equal graphs, different keys).
ExperimentReport uniqueness_experiment(GraphModel model, std::int32_t n,
                                       const std::vector<double>& density_grid,
                                       int trials, std::int64_t m,
                                       std::int32_t n0, std::uint64_t seed);

/// Per base graph: embed a key, regenerate fresh graphs with the same
/// generative parameters, and try extraction across theta_grid.
ExperimentReport false_positive_experiment(GraphModel model, std::int32_t n,
                                           double density,
                                           const std::vector<double>& theta_grid,
                                           int base_graphs, int regenerations,
                                           std::int64_t m, std::int32_t n0,
                                           std::uint64_t seed);

/// Per flip level: attack the watermarked graph and extract.
ExperimentReport robustness_experiment(const Graph& g, const Key& key,
                                       double theta,
                                       const std::vector<double>& flip_grid,
                                       int trials, std::int32_t n0,
                                       std::uint64_t seed);

/// Per size: wall-clock embed and extract (single-threaded); cells exceeding
/// the timeout are marked discarded.
ExperimentReport timing_benchmark(GraphModel model,
                                  const std::vector<std::int32_t>& size_grid,
                                  std::int64_t m, double sigma,
                                  std::int32_t n0, double timeout_seconds,
                                  std::uint64_t seed);

/// Per flip level: attack the ORIGINAL graph and measure the top-k degree
/// ranking Spearman correlation against the original.
ExperimentReport attack_impact_spearman(const Graph& g,
                                        const std::vector<double>& flip_grid,
                                        std::int32_t k, int trials,
                                        std::uint64_t seed);

/// Max relative change over the nonzero Laplacian eigenvalues, sorted pairing.
/// Dense symmetric eigensolve; refuses graphs larger than max_n.
double laplacian_delta(const Graph& g, const Graph& watermarked,
                       std::int32_t max_n = 2048);

}  // namespace fnf

#endif
