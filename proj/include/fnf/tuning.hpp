#ifndef FNF_TUNING_HPP
#define FNF_TUNING_HPP

#include "fnf/graph.hpp"
#include "fnf/scheme.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fnf {

struct TuneConfig {
    double ed_target_low = 1e-9;    // percent, exclusive lower bound (ED > 0)
    double ed_target_high = 0.005;  // percent, exclusive upper bound
    std::int64_t m = 1;
    std::int32_t n0 = kFullGraph;
    int max_iterations = 64;
    std::uint64_t trial_seed = 1;
};

struct SigmaProbe {
    double sigma;
    double ed_percent;
};

struct TuneResult {
    double sigma = 0.0;
    EmbedReceipt receipt;
    std::vector<SigmaProbe> probes;  // search history, in probe order
};

/// Doubles sigma from 1 until a trial embedding changes at least one edge;
/// the returned value is an upper bracket, not a minimum.
double estimate_sigma_max(const Graph& g, std::int64_t m, std::int32_t n0,
                          std::uint64_t trial_seed = 1);

/// Dichotomous search over sigma in [1, sigma_max] until the trial ED lands
/// strictly inside (ed_target_low, ed_target_high).
TuneResult tune_sigma(const Graph& g, const TuneConfig& cfg);

struct ThetaCalibration {
    double flip_percent = 0.0;
    int trials = 0;
    double theta = 0.0;
    double observed_max_ratio = 0.0;
    std::vector<double> ratios;
};

/// Embeds once, attacks the watermarked graph `trials` times at flip_percent,
/// and returns theta = safety_factor * max ratio s_t/||W||_2 -- the smallest
/// threshold with zero false negatives over the observed attacks.
ThetaCalibration calibrate_theta(const Graph& original, const Key& key,
                                 double flip_percent, int trials,
                                 std::int32_t n0, std::uint64_t attack_seed,
                                 double safety_factor = 1.0);

struct KeyLengthPolicy {
    enum class Kind { Explicit, DensityTable, AffineDensity };
    Kind kind = Kind::Explicit;
    std::int64_t explicit_m = 0;
    std::map<double, std::int64_t> density_table;  // density -> m, nearest lookup
    double affine_slope = 0.0;
    double affine_intercept = 0.0;
};

std::int64_t choose_key_length(const Graph& g, const KeyLengthPolicy& policy);

/// Reference (density, m) pairs from published large-graph runs, usable with
/// the DensityTable policy.
const std::map<double, std::int64_t>& reference_density_table();

}  // namespace fnf

#endif
