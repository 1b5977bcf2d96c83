#include "fnf/tuning.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fnf {

double estimate_sigma_max(const Graph& g, std::int64_t m, std::int32_t n0,
                          std::uint64_t trial_seed) {
    if (m < 1) throw std::invalid_argument("estimate_sigma_max: m must be >= 1");
    const double cap = 18446744073709551616.0;  // 2^64
    for (double sigma = 1.0; sigma <= cap; sigma *= 2.0) {
        const auto out = embed_reduced(g, keygen(m, sigma, trial_seed), n0);
        if (out.receipt.ed_percent > 0.0) return sigma;
    }
    throw std::runtime_error("estimate_sigma_max: graph saturates binarization");
}

TuneResult tune_sigma(const Graph& g, const TuneConfig& cfg) {
    if (!(cfg.ed_target_low >= 0.0 && cfg.ed_target_low < cfg.ed_target_high))
        throw std::invalid_argument("tune_sigma: invalid ED window");

    TuneResult result;
    auto probe = [&](double sigma) {
        const auto out = embed_reduced(g, keygen(cfg.m, sigma, cfg.trial_seed), cfg.n0);
        result.probes.push_back({sigma, out.receipt.ed_percent});
        return out;
    };

    double hi = estimate_sigma_max(g, cfg.m, cfg.n0, cfg.trial_seed);
    double lo = 1.0;
    // sigma_max itself may already land in the window
    {
        auto out = probe(hi);
        const double ed = out.receipt.ed_percent;
        if (ed > cfg.ed_target_low && ed < cfg.ed_target_high) {
            result.sigma = hi;
            result.receipt = std::move(out.receipt);
            return result;
        }
    }

    // ED is non-decreasing in sigma for a fixed trial seed (the key scales
    // linearly), so a dichotomous search brackets the window. Accept the
    // first probe landing inside it: ED is a step function of sigma.
    for (int it = 0; it < cfg.max_iterations; ++it) {
        const double mid = 0.5 * (lo + hi);
        auto out = probe(mid);
        const double ed = out.receipt.ed_percent;
        if (ed > cfg.ed_target_low && ed < cfg.ed_target_high) {
            result.sigma = mid;
            result.receipt = std::move(out.receipt);
            return result;
        }
        if (ed <= cfg.ed_target_low)
            lo = mid;
        else
            hi = mid;
    }
    std::ostringstream msg;
    msg << "tune_sigma: no sigma in window after " << cfg.max_iterations
        << " iterations; closest bracket [" << lo << ", " << hi << "]";
    throw std::runtime_error(msg.str());
}

ThetaCalibration calibrate_theta(const Graph& original, const Key& key,
                                 double flip_percent, int trials,
                                 std::int32_t n0, std::uint64_t attack_seed,
                                 double safety_factor) {
    if (trials < 1) throw std::invalid_argument("calibrate_theta: trials must be >= 1");
    if (flip_percent < 0) throw std::invalid_argument("calibrate_theta: negative percent");

    const auto embedded = embed_reduced(original, key, n0);
    if (!embedded.receipt.succeeded())
        throw std::runtime_error("calibrate_theta: embedding failed (empty watermark)");
    const WatermarkRecord rec = derive_watermark(original, key, n0);

    ThetaCalibration cal;
    cal.flip_percent = flip_percent;
    cal.trials = trials;
    for (int t = 1; t <= trials; ++t) {
        const Graph attacked =
            edge_flip_attack(embedded.watermarked, flip_percent, attack_seed + t);
        const auto res = extract(original, attacked, key, 0.0, n0);
        cal.ratios.push_back(res.normalized);
        cal.observed_max_ratio = std::max(cal.observed_max_ratio, res.normalized);
    }
    cal.theta = cal.observed_max_ratio * safety_factor;
    return cal;
}

std::int64_t choose_key_length(const Graph& g, const KeyLengthPolicy& policy) {
    std::int64_t m = 0;
    switch (policy.kind) {
        case KeyLengthPolicy::Kind::Explicit:
            m = policy.explicit_m;
            break;
        case KeyLengthPolicy::Kind::DensityTable: {
            if (policy.density_table.empty())
                throw std::invalid_argument("choose_key_length: empty density table");
            const double d = density(g);
            // nearest density wins
            auto best = policy.density_table.begin();
            double best_gap = std::abs(best->first - d);
            for (auto it = policy.density_table.begin(); it != policy.density_table.end(); ++it) {
                const double gap = std::abs(it->first - d);
                if (gap < best_gap) {
                    best = it;
                    best_gap = gap;
                }
            }
            m = best->second;
            break;
        }
        case KeyLengthPolicy::Kind::AffineDensity:
            m = static_cast<std::int64_t>(
                std::llround(policy.affine_slope * density(g) + policy.affine_intercept));
            break;
        default:
            throw std::invalid_argument("choose_key_length: unknown policy");
    }
    if (m < 1) throw std::invalid_argument("choose_key_length: policy yields m < 1");
    return m;
}

const std::map<double, std::int64_t>& reference_density_table() {
    // (density, m) pairs from published large-graph runs
    static const std::map<double, std::int64_t> table = {
        {1.1, 54}, {1.4, 48},  {2.6, 200},   {3.0, 63},
        {5.0, 210}, {6.6, 119}, {42.6, 71128}, {51.0, 44743}, {52.7, 162},
    };
    return table;
}

}  // namespace fnf
