#ifndef FNF_RNG_HPP
#define FNF_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace fnf {

/// Seeded generator with a pinned Gaussian transform (Box-Muller over
/// mt19937_64 uniforms), so sampled sequences are stable across platforms
/// and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, bound)
    std::uint64_t next_below(std::uint64_t bound) {
        // rejection to avoid modulo bias
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

    // uniform in (0, 1]
    double next_unit() {
        return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1p-53;
    }

    double next_gaussian(double sigma) {
        if (have_spare_) {
            have_spare_ = false;
            return spare_ * sigma;
        }
        const double u1 = next_unit();
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a) * sigma;
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace fnf

#endif
