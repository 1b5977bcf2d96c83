#include "fnf/generators.hpp"

#include "fnf/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace fnf {

GraphModel parse_model(const std::string& name) {
    if (name == "er" || name == "ER") return GraphModel::ER;
    if (name == "ba" || name == "BA") return GraphModel::BA;
    if (name == "ws" || name == "WS") return GraphModel::WS;
    throw std::invalid_argument("unknown graph model: " + name);
}

std::string model_name(GraphModel model) {
    switch (model) {
        case GraphModel::ER: return "er";
        case GraphModel::BA: return "ba";
        case GraphModel::WS: return "ws";
    }
    return "?";
}

Graph generate_er(std::int32_t n, double p, std::uint64_t seed) {
    if (n < 1 || p < 0.0 || p > 1.0) throw std::invalid_argument("generate_er: bad parameters");
    std::vector<Edge> edges;
    if (p > 0.0) {
        Rng rng(seed);
        const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        if (p >= 1.0) {
            for (std::int32_t j = 1; j < n; ++j)
                for (std::int32_t i = 0; i < j; ++i) edges.emplace_back(i, j);
        } else {
            // geometric skip sampling over the colex-ordered pair stream
            const double log_q = std::log1p(-p);
            double pos = -1.0;
            while (true) {
                pos += 1.0 + std::floor(std::log(rng.next_unit()) / log_q);
                if (pos >= static_cast<double>(total)) break;
                const auto idx = static_cast<std::uint64_t>(pos);
                auto j = static_cast<std::int64_t>(
                    (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
                while (static_cast<std::uint64_t>(j) * (j - 1) / 2 > idx) --j;
                while (static_cast<std::uint64_t>(j + 1) * j / 2 <= idx) ++j;
                const auto i = static_cast<std::int32_t>(
                    idx - static_cast<std::uint64_t>(j) * (j - 1) / 2);
                edges.emplace_back(i, static_cast<std::int32_t>(j));
            }
        }
    }
    return Graph(n, std::move(edges));
}

Graph generate_ba(std::int32_t n, std::int32_t attachment, std::uint64_t seed) {
    if (attachment < 1 || n < attachment)
        throw std::invalid_argument("generate_ba: need n >= attachment >= 1");
    Rng rng(seed);
    std::vector<Edge> edges;
    // degree-proportional sampling via the repeated-endpoints list
    std::vector<std::int32_t> endpoints;
    for (std::int32_t j = 1; j < attachment; ++j)
        for (std::int32_t i = 0; i < j; ++i) {
            edges.emplace_back(i, j);
            endpoints.push_back(i);
            endpoints.push_back(j);
        }
    if (attachment == 1 && n > 1) {
        // degenerate seed: single vertex, no edges yet; attach uniformly first
        endpoints.push_back(0);
    }
    for (std::int32_t v = attachment; v < n; ++v) {
        std::unordered_set<std::int32_t> targets;
        while (static_cast<std::int32_t>(targets.size()) < std::min(attachment, v)) {
            targets.insert(endpoints[rng.next_below(endpoints.size())]);
        }
        for (auto t : targets) {
            edges.emplace_back(std::min(t, v), std::max(t, v));
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return Graph(n, std::move(edges));
}

Graph generate_ws(std::int32_t n, std::int32_t k, double beta, std::uint64_t seed) {
    if (k < 2 || k % 2 != 0 || k >= n || beta < 0.0 || beta > 1.0)
        throw std::invalid_argument("generate_ws: bad parameters");
    Rng rng(seed);
    std::unordered_set<std::uint64_t> present;
    auto code = [](std::int32_t a, std::int32_t b) {
        if (a > b) std::swap(a, b);
        return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    };
    std::vector<Edge> ring;
    for (std::int32_t v = 0; v < n; ++v)
        for (std::int32_t d = 1; d <= k / 2; ++d) {
            const std::int32_t u = (v + d) % n;
            ring.emplace_back(std::min(v, u), std::max(v, u));
            present.insert(code(v, u));
        }
    std::vector<Edge> edges;
    for (const auto& [u, v] : ring) {
        if (beta > 0.0 && rng.next_unit() <= beta) {
            // rewire the far endpoint, keeping the graph simple
            std::int32_t w;
            int attempts = 0;
            do {
                w = static_cast<std::int32_t>(rng.next_below(n));
                if (++attempts > 4 * n) break;  // nearly complete neighborhood
            } while (w == u || present.count(code(u, w)) != 0);
            if (w != u && present.count(code(u, w)) == 0) {
                present.erase(code(u, v));
                present.insert(code(u, w));
                edges.emplace_back(std::min(u, w), std::max(u, w));
                continue;
            }
        }
        edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

Graph generate_with_density(GraphModel model, std::int32_t n, double density,
                            std::uint64_t seed) {
    switch (model) {
        case GraphModel::ER:
            return generate_er(n, std::min(1.0, 2.0 * density / (n - 1)), seed);
        case GraphModel::BA:
            return generate_ba(n, std::max<std::int32_t>(1, static_cast<std::int32_t>(std::lround(density))), seed);
        case GraphModel::WS: {
            auto k = static_cast<std::int32_t>(std::lround(2.0 * density));
            if (k % 2 != 0) ++k;
            return generate_ws(n, std::max(2, k), 0.1, seed);
        }
    }
    throw std::invalid_argument("generate_with_density: unknown model");
}

}  // namespace fnf
