#ifndef FNF_GENERATORS_HPP
#define FNF_GENERATORS_HPP

#include "fnf/graph.hpp"

#include <cstdint>
#include <string>

namespace fnf {

enum class GraphModel { ER, BA, WS };

GraphModel parse_model(const std::string& name);
std::string model_name(GraphModel model);

/// G(n, p): every pair independently with probability p (skip sampling).
Graph generate_er(std::int32_t n, double p, std::uint64_t seed);

/// Complete seed of `attachment` vertices, then degree-proportional
/// preferential attachment of `attachment` edges per new vertex.
Graph generate_ba(std::int32_t n, std::int32_t attachment, std::uint64_t seed);

/// Ring lattice of even degree k, each edge rewired with probability beta.
Graph generate_ws(std::int32_t n, std::int32_t k, double beta, std::uint64_t seed);

/// Generates with parameters chosen so that |E|/n is approximately `density`:
/// ER p = 2d/(n-1), BA attachment d, WS k = 2d (beta 0.1).
Graph generate_with_density(GraphModel model, std::int32_t n, double density,
                            std::uint64_t seed);

}  // namespace fnf

#endif
