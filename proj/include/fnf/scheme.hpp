#ifndef FNF_SCHEME_HPP
#define FNF_SCHEME_HPP

#include "fnf/graph.hpp"
#include "fnf/spectral.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fnf {

/// n0 value meaning "no dimensionality reduction".
inline constexpr std::int32_t kFullGraph = 0;

struct Key {
    std::int64_t m = 0;
    double sigma = 0.0;
    std::uint64_t seed = 0;
    std::vector<double> values;  // stored verbatim; a key file is self-contained
};

Key keygen(std::int64_t m, double sigma, std::uint64_t seed);

void save_key(const Key& key, const std::string& path);
Key load_key(const std::string& path);

struct EmbedReceipt {
    double ed_percent = 0.0;            // vs the full original graph
    IndexSequence chi;
    double threshold_used = 0.0;        // av(A) on the embedding dimension
    std::int32_t n0_used = kFullGraph;  // kFullGraph when no reduction applied
    std::vector<std::int32_t> selection;  // kept labels, empty when full
    bool succeeded() const { return ed_percent > 0.0; }
};

struct EmbedOutcome {
    Graph watermarked;
    EmbedReceipt receipt;
};

/// Algorithm: A = adjacency, th = av(A), F = dft2(A), chi = lowest-m |F|,
/// place key, A' = A + idft2(placed), binarize at th.
EmbedOutcome embed_full(const Graph& g, const Key& key);

/// Embeds on the induced subgraph of the n0 highest-degree vertices and
/// splices the result back. n0 >= n (or kFullGraph) falls through to embed_full.
EmbedOutcome embed_reduced(const Graph& g, const Key& key, std::int32_t n0);

void save_receipt(const EmbedReceipt& r, const std::string& path);
EmbedReceipt load_receipt(const std::string& path);

struct WatermarkRecord {
    ComplexMatrix w;      // FT(A) - FT(A_W) on the embedding dimension
    double norm = 0.0;    // two_norm(w)
    std::vector<std::int32_t> selection;  // empty when full
};

/// Recomputes A_W deterministically and returns W = dft2(A - A_W).
/// Throws if the embedding changed nothing (empty watermark).
WatermarkRecord derive_watermark(const Graph& g, const Key& key, std::int32_t n0);

struct ExtractResult {
    double score = 0.0;       // s = ||W* - W||_2
    double norm = 0.0;        // ||W||_2
    double normalized = 0.0;  // s / ||W||_2
    double theta = 0.0;
    bool verdict = false;     // score <= theta * norm
};

/// Non-blind extraction: both graphs are restricted by the selection computed
/// on the ORIGINAL graph's degrees.
ExtractResult extract(const Graph& original, const Graph& suspect,
                      const Key& key, double theta, std::int32_t n0);

}  // namespace fnf

#endif
