#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fnf/generators.hpp"
#include "fnf/scheme.hpp"
#include "fnf/tuning.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

using namespace fnf;

namespace {

struct TempPath {
    std::string path;
    explicit TempPath(const char* stem) {
        path = std::string("fnf_scheme_") + stem + "_" + std::to_string(std::rand()) + ".tmp";
    }
    ~TempPath() { std::remove(path.c_str()); }
};

// a graph plus a key that demonstrably embeds (>= 1 edge changed)
struct Embeddable {
    Graph g;
    Key key;
};

Embeddable make_embeddable(std::uint64_t seed) {
    const Graph g = generate_ba(200, 3, seed);
    const double sigma = estimate_sigma_max(g, 20, kFullGraph, seed + 1);
    return {g, keygen(20, sigma, seed + 1)};
}

}  // namespace

TEST_CASE("keygen") {
    CHECK(keygen(0, 1.0, 5).values.empty());

    const Key k = keygen(210, 1750.0, 9);
    REQUIRE(k.values.size() == 210);
    const double mean = std::accumulate(k.values.begin(), k.values.end(), 0.0) / 210.0;
    double var = 0.0;
    for (double v : k.values) var += (v - mean) * (v - mean);
    const double sd = std::sqrt(var / 210.0);
    CHECK(sd == doctest::Approx(1750.0).epsilon(0.15));

    CHECK(keygen(50, 2.0, 3).values == keygen(50, 2.0, 3).values);
    CHECK(keygen(50, 2.0, 3).values != keygen(50, 2.0, 4).values);

    CHECK_THROWS(keygen(-1, 1.0, 0));
    CHECK_THROWS(keygen(1, -1.0, 0));
}

TEST_CASE("key file round trip") {
    const Key k = keygen(31, 123.456, 77);
    TempPath f("key");
    save_key(k, f.path);
    const Key back = load_key(f.path);
    CHECK(back.m == k.m);
    CHECK(back.sigma == k.sigma);
    CHECK(back.seed == k.seed);
    CHECK(back.values == k.values);  // full double precision preserved
}

TEST_CASE("embed_full with empty key is the identity") {
    const Graph g = generate_er(50, 0.2, 11);
    const auto out = embed_full(g, keygen(0, 0.0, 0));
    CHECK(out.watermarked == g);
    CHECK(out.receipt.ed_percent == 0.0);
    CHECK_FALSE(out.receipt.succeeded());
}

TEST_CASE("embed_full changes the graph at sigma_max") {
    const auto [g, key] = make_embeddable(21);
    const auto out = embed_full(g, key);
    CHECK(out.receipt.succeeded());
    CHECK(out.receipt.ed_percent ==
          doctest::Approx(edit_distance_percent(g, out.watermarked)));
    CHECK(static_cast<std::int64_t>(out.receipt.chi.size()) == key.m);
    CHECK(out.receipt.threshold_used == doctest::Approx(average_entry(adjacency(g))));
}

TEST_CASE("embedding with far too small sigma changes nothing") {
    const Graph g = generate_ba(200, 3, 31);
    const auto out = embed_full(g, keygen(20, 1e-6, 3));
    CHECK(out.watermarked == g);
    CHECK_FALSE(out.receipt.succeeded());
}

TEST_CASE("embed is deterministic") {
    const auto [g, key] = make_embeddable(41);
    CHECK(embed_full(g, key).watermarked == embed_full(g, key).watermarked);
}

TEST_CASE("embed_reduced") {
    const Graph g = generate_ba(300, 3, 51);
    const double sigma = estimate_sigma_max(g, 20, 64, 52);
    const Key key = keygen(20, sigma, 52);

    // n0 >= n falls through to embed_full
    const auto full = embed_full(g, key);
    CHECK(embed_reduced(g, key, 300).watermarked == full.watermarked);
    CHECK(embed_reduced(g, key, kFullGraph).watermarked == full.watermarked);

    // every differing edge has both endpoints in the selection
    const auto out = embed_reduced(g, key, 64);
    CHECK(out.receipt.succeeded());
    CHECK(out.receipt.n0_used == 64);
    REQUIRE(out.receipt.selection.size() == 64);
    std::vector<bool> kept(g.num_vertices(), false);
    for (auto v : out.receipt.selection) kept[v] = true;
    const auto sel = top_degree_selection(g, 64);
    const Graph before = induced_subgraph(g, sel);
    const Graph after = induced_subgraph(out.watermarked, sel);
    // difference confined to the subgraph: splicing the watermarked subgraph
    // back into the original reproduces the watermarked graph
    CHECK(splice_subgraph(g, sel, after) == out.watermarked);
    CHECK_FALSE(before == after);
}

TEST_CASE("receipt file round trip") {
    const Graph g = generate_ba(300, 3, 61);
    const double sigma = estimate_sigma_max(g, 10, 64, 62);
    const auto out = embed_reduced(g, keygen(10, sigma, 62), 64);
    TempPath f("receipt");
    save_receipt(out.receipt, f.path);
    const auto back = load_receipt(f.path);
    CHECK(back.ed_percent == out.receipt.ed_percent);
    CHECK(back.threshold_used == out.receipt.threshold_used);
    CHECK(back.n0_used == out.receipt.n0_used);
    CHECK(back.chi == out.receipt.chi);
    CHECK(back.selection == out.receipt.selection);
}

TEST_CASE("derive_watermark") {
    const auto [g, key] = make_embeddable(71);

    const auto rec1 = derive_watermark(g, key, kFullGraph);
    const auto rec2 = derive_watermark(g, key, kFullGraph);
    CHECK(rec1.w == rec2.w);
    CHECK(rec1.norm == doctest::Approx(two_norm(rec1.w)));
    CHECK(rec1.norm > 0.0);

    // failed embedding -> empty watermark error
    CHECK_THROWS_AS(derive_watermark(g, keygen(5, 1e-9, 1), kFullGraph),
                    std::runtime_error);
}

TEST_CASE("extract: watermarked graph at theta 0") {
    const auto [g, key] = make_embeddable(81);
    const auto out = embed_full(g, key);
    const auto res = extract(g, out.watermarked, key, 0.0, kFullGraph);
    CHECK(res.score == 0.0);
    CHECK(res.verdict);
}

TEST_CASE("extract: original as suspect gives s = norm") {
    const auto [g, key] = make_embeddable(91);
    const auto res = extract(g, g, key, 0.5, kFullGraph);
    CHECK(res.score == doctest::Approx(res.norm).epsilon(1e-12));
    CHECK(res.normalized == doctest::Approx(1.0));
    CHECK_FALSE(res.verdict);  // theta < 1
    CHECK(extract(g, g, key, 1.0, kFullGraph).verdict);
}

TEST_CASE("extract: verdict monotone in theta") {
    const auto [g, key] = make_embeddable(101);
    const auto out = embed_full(g, key);
    const Graph attacked = edge_flip_attack(out.watermarked, 5.0, 5);
    bool seen_true = false;
    for (double theta : {0.0, 0.5, 1.0, 2.0, 5.0, 20.0, 1e6}) {
        const bool v = extract(g, attacked, key, theta, kFullGraph).verdict;
        if (seen_true) CHECK(v);
        seen_true = seen_true || v;
    }
    CHECK(seen_true);
}

TEST_CASE("extract errors") {
    const auto [g, key] = make_embeddable(111);
    CHECK_THROWS(extract(g, generate_er(10, 0.5, 1), key, 1.0, kFullGraph));
    CHECK_THROWS(extract(g, g, key, -1.0, kFullGraph));
}
