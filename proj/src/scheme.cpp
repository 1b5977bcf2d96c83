#include "fnf/scheme.hpp"

#include "fnf/rng.hpp"

#include <nlohmann/json.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fnf {

Key keygen(std::int64_t m, double sigma, std::uint64_t seed) {
    if (m < 0) throw std::invalid_argument("keygen: negative length");
    if (sigma < 0) throw std::invalid_argument("keygen: negative sigma");
    Key key{m, sigma, seed, {}};
    key.values.reserve(m);
    Rng rng(seed);
    for (std::int64_t i = 0; i < m; ++i) key.values.push_back(rng.next_gaussian(sigma));
    return key;
}

void save_key(const Key& key, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write key file: " + path);
    out << "fnf-key 1\n";
    out << "m " << key.m << "\n";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", key.sigma);
    out << "sigma " << buf << "\n";
    out << "seed " << key.seed << "\n";
    out << "values\n";
    for (double v : key.values) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out << buf << "\n";
    }
}

Key load_key(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open key file: " + path);
    std::string magic;
    int version = 0;
    if (!(in >> magic >> version) || magic != "fnf-key" || version != 1)
        throw std::runtime_error("not a key file: " + path);

    Key key;
    std::string field;
    while (in >> field) {
        if (field == "m")
            in >> key.m;
        else if (field == "sigma")
            in >> key.sigma;
        else if (field == "seed")
            in >> key.seed;
        else if (field == "values")
            break;
        else
            throw std::runtime_error("unknown key field: " + field);
    }
    double v;
    while (in >> v) key.values.push_back(v);
    if (static_cast<std::int64_t>(key.values.size()) != key.m)
        throw std::runtime_error("key file value count does not match m");
    return key;
}

namespace {

// Algorithm core on an adjacency matrix; shared by embed and derive.
struct CoreResult {
    Eigen::MatrixXd a_w;
    IndexSequence chi;
    double threshold;
};

CoreResult embed_core(const Eigen::MatrixXd& a, const Key& key) {
    const auto n = static_cast<std::int64_t>(a.rows());
    if (key.m > n * n) throw std::invalid_argument("embed: key longer than N^2");

    const double th = average_entry(a);
    if (key.m == 0) return {a, {}, th};

    const ComplexMatrix f = dft2(a);
    IndexSequence chi = lowest_magnitude_indices(f, key.m);
    const ComplexMatrix placed = place_key(key.values, chi, static_cast<std::int32_t>(n));
    const ComplexMatrix aprime = a.cast<std::complex<double>>() + idft2(placed);
    return {binarize(aprime, th), std::move(chi), th};
}

double receipt_ed(const Graph& original, const Graph& watermarked) {
    if (original.num_edges() == 0)
        return original == watermarked ? 0.0 : 100.0;
    return edit_distance_percent(original, watermarked);
}

}  // namespace

EmbedOutcome embed_full(const Graph& g, const Key& key) {
    auto core = embed_core(adjacency(g), key);
    EmbedOutcome out;
    out.watermarked = graph_from_adjacency(core.a_w);
    out.receipt.ed_percent = receipt_ed(g, out.watermarked);
    out.receipt.chi = std::move(core.chi);
    out.receipt.threshold_used = core.threshold;
    out.receipt.n0_used = kFullGraph;
    return out;
}

EmbedOutcome embed_reduced(const Graph& g, const Key& key, std::int32_t n0) {
    if (n0 == kFullGraph || n0 >= g.num_vertices()) return embed_full(g, key);
    if (n0 < 1) throw std::invalid_argument("embed_reduced: n0 must be >= 1");

    const auto sel = top_degree_selection(g, n0);
    const auto sub = induced_subgraph(g, sel);
    auto core = embed_core(adjacency(sub), key);

    EmbedOutcome out;
    out.watermarked = splice_subgraph(g, sel, graph_from_adjacency(core.a_w));
    out.receipt.ed_percent = receipt_ed(g, out.watermarked);
    out.receipt.chi = std::move(core.chi);
    out.receipt.threshold_used = core.threshold;
    out.receipt.n0_used = n0;
    out.receipt.selection = sel.kept;
    return out;
}

void save_receipt(const EmbedReceipt& r, const std::string& path) {
    nlohmann::json j;
    j["format"] = "fnf-receipt";
    j["version"] = 1;
    j["ed_percent"] = r.ed_percent;
    j["threshold_used"] = r.threshold_used;
    j["n0_used"] = r.n0_used == kFullGraph ? nlohmann::json("full") : nlohmann::json(r.n0_used);
    auto chi = nlohmann::json::array();
    for (const auto& [i, jj] : r.chi) chi.push_back({i, jj});
    j["chi"] = std::move(chi);
    j["selection"] = r.selection;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write receipt: " + path);
    out << j.dump(2) << "\n";
}

EmbedReceipt load_receipt(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open receipt: " + path);
    nlohmann::json j;
    in >> j;
    if (j.value("format", "") != "fnf-receipt")
        throw std::runtime_error("not a receipt file: " + path);
    EmbedReceipt r;
    r.ed_percent = j.at("ed_percent").get<double>();
    r.threshold_used = j.at("threshold_used").get<double>();
    if (j.at("n0_used").is_string())
        r.n0_used = kFullGraph;
    else
        r.n0_used = j.at("n0_used").get<std::int32_t>();
    for (const auto& p : j.at("chi"))
        r.chi.emplace_back(p.at(0).get<std::int32_t>(), p.at(1).get<std::int32_t>());
    r.selection = j.at("selection").get<std::vector<std::int32_t>>();
    return r;
}

WatermarkRecord derive_watermark(const Graph& g, const Key& key, std::int32_t n0) {
    WatermarkRecord rec;
    Eigen::MatrixXd a;
    Eigen::MatrixXd a_w;
    if (n0 == kFullGraph || n0 >= g.num_vertices()) {
        a = adjacency(g);
        a_w = embed_core(a, key).a_w;
    } else {
        const auto sel = top_degree_selection(g, n0);
        a = adjacency(induced_subgraph(g, sel));
        a_w = embed_core(a, key).a_w;
        rec.selection = sel.kept;
    }
    if (a == a_w)
        throw std::runtime_error("empty watermark: embedding changed no edge");
    rec.w = dft2(Eigen::MatrixXd(a - a_w));
    rec.norm = two_norm(rec.w);
    return rec;
}

ExtractResult extract(const Graph& original, const Graph& suspect,
                      const Key& key, double theta, std::int32_t n0) {
    if (original.num_vertices() != suspect.num_vertices())
        throw std::invalid_argument("extract: vertex count mismatch");
    if (theta < 0) throw std::invalid_argument("extract: negative theta");

    const WatermarkRecord rec = derive_watermark(original, key, n0);

    Eigen::MatrixXd a, a_star;
    if (rec.selection.empty()) {
        a = adjacency(original);
        a_star = adjacency(suspect);
    } else {
        // restrict both graphs by the selection computed on the original
        const auto sel = top_degree_selection(original, n0);
        a = adjacency(induced_subgraph(original, sel));
        a_star = adjacency(induced_subgraph(suspect, sel));
    }
    const ComplexMatrix w_star = dft2(Eigen::MatrixXd(a - a_star));

    ExtractResult res;
    res.score = two_norm(ComplexMatrix(w_star - rec.w));
    res.norm = rec.norm;
    res.normalized = res.score / res.norm;
    res.theta = theta;
    res.verdict = res.score <= theta * res.norm;
    return res;
}

}  // namespace fnf
