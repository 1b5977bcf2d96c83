#include "fnf/graph.hpp"

#include "fnf/rng.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace fnf {

namespace {

// colex pair encoding: (i, j) with i < j  <->  j(j-1)/2 + i
std::uint64_t encode_pair(std::int32_t i, std::int32_t j) {
    return static_cast<std::uint64_t>(j) * (j - 1) / 2 + i;
}

Edge decode_pair(std::uint64_t idx) {
    auto j = static_cast<std::int64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
    // correct floating rounding at large indices
    while (static_cast<std::uint64_t>(j) * (j - 1) / 2 > idx) --j;
    while (static_cast<std::uint64_t>(j + 1) * j / 2 <= idx) ++j;
    auto i = static_cast<std::int32_t>(idx - static_cast<std::uint64_t>(j) * (j - 1) / 2);
    return {i, static_cast<std::int32_t>(j)};
}

}  // namespace

Graph::Graph(std::int32_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("graph: self-loop");
        if (u < 0 || v >= n_) throw std::invalid_argument("graph: endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::has_edge(std::int32_t u, std::int32_t v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<std::int64_t> Graph::degrees() const {
    std::vector<std::int64_t> deg(n_, 0);
    for (const auto& [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

LoadResult load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);

    std::vector<Edge> edges;
    std::int64_t self_loops = 0;
    std::int32_t max_id = -1;
    std::int32_t pinned_n = -1;
    std::string line;
    std::int64_t line_no = 0;
    bool saw_data = false;

    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        if (line[first] == '%') {
            auto pos = line.find("n=");
            if (pos != std::string::npos) {
                try {
                    pinned_n = std::stoi(line.substr(pos + 2));
                } catch (const std::exception&) {
                    throw std::runtime_error("bad header at line " + std::to_string(line_no));
                }
            }
            continue;
        }
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u >> v) || u < 0 || v < 0) {
            throw std::runtime_error("malformed edge at line " + std::to_string(line_no));
        }
        saw_data = true;
        if (u == v) {
            ++self_loops;
            max_id = std::max<std::int32_t>(max_id, static_cast<std::int32_t>(u));
            continue;
        }
        auto a = static_cast<std::int32_t>(std::min(u, v));
        auto b = static_cast<std::int32_t>(std::max(u, v));
        edges.emplace_back(a, b);
        max_id = std::max(max_id, b);
    }
    if (!saw_data && pinned_n < 0) throw std::runtime_error("empty edge list: " + path);

    std::int32_t n = max_id + 1;
    if (pinned_n >= 0) {
        if (pinned_n < n) throw std::runtime_error("header n smaller than max vertex id");
        n = pinned_n;
    }
    return {Graph(n, std::move(edges)), self_loops};
}

void save_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write edge list: " + path);
    out << "% n=" << g.num_vertices() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

Eigen::MatrixXd adjacency(const Graph& g) {
    const auto n = g.num_vertices();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [u, v] : g.edges()) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    return a;
}

Graph graph_from_adjacency(const Eigen::MatrixXd& a) {
    const auto n = static_cast<std::int32_t>(a.rows());
    std::vector<Edge> edges;
    for (std::int32_t j = 1; j < n; ++j)
        for (std::int32_t i = 0; i < j; ++i)
            if (a(i, j) != 0.0) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

double average_entry(const Eigen::MatrixXd& a) {
    return a.sum() / (static_cast<double>(a.rows()) * static_cast<double>(a.cols()));
}

SubgraphSelection top_degree_selection(const Graph& g, std::int32_t n0) {
    if (n0 < 1) throw std::invalid_argument("top_degree_selection: n0 must be >= 1");
    const auto n = g.num_vertices();
    const auto deg = g.degrees();
    const auto keep = std::min(n0, n);

    // bounded selection: partial sort by (degree desc, label asc)
    std::vector<std::int32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto better = [&deg](std::int32_t a, std::int32_t b) {
        if (deg[a] != deg[b]) return deg[a] > deg[b];
        return a < b;
    };
    std::partial_sort(order.begin(), order.begin() + keep, order.end(), better);
    order.resize(keep);

    SubgraphSelection sel;
    sel.kept = std::move(order);
    sel.local_index.assign(n, -1);
    for (std::int32_t i = 0; i < keep; ++i) sel.local_index[sel.kept[i]] = i;
    return sel;
}

Graph induced_subgraph(const Graph& g, const SubgraphSelection& sel) {
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        const auto lu = sel.local_index[u];
        const auto lv = sel.local_index[v];
        if (lu >= 0 && lv >= 0) edges.emplace_back(std::min(lu, lv), std::max(lu, lv));
    }
    return Graph(static_cast<std::int32_t>(sel.kept.size()), std::move(edges));
}

Graph splice_subgraph(const Graph& full, const SubgraphSelection& sel,
                      const Graph& modified_sub) {
    if (modified_sub.num_vertices() != static_cast<std::int32_t>(sel.kept.size()))
        throw std::invalid_argument("splice_subgraph: size mismatch");

    std::vector<Edge> edges;
    edges.reserve(full.num_edges() + modified_sub.num_edges());
    for (const auto& [u, v] : full.edges()) {
        if (sel.local_index[u] >= 0 && sel.local_index[v] >= 0) continue;  // replaced below
        edges.emplace_back(u, v);
    }
    for (const auto& [lu, lv] : modified_sub.edges()) {
        const auto u = sel.kept[lu];
        const auto v = sel.kept[lv];
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return Graph(full.num_vertices(), std::move(edges));
}

double edit_distance_percent(const Graph& g1, const Graph& g2) {
    if (g1.num_vertices() != g2.num_vertices())
        throw std::invalid_argument("edit_distance: vertex count mismatch");
    if (g1.num_edges() == 0) {
        if (g2.num_edges() == 0) return 0.0;
        throw std::invalid_argument("edit_distance: reference graph has no edges");
    }
    const auto& e1 = g1.edges();
    const auto& e2 = g2.edges();
    std::size_t i = 0, j = 0;
    std::int64_t diff = 0;
    while (i < e1.size() && j < e2.size()) {
        if (e1[i] == e2[j]) {
            ++i;
            ++j;
        } else if (e1[i] < e2[j]) {
            ++diff;
            ++i;
        } else {
            ++diff;
            ++j;
        }
    }
    diff += static_cast<std::int64_t>((e1.size() - i) + (e2.size() - j));
    return 100.0 * static_cast<double>(diff) / static_cast<double>(g1.num_edges());
}

Graph edge_flip_attack(const Graph& g, double flip_percent, std::uint64_t seed) {
    if (flip_percent < 0) throw std::invalid_argument("edge_flip_attack: negative percent");
    const auto n = g.num_vertices();
    const std::uint64_t total_pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const auto k = static_cast<std::uint64_t>(
        std::llround(flip_percent / 100.0 * static_cast<double>(g.num_edges())));
    if (k > total_pairs)
        throw std::invalid_argument("edge_flip_attack: more flips than vertex pairs");
    if (k == 0) return g;

    Rng rng(seed);
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(k * 2);
    while (chosen.size() < k) chosen.insert(rng.next_below(total_pairs));

    std::unordered_set<std::uint64_t> edge_set;
    edge_set.reserve(g.edges().size() * 2);
    for (const auto& [u, v] : g.edges()) edge_set.insert(encode_pair(u, v));
    for (auto idx : chosen) {
        auto it = edge_set.find(idx);
        if (it != edge_set.end())
            edge_set.erase(it);
        else
            edge_set.insert(idx);
    }

    std::vector<Edge> edges;
    edges.reserve(edge_set.size());
    for (auto idx : edge_set) edges.push_back(decode_pair(idx));
    return Graph(n, std::move(edges));
}

double topk_degree_spearman(const Graph& g1, const Graph& g2, std::int32_t k) {
    if (g1.num_vertices() != g2.num_vertices())
        throw std::invalid_argument("spearman: vertex count mismatch");
    if (k < 1 || k > g1.num_vertices())
        throw std::invalid_argument("spearman: k out of range");

    const auto sel = top_degree_selection(g1, k);
    const auto deg2 = g2.degrees();

    // rank the same k vertices by their degree in g2 (desc, label asc)
    std::vector<std::int32_t> by_g2 = sel.kept;
    std::sort(by_g2.begin(), by_g2.end(), [&deg2](std::int32_t a, std::int32_t b) {
        if (deg2[a] != deg2[b]) return deg2[a] > deg2[b];
        return a < b;
    });
    std::vector<std::int32_t> rank2(g1.num_vertices(), -1);
    for (std::int32_t r = 0; r < k; ++r) rank2[by_g2[r]] = r;

    double sum_d2 = 0.0;
    for (std::int32_t r1 = 0; r1 < k; ++r1) {
        const double d = static_cast<double>(r1 - rank2[sel.kept[r1]]);
        sum_d2 += d * d;
    }
    if (k == 1) return 1.0;
    const double kk = static_cast<double>(k);
    return 1.0 - 6.0 * sum_d2 / (kk * (kk * kk - 1.0));
}

double density(const Graph& g) {
    if (g.num_vertices() < 1) throw std::invalid_argument("density: empty graph");
    return static_cast<double>(g.num_edges()) / static_cast<double>(g.num_vertices());
}

}  // namespace fnf
