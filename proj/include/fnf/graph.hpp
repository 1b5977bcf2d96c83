#ifndef FNF_GRAPH_HPP
#define FNF_GRAPH_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fnf {

using Edge = std::pair<std::int32_t, std::int32_t>;  // (i, j) with i < j

/// Labeled, undirected, unweighted simple graph. Vertices are 0..n-1;
/// edges are kept sorted and deduplicated, so equality of edge vectors
/// is equality of edge sets.
class Graph {
public:
    Graph() = default;
    Graph(std::int32_t n, std::vector<Edge> edges);

    std::int32_t num_vertices() const { return n_; }
    std::int64_t num_edges() const { return static_cast<std::int64_t>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(std::int32_t u, std::int32_t v) const;
    std::vector<std::int64_t> degrees() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    std::int32_t n_ = 0;
    std::vector<Edge> edges_;
};

struct LoadResult {
    Graph graph;
    std::int64_t self_loops_dropped = 0;
};

/// Reads a whitespace-separated edge list. `#` and `%` start comments;
/// the optional header `% n=<N>` pins the vertex count. Duplicate lines
/// and (v,u)/(u,v) pairs collapse; self-loop lines are dropped and counted.
LoadResult load_edge_list(const std::string& path);
void save_edge_list(const Graph& g, const std::string& path);

/// Dense 0/1 adjacency matrix (symmetric, zero diagonal).
Eigen::MatrixXd adjacency(const Graph& g);
Graph graph_from_adjacency(const Eigen::MatrixXd& a);

/// Mean of all N^2 entries as stored, i.e. 2|E|/N^2 for the symmetric encoding.
double average_entry(const Eigen::MatrixXd& a);

/// The n0 highest-degree vertices, degree descending with ties broken by
/// ascending label. `kept[i]` is the original label of local vertex i.
struct SubgraphSelection {
    std::vector<std::int32_t> kept;
    std::vector<std::int32_t> local_index;  // original label -> local index, -1 if dropped
};

SubgraphSelection top_degree_selection(const Graph& g, std::int32_t n0);
Graph induced_subgraph(const Graph& g, const SubgraphSelection& sel);

/// Replaces every edge between two kept vertices of `full` according to
/// `modified_sub` (in local labels); edges touching a non-kept vertex stay.
Graph splice_subgraph(const Graph& full, const SubgraphSelection& sel,
                      const Graph& modified_sub);

/// 100 * |E1 symdiff E2| / |E1|. The first argument is the reference graph;
/// the result can exceed 100.
double edit_distance_percent(const Graph& g1, const Graph& g2);

/// Toggles round(flip_percent/100 * |E|) distinct vertex pairs, sampled
/// uniformly without replacement from all n(n-1)/2 pairs.
Graph edge_flip_attack(const Graph& g, double flip_percent, std::uint64_t seed);

/// Spearman rank correlation between the top-k degree ranking of g1 and the
/// degree ranking of the same k vertices in g2.
double topk_degree_spearman(const Graph& g1, const Graph& g2, std::int32_t k);

double density(const Graph& g);

}  // namespace fnf

#endif
