#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ado {

using Weight = uint64_t;

// Sentinel strictly greater than any sum of two finite path lengths.
inline constexpr Weight INF = std::numeric_limits<Weight>::max() / 4;

inline Weight sat_add(Weight a, Weight b) {
    if (a >= INF || b >= INF) return INF;
    Weight s = a + b;
    return s >= INF ? INF : s;
}

inline bool finite(Weight w) { return w < INF; }

struct Edge {
    int u = 0;
    int v = 0;
    Weight w = 1;
};

struct GraphError : std::runtime_error {
    explicit GraphError(const std::string &msg) : std::runtime_error(msg) {}
};

// Immutable undirected graph. Vertex ids are 0..n-1, no self-loops,
// no parallel edges, weights >= 0 (all 1 in unweighted mode).
class Graph {
public:
    Graph() = default;
    // edges may contain duplicates (minimum weight kept) and (u,v)/(v,u) pairs;
    // self-loops are dropped.
    Graph(int n, std::vector<Edge> edges, bool weighted);

    int num_vertices() const { return n_; }
    size_t num_edges() const { return edges_.size(); }
    bool weighted() const { return weighted_; }
    double avg_degree() const { return n_ ? double(edges_.size()) / n_ : 0.0; }

    // canonical edge list: u < v, sorted lexicographically
    const std::vector<Edge> &edges() const { return edges_; }

    std::span<const std::pair<int, Weight>> neighbors(int u) const {
        return {adj_.data() + adj_start_[u], adj_.data() + adj_start_[u + 1]};
    }
    int degree(int u) const { return int(adj_start_[u + 1] - adj_start_[u]); }
    int max_degree() const;

    bool has_edge(int u, int v) const;
    Weight edge_weight(int u, int v) const;  // INF when absent

private:
    int n_ = 0;
    bool weighted_ = false;
    std::vector<Edge> edges_;
    std::vector<size_t> adj_start_;
    std::vector<std::pair<int, Weight>> adj_;
};

struct DistanceRow {
    int source = 0;
    std::vector<Weight> dist;
    std::vector<int> parent;  // -1 = none
};

// Exact single-source shortest paths. BFS when unweighted, binary-heap
// Dijkstra otherwise. forbidden_edge, if set, is not traversed in either
// direction.
DistanceRow sssp(const Graph &g, int source,
                 std::optional<std::pair<int, int>> forbidden_edge = std::nullopt);

enum class GraphFormat { EdgeList, Dimacs };

Graph load_graph(const std::string &path, GraphFormat format = GraphFormat::EdgeList);
Graph parse_edge_list(std::istream &in);
void save_graph(const Graph &g, const std::string &path);

// Simple graph with exactly m edges, integer weights uniform in [1, weight_max]
// (weight_max = 1 => unweighted). Deterministic per seed.
Graph random_graph(int n, long long m, Weight weight_max, uint64_t seed);

struct DegreeReduction {
    Graph graph;
    std::vector<int> vertex_map;            // original id -> canonical copy
    std::vector<std::pair<int, int>> edge_endpoints;  // original edge index -> reduced endpoints
    bool changed = false;
};

// Distance-preserving max-degree reduction: over-degree vertices split into a
// zero-weight chain of copies, incident edges distributed. Max degree of the
// result is <= ceil(mu) + 2 for mu = m/n of the input.
DegreeReduction degree_reduce(const Graph &g);

// FNV-1a over the canonical edge list (cheap mismatch guard).
uint64_t graph_digest(const Graph &g);

}  // namespace ado
