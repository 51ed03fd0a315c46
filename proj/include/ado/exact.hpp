#pragma once

#include "ado/graph.hpp"

namespace ado {

// Dense exact all-pairs distances, the ground truth for every bound check.
class ApspTable {
public:
    ApspTable() = default;
    explicit ApspTable(int n) : n_(n), d_(size_t(n) * n, INF) {}

    int size() const { return n_; }
    Weight at(int u, int v) const { return d_[size_t(u) * n_ + v]; }
    Weight &at(int u, int v) { return d_[size_t(u) * n_ + v]; }

private:
    int n_ = 0;
    std::vector<Weight> d_;
};

// n sssp runs; parallel across sources when threads > 1.
ApspTable apsp(const Graph &g, int threads = 1);

struct CycleTable {
    std::vector<Weight> sc;  // INF when no cycle through the vertex
};

// min over edges (u,v) of w(u,v) + d_{G-(u,v)}(v,u); INF on forests.
Weight exact_shortest_cycle(const Graph &g, int u);
CycleTable exact_all_cycles(const Graph &g, int threads = 1);

}  // namespace ado
