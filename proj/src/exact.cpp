#include "ado/exact.hpp"

#include <thread>

namespace ado {

ApspTable apsp(const Graph &g, int threads) {
    const int n = g.num_vertices();
    ApspTable t(n);
    auto run = [&](int lo, int hi) {
        for (int s = lo; s < hi; s++) {
            DistanceRow row = sssp(g, s);
            for (int v = 0; v < n; v++) t.at(s, v) = row.dist[v];
        }
    };
    if (threads <= 1 || n < 64) {
        run(0, n);
    } else {
        int tc = std::min<int>(threads, std::max(1u, std::thread::hardware_concurrency()));
        std::vector<std::thread> pool;
        int chunk = (n + tc - 1) / tc;
        for (int i = 0; i < tc; i++)
            pool.emplace_back(run, std::min(n, i * chunk), std::min(n, (i + 1) * chunk));
        for (auto &th : pool) th.join();
    }
    return t;
}

Weight exact_shortest_cycle(const Graph &g, int u) {
    Weight best = INF;
    for (auto [v, w] : g.neighbors(u)) {
        DistanceRow row = sssp(g, v, std::make_pair(u, v));
        best = std::min(best, sat_add(w, row.dist[u]));
    }
    return best;
}

CycleTable exact_all_cycles(const Graph &g, int threads) {
    const int n = g.num_vertices();
    CycleTable t;
    t.sc.assign(n, INF);
    auto run = [&](int lo, int hi) {
        for (int u = lo; u < hi; u++) t.sc[u] = exact_shortest_cycle(g, u);
    };
    if (threads <= 1 || n < 32) {
        run(0, n);
    } else {
        int tc = std::min<int>(threads, std::max(1u, std::thread::hardware_concurrency()));
        std::vector<std::thread> pool;
        int chunk = (n + tc - 1) / tc;
        for (int i = 0; i < tc; i++)
            pool.emplace_back(run, std::min(n, i * chunk), std::min(n, (i + 1) * chunk));
        for (auto &th : pool) th.join();
    }
    return t;
}

}  // namespace ado
