#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ado/exact.hpp"
#include "ado/tz.hpp"

#include <cmath>

using namespace ado;

namespace {

Graph cycle_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; i++) es.push_back({i, (i + 1) % n, 1});
    return Graph(n, es, false);
}

Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; i++) es.push_back({i, i + 1, 1});
    return Graph(n, es, false);
}

Hierarchy forced_two_level(const Graph &g, std::vector<int> a1) {
    Hierarchy h;
    h.k = 2;
    h.n = g.num_vertices();
    h.active.assign(3, 1);
    h.levels.assign(3, {});
    h.member.assign(3, {});
    h.pivot.assign(3, {});
    h.radius.assign(3, {});
    std::vector<int> all(h.n);
    for (int i = 0; i < h.n; i++) all[i] = i;
    auto fill = [&](int lvl, std::vector<int> mem) {
        std::sort(mem.begin(), mem.end());
        h.member[lvl].assign(h.n, 0);
        for (int v : mem) h.member[lvl][v] = 1;
        h.levels[lvl] = std::move(mem);
    };
    fill(0, all);
    fill(1, a1);
    fill(2, {});
    return h;
}

void check_witness(const Graph &g, const ApspTable &t, const EstimateReport &rep,
                   int u, int v) {
    if (rep.value == INF) return;
    REQUIRE(!rep.witness.path.empty());
    CHECK(rep.witness.path.front() == u);
    CHECK(rep.witness.path.back() == v);
    Weight sum = 0;
    for (size_t i = 0; i + 1 < rep.witness.path.size(); i++) {
        int a = rep.witness.path[i], b = rep.witness.path[i + 1];
        Weight len = rep.witness.lens[i];
        if (rep.witness.kinds[i] == HopKind::Edge) {
            CHECK(g.edge_weight(a, b) == len);
        } else {
            CHECK(t.at(a, b) == len);
        }
        sum = sat_add(sum, len);
    }
    CHECK(sum == rep.value);
    CHECK(rep.value >= t.at(u, v));
}

}  // namespace

TEST_CASE("intersection: disjoint sets give infinity") {
    DistSet U, W;
    U.items = {{0, 0, -1}, {1, 3, -1}};
    W.items = {{2, 0, -1}, {3, 5, -1}};
    auto hit = intersect_min(U, W);
    CHECK(hit.value == INF);
    CHECK(hit.probes <= std::min(U.size(), W.size()));
}

TEST_CASE("intersection: identity singleton") {
    DistSet U;
    U.items = {{4, 0, -1}};
    auto hit = intersect_min(U, U);
    CHECK(hit.value == 0);
    CHECK(hit.x == 4);
}

TEST_CASE("intersection on P5 path sets returns the true distance") {
    // U = {0,1,2} with d(0,.), W = {2,3,4} with d(4,.)
    DistSet U, W;
    U.items = {{0, 0, -1}, {1, 1, -1}, {2, 2, -1}};
    W.items = {{2, 2, -1}, {3, 1, -1}, {4, 0, -1}};
    auto hit = intersect_min(U, W);
    CHECK(hit.value == 4);
    CHECK(hit.x == 2);
}

TEST_CASE("intersection probe count is bounded by the smaller set") {
    DistSet U, W;
    for (int i = 0; i < 50; i++) U.items.push_back({i, Weight(i), -1});
    for (int i = 40; i < 45; i++) W.items.push_back({i, Weight(i), -1});
    auto hit = intersect_min(U, W);
    CHECK(hit.probes == 5);
    CHECK(hit.value == 80);
}

TEST_CASE("tz query of a vertex with itself is zero") {
    Graph g = random_graph(50, 120, 5, 9);
    TzOracle o = build_tz(g, 3, 7);
    for (int u = 0; u < 50; u += 7) {
        CHECK(tz_query(o.t, u, u).value == 0);
        CHECK(mtz_query(o.t, u, u).value == 0);
    }
}

TEST_CASE("forced C5 instance: mtz within 3x at k=2") {
    Graph g = cycle_graph(5);
    Hierarchy h = forced_two_level(g, {2});
    TzTables t = build_tz_tables(g, h, {0, 1});
    auto rep = mtz_query(t, 0, 1);
    CHECK(rep.value >= 1);
    CHECK(rep.value <= 3);
    // hand-traceable: h_1(0)=2 via pivot 2; B_0(1) = { v : d(1,v) < h_1(1)=1 } = {1}
    // round 1 (0->1): p_0(0)=0 not in B_0(1) -> swap; (1->0): p_0(1)=1 in B_0(0)?
    // B_0(0) = { v : d(0,v) < 2 } = {0,1,4}; yes -> value = 0 + d(0,1) = 1.
    CHECK(rep.value == 1);
}

TEST_CASE("mtz stretch (2k-1) over 50 random graphs at k=3") {
    double worst = 0;
    for (uint64_t seed = 1; seed <= 50; seed++) {
        int n = 50 + int(seed * 5);
        Graph g = random_graph(n, 3 * n, seed % 3 ? 1 : 10, seed);
        TzOracle o = build_tz(g, 3, seed * 1000 + 17);
        auto t = apsp(g);
        for (int u = 0; u < n; u++) {
            for (int v = u + 1; v < n; v++) {
                Weight d = t.at(u, v);
                if (d == INF) {
                    continue;
                }
                Weight est = mtz_query(o.t, u, v).value;
                REQUIRE(est >= d);
                REQUIRE(est <= 5 * d);
                if (d > 0) worst = std::max(worst, double(est) / double(d));
            }
        }
    }
    CHECK(worst <= 5.0);
}

TEST_CASE("tz witnesses re-sum and are justified hop by hop") {
    for (uint64_t seed : {2, 5}) {
        Graph g = random_graph(80, 240, seed == 2 ? 1 : 8, seed);
        TzOracle o = build_tz(g, 3, seed + 100);
        auto t = apsp(g);
        for (int u = 0; u < 80; u += 3) {
            for (int v = 0; v < 80; v += 5) {
                auto rep = mtz_query(o.t, u, v, true);
                if (u == v) {
                    CHECK(rep.value == 0);
                    continue;
                }
                check_witness(g, t, rep, u, v);
            }
        }
    }
}

TEST_CASE("level-descent dichotomy holds on every query trace") {
    for (uint64_t seed : {3, 11, 21}) {
        int n = 120;
        Graph g = random_graph(n, 360, seed % 2 ? 6 : 1, seed);
        TzOracle o = build_tz(g, 3, seed * 13);
        auto t = apsp(g);
        const Hierarchy &h = o.t.h;
        for (int u = 0; u < n; u += 2) {
            for (int v = u + 1; v < n; v += 3) {
                Weight d = t.at(u, v);
                if (d == INF) continue;
                Weight est = mtz_query(o.t, u, v).value;
                for (int i = 1; i <= 3; i++) {
                    Weight lo = std::min(h.radius[i - 1][u], h.radius[i - 1][v]);
                    Weight hi = std::min(h.radius[i][u], h.radius[i][v]);
                    bool first = hi <= sat_add(lo, d);
                    bool second = est <= sat_add(sat_add(lo, lo), d);
                    CHECK((first || second));
                }
            }
        }
    }
}

TEST_CASE("tz handles disconnected pairs") {
    // two disjoint triangles
    std::vector<Edge> es{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}};
    Graph g(6, es, false);
    TzOracle o = build_tz(g, 2, 4);
    CHECK(mtz_query(o.t, 0, 3).value == INF);
    CHECK(mtz_query(o.t, 0, 2).value >= 1);
}

TEST_CASE("tz on a path preserves exactness for close pairs") {
    Graph g = path_graph(30);
    TzOracle o = build_tz(g, 2, 19);
    auto t = apsp(g);
    for (int u = 0; u < 30; u++)
        for (int v = u + 1; v < 30; v++) {
            auto rep = mtz_query(o.t, u, v);
            CHECK(rep.value >= t.at(u, v));
            CHECK(rep.value <= 3 * t.at(u, v));
        }
}
