#include "ado/tz.hpp"

#include <algorithm>
#include <cmath>

namespace ado {

void Witness::append(const Witness &tail) {
    if (tail.path.empty()) return;
    for (size_t i = 0; i + 1 < tail.path.size(); i++) {
        path.push_back(tail.path[i + 1]);
        lens.push_back(tail.lens[i]);
        kinds.push_back(tail.kinds[i]);
    }
}

void Witness::reverse() {
    std::reverse(path.begin(), path.end());
    std::reverse(lens.begin(), lens.end());
    std::reverse(kinds.begin(), kinds.end());
}

IntersectHit intersect_min(const DistSet &U, const DistSet &W) {
    IntersectHit hit;
    const DistSet &small = U.size() <= W.size() ? U : W;
    const DistSet &large = U.size() <= W.size() ? W : U;
    bool swapped = U.size() > W.size();
    for (const auto &e : small.items) {
        hit.probes++;
        const DistEntry *o = large.find(e.v);
        if (!o) continue;
        Weight val = sat_add(e.d, o->d);
        if (val < hit.value) {  // items are id-ascending, so first win = smallest id
            hit.value = val;
            hit.x = e.v;
            hit.du = swapped ? o->d : e.d;
            hit.dw = swapped ? e.d : o->d;
        }
    }
    return hit;
}

const LevelSet *TzTables::find_level(int lvl) const {
    for (const auto &ls : levels)
        if (ls.level == lvl) return &ls;
    return nullptr;
}

std::vector<int> TzTables::probe_levels() const {
    std::vector<int> out;
    for (const auto &ls : levels) out.push_back(ls.level);
    return out;
}

TzTables build_tz_tables(const Graph &g, const Hierarchy &h,
                         const std::vector<int> &bunch_levels) {
    TzTables t;
    t.h = h;
    compute_pivots_radii(g, t.h);
    for (int lvl : bunch_levels) {
        LevelSet ls;
        ls.level = lvl;
        ls.clusters = compute_clusters(g, t.h, lvl);
        ls.bunches = compute_bunches(g, t.h, lvl, ls.clusters);
        t.levels.push_back(std::move(ls));
    }
    return t;
}

std::vector<int> cluster_path(const ClusterTable &ct, int w, int u) {
    std::vector<int> rev;
    const DistSet &c = ct.by_source[w];
    int cur = u;
    while (cur != -1) {
        rev.push_back(cur);
        const DistEntry *e = c.find(cur);
        if (!e) return {};  // not a member; caller falls back to a coarse hop
        cur = e->via;
    }
    std::reverse(rev.begin(), rev.end());
    return rev;  // w ... u
}

void append_bunch_hop(Witness &out, const LevelSet &ls, int x, int w, Weight d) {
    // path x -> w runs inside C(w); stored tree gives w -> x
    std::vector<int> p = cluster_path(ls.clusters, w, x);
    if (p.size() < 2) {
        if (x != w) out.hop(w, d, HopKind::Table);
        return;
    }
    const DistSet &c = ls.clusters.by_source[w];
    for (size_t i = p.size() - 1; i-- > 0;) {
        Weight step = c.find(p[i + 1])->d - c.find(p[i])->d;
        out.hop(p[i], step, HopKind::Edge);
    }
}

namespace {

EstimateReport tz_one_direction(const TzTables &t, int u, int v, bool witness) {
    EstimateReport rep;
    int x = u, y = v;
    for (const auto &ls : t.levels) {
        int L = ls.level;
        int p = t.h.pivot[L][x];
        Weight hx = t.h.radius[L][x];
        rep.probes++;
        if (p >= 0 && hx < INF) {
            const DistEntry *e = ls.bunches.by_vertex[y].find(p);
            if (e) {
                rep.value = sat_add(hx, e->d);
                if (witness) {
                    Witness wx;  // x -> p -> y
                    wx.start(x);
                    if (p != x) wx.hop(p, hx, HopKind::Table);
                    Witness tail;
                    tail.start(y);
                    if (p != y) {
                        append_bunch_hop(tail, ls, y, p, e->d);
                    }
                    tail.reverse();  // p ... y
                    wx.append(tail);
                    if (x != u) wx.reverse();  // orient u -> v
                    rep.witness = std::move(wx);
                }
                return rep;
            }
        }
        std::swap(x, y);
    }
    rep.value = INF;
    if (witness) rep.witness.start(u);
    return rep;
}

}  // namespace

EstimateReport tz_query(const TzTables &t, int u, int v, bool witness) {
    if (u == v) {
        EstimateReport rep;
        rep.value = 0;
        if (witness) rep.witness.start(u);
        return rep;
    }
    return tz_one_direction(t, u, v, witness);
}

EstimateReport mtz_query(const TzTables &t, int u, int v, bool witness) {
    if (u == v) {
        EstimateReport rep;
        rep.value = 0;
        if (witness) rep.witness.start(u);
        return rep;
    }
    EstimateReport a = tz_one_direction(t, u, v, witness);
    EstimateReport b = tz_one_direction(t, v, u, witness);
    b.probes += a.probes;
    if (b.value < a.value) {
        if (witness) b.witness.reverse();
        return b;
    }
    a.probes = b.probes;
    return a;
}

TzOracle build_tz(const Graph &g, int k, uint64_t seed) {
    if (k < 1) throw GraphError("tz: k must be >= 1");
    TzOracle o;
    o.g = g;
    o.k = k;
    o.seed = seed;
    Hierarchy h = sample_hierarchy(g, k, SampleMode::Geometric, seed);
    std::vector<int> lvls;
    for (int i = 0; i < k; i++) lvls.push_back(i);
    o.t = build_tz_tables(g, h, lvls);
    return o;
}

}  // namespace ado
