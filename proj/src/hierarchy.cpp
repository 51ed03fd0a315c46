#include "ado/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <unordered_map>

namespace ado {

const DistEntry *DistSet::find(int v) const {
    auto it = std::lower_bound(items.begin(), items.end(), v,
                               [](const DistEntry &e, int x) { return e.v < x; });
    if (it != items.end() && it->v == v) return &*it;
    return nullptr;
}

void DistSet::sort_items() {
    std::sort(items.begin(), items.end(),
              [](const DistEntry &a, const DistEntry &b) { return a.v < b.v; });
}

int Hierarchy::next_active(int i) const {
    for (int j = i + 1; j <= k; j++)
        if (active[j]) return j;
    return k;
}

int Hierarchy::prev_active(int i) const {
    for (int j = i - 1; j >= 0; j--)
        if (active[j]) return j;
    return 0;
}

namespace {

std::vector<int> bernoulli_subset(const std::vector<int> &from, double p,
                                  std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<int> out;
    for (int v : from)
        if (unif(rng) < p) out.push_back(v);
    return out;
}

std::vector<int> sample_nonempty(const std::vector<int> &from, double p,
                                 std::mt19937_64 &rng, int attempts) {
    for (int a = 0; a < attempts; a++) {
        auto s = bernoulli_subset(from, p, rng);
        if (!s.empty()) return s;
    }
    return {from.front()};  // promote the smallest id
}

void set_level(Hierarchy &h, int i, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    h.active[i] = 1;
    h.member[i].assign(h.n, 0);
    for (int v : members) h.member[i][v] = 1;
    h.levels[i] = std::move(members);
}

// h_A(v) = d(v, A) for a plain vertex set
std::vector<Weight> radii_to_set(const Graph &g, const std::vector<int> &set);

}  // namespace

Hierarchy sample_hierarchy(const Graph &g, const HierarchySpec &spec, uint64_t seed) {
    if (spec.k < 1) throw GraphError("hierarchy: k must be >= 1");
    if (spec.first_level < 1 || spec.first_level >= spec.k + 1)
        throw GraphError("hierarchy: bad first_level");
    const int n = g.num_vertices();
    Hierarchy h;
    h.k = spec.k;
    h.n = n;
    h.active.assign(spec.k + 1, 0);
    h.levels.assign(spec.k + 1, {});
    h.member.assign(spec.k + 1, {});
    h.pivot.assign(spec.k + 1, {});
    h.radius.assign(spec.k + 1, {});

    std::vector<int> all(n);
    for (int i = 0; i < n; i++) all[i] = i;
    set_level(h, 0, all);

    std::mt19937_64 rng(seed);
    const int c = spec.first_level;
    if (c < spec.k) {
        if (n == 0) {
            set_level(h, c, {});
        } else if (spec.center_capped_first) {
            double cap = spec.cap_constant * (1.0 / spec.p_first) *
                         std::log(std::max(2, n));
            std::vector<int> best;
            size_t best_max = SIZE_MAX;
            for (int a = 0; a < spec.resample_attempts; a++) {
                auto s = bernoulli_subset(all, spec.p_first, rng);
                if (s.empty()) continue;
                auto limit = radii_to_set(g, s);
                size_t worst = 0;
                for (int w = 0; w < n && worst <= size_t(cap); w++) {
                    if (limit[w] == 0) continue;  // w in A
                    worst = std::max(worst, cluster_of(g, w, limit).size());
                }
                if (worst <= size_t(cap)) {
                    best = std::move(s);
                    break;
                }
                if (worst < best_max) {
                    best_max = worst;
                    best = std::move(s);
                }
            }
            if (best.empty()) best = {all.front()};
            set_level(h, c, std::move(best));
        } else {
            set_level(h, c, sample_nonempty(all, spec.p_first, rng, spec.resample_attempts));
        }
        for (int i = c + 1; i < spec.k; i++)
            set_level(h, i, sample_nonempty(h.levels[i - 1], spec.p_step, rng,
                                            spec.resample_attempts));
    }
    set_level(h, spec.k, {});
    return h;
}

Hierarchy sample_hierarchy(const Graph &g, int k, SampleMode mode, uint64_t seed) {
    if (k < 1) throw GraphError("hierarchy: k must be >= 1");
    double p = g.num_vertices() > 1 ? std::pow(double(g.num_vertices()), -1.0 / k) : 0.5;
    HierarchySpec spec;
    spec.k = k;
    spec.first_level = 1;
    spec.p_first = p;
    spec.p_step = p;
    spec.center_capped_first = (mode == SampleMode::CenterCapped);
    return sample_hierarchy(g, spec, seed);
}

namespace {

std::vector<Weight> radii_to_set(const Graph &g, const std::vector<int> &set) {
    const int n = g.num_vertices();
    std::vector<Weight> dist(n, INF);
    using Item = std::tuple<Weight, int, int>;  // (d, pivot, v) -- pivot unused here
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    for (int a : set) {
        dist[a] = 0;
        pq.push({0, a, a});
    }
    while (!pq.empty()) {
        auto [d, p, u] = pq.top();
        pq.pop();
        if (d > dist[u]) continue;
        for (auto [v, w] : g.neighbors(u)) {
            Weight nd = sat_add(d, w);
            if (nd < dist[v]) {
                dist[v] = nd;
                pq.push({nd, p, v});
            }
        }
    }
    return dist;
}

}  // namespace

void compute_pivots_radii(const Graph &g, Hierarchy &h) {
    const int n = h.n;
    for (int i = 0; i <= h.k; i++) {
        if (!h.active[i]) continue;
        h.pivot[i].assign(n, -1);
        h.radius[i].assign(n, INF);
        if (i == 0) {
            for (int v = 0; v < n; v++) {
                h.pivot[0][v] = v;
                h.radius[0][v] = 0;
            }
            continue;
        }
        if (h.levels[i].empty()) continue;
        // multi-source with (distance, pivot-id) keys; ties favor the smaller pivot
        std::vector<Weight> dist(n, INF);
        std::vector<int> piv(n, -1);
        using Item = std::tuple<Weight, int, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
        for (int a : h.levels[i]) {
            dist[a] = 0;
            piv[a] = a;
            pq.push({0, a, a});
        }
        while (!pq.empty()) {
            auto [d, p, u] = pq.top();
            pq.pop();
            if (d != dist[u] || p != piv[u]) continue;
            for (auto [v, w] : g.neighbors(u)) {
                Weight nd = sat_add(d, w);
                if (nd < dist[v] || (nd == dist[v] && p < piv[v])) {
                    if (h.in_level(i, v) && nd == 0) continue;  // members stay their own pivot
                    dist[v] = nd;
                    piv[v] = p;
                    pq.push({nd, p, v});
                }
            }
        }
        h.pivot[i] = std::move(piv);
        h.radius[i] = std::move(dist);
    }
}

DistSet cluster_of(const Graph &g, int w, const std::vector<Weight> &limit,
                   std::optional<std::pair<int, int>> forbidden_edge) {
    DistSet out;
    if (limit[w] == 0) return out;  // strict inequality excludes everything
    int fa = -1, fb = -1;
    if (forbidden_edge) {
        fa = std::min(forbidden_edge->first, forbidden_edge->second);
        fb = std::max(forbidden_edge->first, forbidden_edge->second);
    }
    std::unordered_map<int, std::pair<Weight, int>> state;  // v -> (d, via)
    std::unordered_map<int, char> settled;
    using Item = std::tuple<Weight, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    state[w] = {0, -1};
    pq.push({0, w});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (settled.count(u)) continue;
        auto it = state.find(u);
        if (it == state.end() || d > it->second.first) continue;
        settled[u] = 1;
        out.items.push_back({u, d, it->second.second});
        for (auto [v, wt] : g.neighbors(u)) {
            if (forbidden_edge) {
                int a = std::min(u, v), b = std::max(u, v);
                if (a == fa && b == fb) continue;
            }
            Weight nd = sat_add(d, wt);
            if (nd >= limit[v]) continue;
            auto jt = state.find(v);
            if (jt == state.end() || nd < jt->second.first) {
                state[v] = {nd, u};
                pq.push({nd, v});
            }
        }
    }
    out.sort_items();
    return out;
}

DistSet ball_below(const Graph &g, int u, Weight radius,
                   std::optional<std::pair<int, int>> forbidden_edge) {
    DistSet out;
    if (radius == 0) return out;
    int fa = -1, fb = -1;
    if (forbidden_edge) {
        fa = std::min(forbidden_edge->first, forbidden_edge->second);
        fb = std::max(forbidden_edge->first, forbidden_edge->second);
    }
    std::unordered_map<int, std::pair<Weight, int>> state;
    std::unordered_map<int, char> settled;
    using Item = std::tuple<Weight, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    state[u] = {0, -1};
    pq.push({0, u});
    while (!pq.empty()) {
        auto [d, x] = pq.top();
        pq.pop();
        if (settled.count(x)) continue;
        auto it = state.find(x);
        if (it == state.end() || d > it->second.first) continue;
        settled[x] = 1;
        out.items.push_back({x, d, it->second.second});
        for (auto [v, wt] : g.neighbors(x)) {
            if (forbidden_edge) {
                int a = std::min(x, v), b = std::max(x, v);
                if (a == fa && b == fb) continue;
            }
            Weight nd = sat_add(d, wt);
            if (nd >= radius) continue;
            auto jt = state.find(v);
            if (jt == state.end() || nd < jt->second.first) {
                state[v] = {nd, x};
                pq.push({nd, v});
            }
        }
    }
    out.sort_items();
    return out;
}

DistSet augment_one_hop(const Graph &g, const DistSet &base) {
    DistSet out = base;
    std::unordered_map<int, std::pair<Weight, int>> extra;  // v -> (d', via)
    for (const auto &e : base.items) {
        for (auto [v, wt] : g.neighbors(e.v)) {
            if (base.contains(v)) continue;
            Weight nd = sat_add(e.d, wt);
            auto it = extra.find(v);
            if (it == extra.end() || nd < it->second.first ||
                (nd == it->second.first && e.v < it->second.second)) {
                extra[v] = {nd, e.v};
            }
        }
    }
    for (const auto &[v, dv] : extra) out.items.push_back({v, dv.first, dv.second});
    out.sort_items();
    return out;
}

ClusterTable compute_clusters(const Graph &g, const Hierarchy &h, int level) {
    if (!h.active[level]) throw GraphError("compute_clusters: inactive level");
    int nxt = h.next_active(level);
    const auto &limit = h.radius[nxt];
    ClusterTable t;
    t.level = level;
    t.by_source.assign(h.n, {});
    for (int w : h.levels[level]) {
        if (h.in_level(nxt, w)) continue;
        t.by_source[w] = cluster_of(g, w, limit);
        t.sources.push_back(w);
    }
    return t;
}

BunchTable compute_bunches(const Graph &g, const Hierarchy &h, int level,
                           const ClusterTable &clusters) {
    (void)g;
    BunchTable b;
    b.level = level;
    b.by_vertex.assign(h.n, {});
    for (int w : clusters.sources) {
        for (const auto &e : clusters.by_source[w].items)
            b.by_vertex[e.v].items.push_back({w, e.d, -1});
    }
    for (auto &s : b.by_vertex) s.sort_items();
    return b;
}

}  // namespace ado
