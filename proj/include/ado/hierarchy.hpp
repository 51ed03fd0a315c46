#pragma once

#include "ado/graph.hpp"

namespace ado {

// One stored (member, exact-or-relaxed distance) pair. `via` is the
// predecessor used to justify the entry: inside cluster/ball trees it is the
// previous vertex on the stored path; for one-hop augmented entries it is the
// base member the extra edge hangs off; -1 at roots.
struct DistEntry {
    int v = -1;
    Weight d = INF;
    int via = -1;
};

// Sorted-by-id member set with O(log) probes.
struct DistSet {
    std::vector<DistEntry> items;

    const DistEntry *find(int v) const;
    bool contains(int v) const { return find(v) != nullptr; }
    Weight dist(int v) const {
        const DistEntry *e = find(v);
        return e ? e->d : INF;
    }
    size_t size() const { return items.size(); }
    void sort_items();
};

// Nested sampled vertex sets A_0 (=V) ... A_k (=empty) with per-vertex pivots
// and radii. Levels between 0 and `first_level` may be inactive (the
// borderline oracles use {0, c, c+1, ..., k}).
struct Hierarchy {
    int k = 0;
    int n = 0;
    std::vector<char> active;               // [0..k]
    std::vector<std::vector<int>> levels;   // sorted member lists
    std::vector<std::vector<char>> member;  // membership flags per level
    std::vector<std::vector<int>> pivot;    // -1 when unreachable
    std::vector<std::vector<Weight>> radius;

    bool in_level(int i, int v) const { return member[i][v] != 0; }
    int next_active(int i) const;
    int prev_active(int i) const;
};

enum class SampleMode { Geometric, CenterCapped };

struct HierarchySpec {
    int k = 2;
    int first_level = 1;      // lowest sampled level; levels strictly between 0 and it stay inactive
    double p_first = 0.5;     // probability for A_first from V
    double p_step = 0.5;      // probability for each higher level from the one below
    bool center_capped_first = false;
    double cap_constant = 4.0;
    int resample_attempts = 32;
};

Hierarchy sample_hierarchy(const Graph &g, const HierarchySpec &spec, uint64_t seed);

// Spec'd two-mode entry point: geometric samples every level with n^{-1/k};
// center-capped builds A_1 by rejection resampling on the max cluster size.
Hierarchy sample_hierarchy(const Graph &g, int k, SampleMode mode, uint64_t seed);

void compute_pivots_radii(const Graph &g, Hierarchy &h);

// C(w) = { v : d(w,v) < limit[v] } via truncated Dijkstra from w;
// entries carry exact distances and tree predecessors.
DistSet cluster_of(const Graph &g, int w, const std::vector<Weight> &limit,
                   std::optional<std::pair<int, int>> forbidden_edge = std::nullopt);

// B(u) = { v : d(u,v) < radius } (strict), truncated Dijkstra from u.
DistSet ball_below(const Graph &g, int u, Weight radius,
                   std::optional<std::pair<int, int>> forbidden_edge = std::nullopt);

// One-hop closure: base plus N(base); added members get
// min(d(base member) + edge) and via = that member.
DistSet augment_one_hop(const Graph &g, const DistSet &base);

struct ClusterTable {
    int level = 0;
    std::vector<DistSet> by_source;  // empty DistSet when not a source
    std::vector<int> sources;        // sorted
};

struct BunchTable {
    int level = 0;
    std::vector<DistSet> by_vertex;  // B_i(u); `via` unused (paths live in the cluster trees)
};

// Clusters C(w) = C(w, A_next) for w in A_i \ A_next (TZ inversion sources).
ClusterTable compute_clusters(const Graph &g, const Hierarchy &h, int level);
// Bunches B_i(u) by inverting the level's clusters (duality).
BunchTable compute_bunches(const Graph &g, const Hierarchy &h, int level,
                           const ClusterTable &clusters);

}  // namespace ado
