#pragma once

#include "ado/estimate.hpp"
#include "ado/hierarchy.hpp"

namespace ado {

// Bunch/cluster tables for one hierarchy level.
struct LevelSet {
    int level = 0;
    ClusterTable clusters;
    BunchTable bunches;
};

// Hierarchy plus the per-level tables the classic query walks over.
struct TzTables {
    Hierarchy h;
    std::vector<LevelSet> levels;  // ascending by level id

    const LevelSet *find_level(int lvl) const;
    std::vector<int> probe_levels() const;  // all built levels, ascending
};

TzTables build_tz_tables(const Graph &g, const Hierarchy &h,
                         const std::vector<int> &bunch_levels);

// Classic query over the given probe levels: at each round return
// h_L(x) + d(p_L(x), y) as soon as p_L(x) lands in B_L(y), swapping the
// roles of x and y between rounds.
EstimateReport tz_query(const TzTables &t, int u, int v, bool witness = false);
EstimateReport mtz_query(const TzTables &t, int u, int v, bool witness = false);

struct TzOracle {
    Graph g;
    TzTables t;
    int k = 2;
    uint64_t seed = 0;
};

TzOracle build_tz(const Graph &g, int k, uint64_t seed);

// Expansion helpers shared by the oracle witnesses.

// Edge-level path w -> u inside cluster C(w) (walks the stored tree).
std::vector<int> cluster_path(const ClusterTable &ct, int w, int u);

// Witness segment for a bunch hop x -> w justified by B_level(x).
void append_bunch_hop(Witness &out, const LevelSet &ls, int x, int w, Weight d);

}  // namespace ado
