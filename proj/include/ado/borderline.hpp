#pragma once

#include "ado/tz.hpp"

namespace ado {

enum class BorderlineVariant : char { A = 'a', B = 'b', C = 'c' };

// Weighted oracle built on augmented level-c clusters. Variant A bridges
// pivot levels (c+1, k-c-2), variant B bridges (c, k-c-1) and adds an
// augmented-ball intersection, variant C bridges level k-1 against a full
// vertex-column table.
struct BorderlineOracle {
    BorderlineVariant variant = BorderlineVariant::A;
    int k = 5;
    int c = 1;
    uint64_t seed = 0;

    Graph g;                     // degree-reduced substrate
    std::vector<int> vmap;       // original vertex -> reduced id
    std::vector<int> inverse;    // reduced id -> original vertex (-1 for helper copies)
    int n_orig = 0;

    TzTables t;                       // hierarchy {0, c..k}, bunches c..k-1
    ClusterTable base_clusters;       // C(u, A_c) for every reduced u
    std::vector<DistSet> cstar;       // one-hop augmented clusters, root included
    std::vector<DistSet> bstar;       // variant B: augmented balls below h_c, root included

    int row_level = 0;                // pivot bridge rows (higher level)
    int col_level = 0;                // -1 for variant C (columns = V)
    std::vector<int> rows;
    std::vector<int> row_pos;         // reduced id -> row position or -1
    std::vector<int> col_pos;         // reduced id -> column position (identity for C)
    size_t col_count = 0;
    std::vector<Weight> dense;        // rows x cols, exact distances

    Weight dense_at(int row_vertex, int col_vertex) const;
    Weight stretch_numerator() const;   // bound = numerator * d
};

BorderlineOracle build_borderline(const Graph &g, int k, int c,
                                  BorderlineVariant variant, uint64_t seed);

EstimateReport query_borderline(const BorderlineOracle &o, int u, int v,
                                bool witness = false);

}  // namespace ado
