#pragma once

#include "ado/graph.hpp"

namespace ado {

enum class HopKind : char {
    Edge = 'e',   // single graph edge, len = its weight
    Table = 't',  // justified by a stored entry whose value is an exact distance
};

// Certifying walk: hop i connects path[i] -> path[i+1] with length lens[i].
// The reported value always equals the sum of the hop lengths.
struct Witness {
    std::vector<int> path;
    std::vector<Weight> lens;
    std::vector<HopKind> kinds;

    void start(int u) {
        path.assign(1, u);
        lens.clear();
        kinds.clear();
    }
    void hop(int to, Weight len, HopKind k) {
        path.push_back(to);
        lens.push_back(len);
        kinds.push_back(k);
    }
    void append(const Witness &tail);   // tail.path.front() must equal path.back()
    void reverse();
    Weight total() const {
        Weight s = 0;
        for (Weight l : lens) s = sat_add(s, l);
        return s;
    }
};

struct EstimateReport {
    Weight value = INF;
    Witness witness;
    size_t probes = 0;  // membership probes spent by Intersection-style scans
};

// min over x in U∩W of U.d(x) + W.d(x); iterates the smaller set and probes
// the larger. Ties break toward the smaller member id.
struct IntersectHit {
    Weight value = INF;
    int x = -1;
    Weight du = INF, dw = INF;
    size_t probes = 0;
};

struct DistSet;  // from hierarchy.hpp
IntersectHit intersect_min(const DistSet &U, const DistSet &W);

}  // namespace ado
