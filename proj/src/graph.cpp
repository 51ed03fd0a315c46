#include "ado/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <queue>
#include <random>
#include <sstream>
#include <unordered_set>

namespace ado {

Graph::Graph(int n, std::vector<Edge> edges, bool weighted)
    : n_(n), weighted_(weighted) {
    if (n < 0) throw GraphError("negative vertex count");
    for (auto &e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw GraphError("edge endpoint out of range: " + std::to_string(e.u) +
                             " " + std::to_string(e.v));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::erase_if(edges, [](const Edge &e) { return e.u == e.v; });
    std::sort(edges.begin(), edges.end(), [](const Edge &a, const Edge &b) {
        return std::tie(a.u, a.v, a.w) < std::tie(b.u, b.v, b.w);
    });
    // duplicates keep minimum weight
    for (const auto &e : edges) {
        if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v)
            continue;
        edges_.push_back(e);
    }
    if (!weighted_) {
        for (auto &e : edges_) e.w = 1;
    }
    std::vector<int> deg(n_, 0);
    for (const auto &e : edges_) {
        deg[e.u]++;
        deg[e.v]++;
    }
    adj_start_.assign(n_ + 1, 0);
    for (int u = 0; u < n_; u++) adj_start_[u + 1] = adj_start_[u] + deg[u];
    adj_.resize(edges_.size() * 2);
    std::vector<size_t> fill(adj_start_.begin(), adj_start_.end() - 1);
    for (const auto &e : edges_) {
        adj_[fill[e.u]++] = {e.v, e.w};
        adj_[fill[e.v]++] = {e.u, e.w};
    }
    for (int u = 0; u < n_; u++) {
        std::sort(adj_.begin() + adj_start_[u], adj_.begin() + adj_start_[u + 1]);
    }
}

int Graph::max_degree() const {
    int d = 0;
    for (int u = 0; u < n_; u++) d = std::max(d, degree(u));
    return d;
}

bool Graph::has_edge(int u, int v) const { return edge_weight(u, v) < INF; }

Weight Graph::edge_weight(int u, int v) const {
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v,
                               [](const std::pair<int, Weight> &a, int b) { return a.first < b; });
    if (it != nb.end() && it->first == v) return it->second;
    return INF;
}

DistanceRow sssp(const Graph &g, int source,
                 std::optional<std::pair<int, int>> forbidden_edge) {
    const int n = g.num_vertices();
    DistanceRow row;
    row.source = source;
    row.dist.assign(n, INF);
    row.parent.assign(n, -1);
    if (source < 0 || source >= n) throw GraphError("sssp: source out of range");
    row.dist[source] = 0;

    int fa = -1, fb = -1;
    if (forbidden_edge) {
        fa = forbidden_edge->first;
        fb = forbidden_edge->second;
        if (fa > fb) std::swap(fa, fb);
        if (!g.has_edge(fa, fb)) throw GraphError("sssp: forbidden edge not in graph");
    }
    auto blocked = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return a == fa && b == fb;
    };

    bool unit = !g.weighted();
    if (unit) {
        std::queue<int> q;
        q.push(source);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (auto [v, w] : g.neighbors(u)) {
                if (forbidden_edge && blocked(u, v)) continue;
                if (row.dist[v] == INF) {
                    row.dist[v] = row.dist[u] + 1;
                    row.parent[v] = u;
                    q.push(v);
                }
            }
        }
    } else {
        using Item = std::pair<Weight, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
        pq.push({0, source});
        std::vector<char> done(n, 0);
        while (!pq.empty()) {
            auto [d, u] = pq.top();
            pq.pop();
            if (done[u]) continue;
            done[u] = 1;
            for (auto [v, w] : g.neighbors(u)) {
                if (forbidden_edge && blocked(u, v)) continue;
                Weight nd = sat_add(d, w);
                if (nd < row.dist[v]) {
                    row.dist[v] = nd;
                    row.parent[v] = u;
                    pq.push({nd, v});
                }
            }
        }
    }
    return row;
}

namespace {

// exact non-negative decimal as integer scaled by 10^frac_digits(tok)
Weight parse_weight(const std::string &tok, int line_no) {
    if (tok.empty()) throw GraphError("empty weight at line " + std::to_string(line_no));
    if (tok[0] == '-')
        throw GraphError("negative weight at line " + std::to_string(line_no));
    size_t dot = tok.find('.');
    std::string digits = dot == std::string::npos ? tok : tok.substr(0, dot) + tok.substr(dot + 1);
    int frac = dot == std::string::npos ? 0 : int(tok.size() - dot - 1);
    if (digits.empty() || frac > 6)
        throw GraphError("bad weight '" + tok + "' at line " + std::to_string(line_no));
    Weight v = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw GraphError("bad weight '" + tok + "' at line " + std::to_string(line_no));
        v = v * 10 + Weight(c - '0');
        if (v >= INF / 1000000) throw GraphError("weight overflow at line " + std::to_string(line_no));
    }
    return v;
}

struct RawEdge {
    int u, v;
    std::string wtok;
    int line;
};

int frac_digits(const std::string &tok) {
    size_t dot = tok.find('.');
    return dot == std::string::npos ? 0 : int(tok.size() - dot - 1);
}

Weight scaled_weight(const std::string &tok, int pow10, int line_no) {
    Weight base = parse_weight(tok, line_no);
    int f = frac_digits(tok);
    for (int i = f; i < pow10; i++) base *= 10;
    return base;
}

}  // namespace

Graph parse_edge_list(std::istream &in) {
    std::string line;
    int line_no = 0;
    long long n = -1;
    std::vector<RawEdge> raw;
    bool any_weight = false;
    while (std::getline(in, line)) {
        line_no++;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string a, b, c;
        if (!(ls >> a)) continue;
        if (n < 0) {
            try {
                n = std::stoll(a);
            } catch (...) {
                throw GraphError("bad vertex count at line " + std::to_string(line_no));
            }
            if (n < 0) throw GraphError("bad vertex count at line " + std::to_string(line_no));
            if (ls >> b) throw GraphError("trailing tokens at line " + std::to_string(line_no));
            continue;
        }
        if (!(ls >> b)) throw GraphError("missing endpoint at line " + std::to_string(line_no));
        bool has_w = bool(ls >> c);
        std::string trail;
        if (ls >> trail) throw GraphError("trailing tokens at line " + std::to_string(line_no));
        int u, v;
        try {
            u = std::stoi(a);
            v = std::stoi(b);
        } catch (...) {
            throw GraphError("bad endpoint at line " + std::to_string(line_no));
        }
        raw.push_back({u, v, has_w ? c : "1", line_no});
        if (has_w && c != "1") any_weight = true;
    }
    if (n < 0) throw GraphError("missing vertex count line");
    int max_frac = 0;
    for (const auto &e : raw) max_frac = std::max(max_frac, frac_digits(e.wtok));
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto &e : raw) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw GraphError("endpoint out of range at line " + std::to_string(e.line));
        edges.push_back({e.u, e.v, scaled_weight(e.wtok, max_frac, e.line)});
    }
    return Graph(int(n), std::move(edges), any_weight || max_frac > 0);
}

namespace {

Graph parse_dimacs(std::istream &in) {
    std::string line;
    int line_no = 0;
    long long n = -1;
    std::vector<RawEdge> raw;
    bool any_weight = false;
    while (std::getline(in, line)) {
        line_no++;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            long long m = 0;
            if (!(ls >> kind >> n >> m) || n < 0)
                throw GraphError("bad problem line at line " + std::to_string(line_no));
            continue;
        }
        if (tag == "a" || tag == "e") {
            if (n < 0) throw GraphError("edge before problem line at line " + std::to_string(line_no));
            std::string a, b, c;
            if (!(ls >> a >> b)) throw GraphError("bad arc at line " + std::to_string(line_no));
            bool has_w = bool(ls >> c);
            int u, v;
            try {
                u = std::stoi(a) - 1;  // DIMACS ids are 1-based
                v = std::stoi(b) - 1;
            } catch (...) {
                throw GraphError("bad endpoint at line " + std::to_string(line_no));
            }
            raw.push_back({u, v, has_w ? c : "1", line_no});
            if (has_w && c != "1") any_weight = true;
            continue;
        }
        throw GraphError("unknown record '" + tag + "' at line " + std::to_string(line_no));
    }
    if (n < 0) throw GraphError("missing problem line");
    int max_frac = 0;
    for (const auto &e : raw) max_frac = std::max(max_frac, frac_digits(e.wtok));
    std::vector<Edge> edges;
    for (const auto &e : raw) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw GraphError("endpoint out of range at line " + std::to_string(e.line));
        edges.push_back({e.u, e.v, scaled_weight(e.wtok, max_frac, e.line)});
    }
    return Graph(int(n), std::move(edges), any_weight || max_frac > 0);
}

}  // namespace

Graph load_graph(const std::string &path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open " + path);
    return format == GraphFormat::EdgeList ? parse_edge_list(in) : parse_dimacs(in);
}

void save_graph(const Graph &g, const std::string &path) {
    std::ofstream out(path);
    if (!out) throw GraphError("cannot write " + path);
    out << g.num_vertices() << "\n";
    for (const auto &e : g.edges()) {
        out << e.u << " " << e.v;
        if (g.weighted()) out << " " << e.w;
        out << "\n";
    }
}

Graph random_graph(int n, long long m, Weight weight_max, uint64_t seed) {
    long long max_m = (long long)n * (n - 1) / 2;
    if (m > max_m) throw GraphError("random_graph: m too large");
    if (weight_max < 1) throw GraphError("random_graph: weight_max must be >= 1");
    std::mt19937_64 rng(seed);
    std::unordered_set<uint64_t> seen;
    std::vector<Edge> edges;
    edges.reserve(size_t(m));
    // dense fallback keeps the rejection loop honest on near-complete graphs
    if (m > max_m / 2 && n > 1) {
        std::vector<std::pair<int, int>> all;
        all.reserve(size_t(max_m));
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++) all.push_back({u, v});
        std::shuffle(all.begin(), all.end(), rng);
        for (long long i = 0; i < m; i++) {
            Weight w = weight_max == 1 ? 1 : std::uniform_int_distribution<Weight>(1, weight_max)(rng);
            edges.push_back({all[size_t(i)].first, all[size_t(i)].second, w});
        }
    } else {
        std::uniform_int_distribution<int> pick(0, n - 1);
        while ((long long)edges.size() < m) {
            int u = pick(rng), v = pick(rng);
            if (u == v) continue;
            int a = std::min(u, v), b = std::max(u, v);
            uint64_t key = uint64_t(a) * uint64_t(n) + uint64_t(b);
            if (!seen.insert(key).second) continue;
            Weight w = weight_max == 1 ? 1 : std::uniform_int_distribution<Weight>(1, weight_max)(rng);
            edges.push_back({a, b, w});
        }
    }
    return Graph(n, std::move(edges), weight_max > 1);
}

DegreeReduction degree_reduce(const Graph &g) {
    DegreeReduction out;
    const int n = g.num_vertices();
    int bound = int(std::max(3.0, std::ceil(g.avg_degree()) + 2));
    if (g.max_degree() <= bound || n == 0) {
        out.graph = g;
        out.vertex_map.resize(n);
        for (int i = 0; i < n; i++) out.vertex_map[i] = i;
        out.edge_endpoints.reserve(g.num_edges());
        for (const auto &e : g.edges()) out.edge_endpoints.push_back({e.u, e.v});
        out.changed = false;
        return out;
    }
    // per-copy slots: bound total, minus up to 2 chain edges
    const int slots = bound - 2;
    std::vector<int> copies(n, 1);
    std::vector<int> first_copy(n, 0);
    int next_id = 0;
    for (int u = 0; u < n; u++) {
        int d = g.degree(u);
        copies[u] = d <= bound ? 1 : (d + slots - 1) / slots;
        first_copy[u] = next_id;
        next_id += copies[u];
    }
    std::vector<Edge> edges;
    std::vector<int> used(next_id, 0);
    for (int u = 0; u < n; u++) {
        for (int c = 1; c < copies[u]; c++) {
            edges.push_back({first_copy[u] + c - 1, first_copy[u] + c, 0});
            used[first_copy[u] + c - 1]++;
            used[first_copy[u] + c]++;
        }
    }
    auto place = [&](int u) {
        if (copies[u] == 1) return first_copy[u];
        int cap = slots;
        for (int c = 0; c < copies[u]; c++) {
            int id = first_copy[u] + c;
            int chain = (copies[u] == 1) ? 0 : ((c == 0 || c == copies[u] - 1) ? 1 : 2);
            if (used[id] - chain < cap) return id;
        }
        return first_copy[u];  // unreachable by construction
    };
    out.edge_endpoints.reserve(g.num_edges());
    for (const auto &e : g.edges()) {
        int a = place(e.u);
        int b = place(e.v);
        used[a]++;
        used[b]++;
        edges.push_back({a, b, e.w});
        out.edge_endpoints.push_back({a, b});
    }
    out.graph = Graph(next_id, std::move(edges), true);
    out.vertex_map.resize(n);
    for (int u = 0; u < n; u++) out.vertex_map[u] = first_copy[u];
    out.changed = true;
    return out;
}

uint64_t graph_digest(const Graph &g) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](uint64_t x) {
        for (int i = 0; i < 8; i++) {
            h ^= (x >> (i * 8)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(uint64_t(g.num_vertices()));
    mix(uint64_t(g.weighted()));
    for (const auto &e : g.edges()) {
        mix(uint64_t(e.u));
        mix(uint64_t(e.v));
        mix(e.w);
    }
    return h;
}

}  // namespace ado
