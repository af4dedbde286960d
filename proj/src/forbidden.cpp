#include "spex/forbidden.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace spex {

bool FishWitness::valid_in(const Graph& g) const {
    VertexSet used = VertexSet::single(apex);
    for (int v : triangle) {
        if (used.contains(v)) return false;
        used.add(v);
    }
    for (int v : cycle) {
        if (used.contains(v)) return false;
        used.add(v);
    }
    if (!g.has_edge(apex, triangle[0]) || !g.has_edge(apex, triangle[1]) ||
        !g.has_edge(triangle[0], triangle[1]))
        return false;
    int prev = apex;
    for (int v : cycle) {
        if (!g.has_edge(prev, v)) return false;
        prev = v;
    }
    return g.has_edge(prev, apex);
}

namespace {

// Depth-first search for a cycle of length l through `apex`, avoiding
// `blocked`; fills witness.cycle on success.
bool find_cycle_through(const Graph& g, int apex, int l, VertexSet blocked,
                        std::vector<int>& out) {
    out.assign(l - 1, -1);
    VertexSet used = blocked;
    used.add(apex);
    // out[0..l-2] is the path after the apex; close back to apex at the end
    auto dfs = [&](auto&& self, int depth, int at) -> bool {
        if (depth == l - 1) return g.has_edge(at, apex);
        for (int next : g.adj(at) - used) {
            // the last interior vertex must be able to reach the apex
            out[depth] = next;
            used.add(next);
            if (self(self, depth + 1, next)) return true;
            used.remove(next);
        }
        return false;
    };
    for (int first : g.adj(apex) - blocked) {
        out[0] = first;
        used.add(first);
        if (dfs(dfs, 1, first)) return true;
        used.remove(first);
    }
    return false;
}

}  // namespace

std::optional<FishWitness> contains_h_l3(const Graph& g, int l) {
    if (l < 3) throw std::invalid_argument("contains_h_l3: need cycle length >= 3");
    if (g.m() < l + 3) return std::nullopt;  // H(l,3) has l+3 edges
    for (int apex = 0; apex < g.n(); ++apex) {
        VertexSet nb = g.adj(apex);
        // triangles through the apex: adjacent pairs inside N(apex)
        for (int a : nb) {
            for (int b : g.adj(a) & nb) {
                if (b <= a) continue;
                VertexSet blocked;
                blocked.add(a).add(b);
                FishWitness w;
                w.apex = apex;
                w.triangle = {a, b};
                if (find_cycle_through(g, apex, l, blocked, w.cycle)) return w;
            }
        }
    }
    return std::nullopt;
}

bool is_h43_free(const Graph& g) { return !contains_h_l3(g, 4).has_value(); }

Graph h_l3(int l) {
    if (l < 3) throw std::invalid_argument("h_l3: need cycle length >= 3");
    std::vector<Edge> e = {{0, 1}, {1, 2}, {2, 0}};  // triangle at apex 0
    int prev = 0;
    for (int i = 0; i < l - 1; ++i) {
        e.emplace_back(prev, 3 + i);
        prev = 3 + i;
    }
    e.emplace_back(prev, 0);
    return Graph::from_edge_list(l + 2, e);
}

bool brute_force_contains(const Graph& g, const Graph& h) {
    if (h.n() > g.n() || h.m() > g.m()) return false;
    const int hn = h.n();
    std::vector<int> map(hn, -1);
    VertexSet used;
    auto extend = [&](auto&& self, int i) -> bool {
        if (i == hn) return true;
        for (int cand = 0; cand < g.n(); ++cand) {
            if (used.contains(cand)) continue;
            if (g.degree(cand) < h.degree(i)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (h.has_edge(i, j) && !g.has_edge(cand, map[j])) ok = false;
            if (!ok) continue;
            map[i] = cand;
            used.add(cand);
            if (self(self, i + 1)) return true;
            used.remove(cand);
        }
        return false;
    };
    return extend(extend, 0);
}

Graph random_h43_free(int m, int n, std::uint64_t seed, int max_restarts) {
    if (n < 1 || n > Graph::kMaxVertices)
        throw std::invalid_argument("random_h43_free: vertex budget out of range");
    if (m < 1 || static_cast<long>(m) > static_cast<long>(n) * (n - 1) / 2)
        throw std::invalid_argument("random_h43_free: m infeasible for the vertex budget");

    for (int attempt = 0; attempt < max_restarts; ++attempt) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * attempt);
        std::vector<Edge> pool;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pool.emplace_back(u, v);
        std::shuffle(pool.begin(), pool.end(), rng);

        Graph g = Graph::from_edge_list(n, {});
        std::vector<int> deg(n, 0);
        auto try_add = [&](const Edge& e) {
            Graph cand = g.with_edge(e.first, e.second);
            if (!is_h43_free(cand)) return false;
            g = std::move(cand);
            ++deg[e.first];
            ++deg[e.second];
            return true;
        };
        // phase 1: edges touching an uncovered vertex
        for (const Edge& e : pool) {
            if (g.m() == m) break;
            if (deg[e.first] == 0 || deg[e.second] == 0) try_add(e);
        }
        // phase 2: anything else
        for (const Edge& e : pool) {
            if (g.m() == m) break;
            if (!g.has_edge(e.first, e.second)) try_add(e);
        }
        if (g.m() != m) continue;
        bool covered = true;
        for (int v = 0; v < n && covered; ++v) covered = deg[v] > 0;
        if (!covered) {
            auto trimmed = remove_isolated_vertices(g);
            if (trimmed.graph.n() == 0) continue;
            g = trimmed.graph;
        }
        return g;
    }
    throw std::runtime_error("random_h43_free: retry budget exhausted for m=" +
                             std::to_string(m) + ", n=" + std::to_string(n));
}

}  // namespace spex
