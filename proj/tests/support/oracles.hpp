#pragma once

// Independent brute-force paths used only as test oracles.

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_set>
#include <vector>

#include "spex/graph.hpp"

namespace spex::testing {

// Number of isomorphism classes with m edges on exactly n labeled vertices
// and no isolated vertex, by enumerating every labeled m-subset of edge
// slots and deduplicating with canonical_form. Feasible for n <= 9.
inline long labeled_class_count(int n, int m) {
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    const int total = static_cast<int>(slots.size());
    if (m > total) return 0;

    std::unordered_set<std::string> classes;
    std::vector<int> pick(m);
    for (int i = 0; i < m; ++i) pick[i] = i;
    std::vector<Edge> chosen(m);
    while (true) {
        std::uint64_t covered = 0;
        for (int i = 0; i < m; ++i) {
            chosen[i] = slots[pick[i]];
            covered |= (std::uint64_t{1} << chosen[i].first) |
                       (std::uint64_t{1} << chosen[i].second);
        }
        if (std::popcount(covered) == n)
            classes.insert(canonical_form(Graph::from_edge_list(n, chosen)));
        // advance to the next m-combination
        int i = m - 1;
        while (i >= 0 && pick[i] == total - m + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
    return static_cast<long>(classes.size());
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
    for (int tries = 0; tries < 10000; ++tries) {
        Graph g = random_graph(n, p, rng);
        if (is_connected(g)) return g;
    }
    return complete(n);  // p too small to hit a connected sample
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph::from_edge_list(g.n(), edges);
}

inline Graph random_relabel(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> perm(g.n());
    for (int i = 0; i < g.n(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(g, perm);
}

}  // namespace spex::testing
