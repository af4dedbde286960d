#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

/// Witness of an H(l,3) subgraph: a triangle and an l-cycle meeting in the
/// apex only. All 1 + 2 + (l-1) vertices are distinct; edges are required as
/// a subgraph, chords are allowed.
struct FishWitness {
    int apex = -1;
    std::array<int, 2> triangle{};  // the triangle's other two vertices
    std::vector<int> cycle;         // the cycle's other l-1 vertices, in cycle order

    bool valid_in(const Graph& g) const;
};

/// Finds an H(l,3) subgraph (cycle C_l and a triangle sharing exactly one
/// vertex), l >= 3. l = 3 detects the bowtie.
std::optional<FishWitness> contains_h_l3(const Graph& g, int l);

bool is_h43_free(const Graph& g);

/// The fish graph H(l,3) itself: l-cycle and triangle glued at one vertex.
Graph h_l3(int l);

/// Test oracle: is there an injection V(h) -> V(g) mapping edges to edges?
/// Plain backtracking; intended for n(g) <= 12.
bool brute_force_contains(const Graph& g, const Graph& h);

/// Random H(4,3)-free graph with exactly m edges and no isolated vertices on
/// at most n vertices. Randomized edge insertion with rollback; deterministic
/// per seed; makes no uniformity claim. Throws std::runtime_error after the
/// retry budget (default 200 restarts) is exhausted.
Graph random_h43_free(int m, int n, std::uint64_t seed, int max_restarts = 200);

}  // namespace spex
