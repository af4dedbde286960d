#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spex {

/// Set of vertices 0..63 as a single machine word.
struct VertexSet {
    std::uint64_t bits = 0;

    static VertexSet single(int v) { return VertexSet{std::uint64_t{1} << v}; }
    static VertexSet first_n(int n) {
        return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    bool contains(int v) const { return (bits >> v) & 1u; }
    int count() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }

    VertexSet& add(int v) { bits |= std::uint64_t{1} << v; return *this; }
    VertexSet& remove(int v) { bits &= ~(std::uint64_t{1} << v); return *this; }

    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits | b.bits}; }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits & b.bits}; }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits & ~b.bits}; }
    friend bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
    bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }

    // iterates set bits in increasing order
    struct iterator {
        std::uint64_t rest;
        int operator*() const { return std::countr_zero(rest); }
        iterator& operator++() { rest &= rest - 1; return *this; }
        bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    iterator begin() const { return {bits}; }
    iterator end() const { return {0}; }
};

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on at most 64 vertices.
/// Adjacency is one bitset row per vertex; the edge count is cached.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;  // the empty graph (0 vertices)

    /// Builds a graph from an explicit edge list. Rejects self-loops,
    /// duplicate edges and out-of-range endpoints.
    static Graph from_edge_list(int n, std::span<const Edge> edges);
    static Graph from_edge_list(int n, std::initializer_list<Edge> edges);

    /// Builds directly from adjacency rows; validates symmetry and loop-freeness.
    static Graph from_rows(std::vector<std::uint64_t> rows);

    int n() const { return n_; }
    int m() const { return m_; }
    bool empty() const { return n_ == 0; }

    bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1u; }
    VertexSet adj(int v) const { return VertexSet{rows_[v]}; }
    int degree(int v) const { return std::popcount(rows_[v]); }
    VertexSet vertices() const { return VertexSet::first_n(n_); }

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    Graph(int n, std::vector<std::uint64_t> rows, int m)
        : n_(n), m_(m), rows_(std::move(rows)) {}

    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> rows_;
};

// -- constructions used throughout ------------------------------------------

/// Disjoint union followed by all edges between the two vertex sets.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph k_copies(const Graph& g, int k);

Graph star(int k);               // K_{1,k}, k >= 1; k+1 vertices
Graph cycle(int l);              // C_l, l >= 3
Graph path(int n);               // P_n, n >= 1
Graph complete(int n);           // K_n
Graph complete_bipartite(int s, int t);

VertexSet neighborhood(const Graph& g, int v);

/// Induced subgraph relabeled to 0..|s|-1. labels[i] is the original vertex
/// carried by new vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> labels;
};
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

/// Drops all degree-0 vertices and relabels compactly. The result may be the
/// empty graph (n() == 0); callers that require vertices must check.
InducedSubgraph remove_isolated_vertices(const Graph& g);

// -- counting ----------------------------------------------------------------

int edges_within(const Graph& g, VertexSet s);                 // e(S)
int edges_between(const Graph& g, VertexSet s, VertexSet t);   // e(S,T), disjoint S,T

// -- connectivity ------------------------------------------------------------

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// -- canonical labeling and graph6 -------------------------------------------

/// Canonical byte string: equal iff the graphs are isomorphic, stable across
/// runs and platforms. Encoded as the graph6 of a canonically relabeled copy.
/// Uses colour refinement plus branch-and-prune individualization per
/// component; exact for all n, but cost can grow steeply past n ~ 12 on
/// highly regular graphs.
std::string canonical_form(const Graph& g);

/// The canonically relabeled graph itself (same labeling canonical_form uses).
Graph canonical_graph(const Graph& g);

std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);  // throws Graph6Error

/// Plain-text interchange: first line the vertex count, then one "u v" line
/// per edge.
std::string to_edge_list_text(const Graph& g);
Graph from_edge_list_text(std::string_view text);

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(std::size_t offset, const std::string& what);
    std::size_t offset;  // byte position of the malformed input
};

}  // namespace spex
