#include "spex/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace spex {

namespace {

void check_capacity(int n) {
    if (n < 0 || n > Graph::kMaxVertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) +
                                    " outside 0.." + std::to_string(Graph::kMaxVertices));
}

}  // namespace

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
    check_capacity(n);
    std::vector<std::uint64_t> rows(n, 0);
    int m = 0;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range for n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if ((rows[u] >> v) & 1u)
            throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        rows[u] |= std::uint64_t{1} << v;
        rows[v] |= std::uint64_t{1} << u;
        ++m;
    }
    return Graph(n, std::move(rows), m);
}

Graph Graph::from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(std::vector<std::uint64_t> rows) {
    int n = static_cast<int>(rows.size());
    check_capacity(n);
    std::uint64_t valid = VertexSet::first_n(n).bits;
    long deg_sum = 0;
    for (int v = 0; v < n; ++v) {
        if (rows[v] & ~valid)
            throw std::invalid_argument("adjacency row references vertex >= n");
        if ((rows[v] >> v) & 1u)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
        deg_sum += std::popcount(rows[v]);
    }
    for (int v = 0; v < n; ++v)
        for (int u : VertexSet{rows[v]})
            if (!((rows[u] >> v) & 1u))
                throw std::invalid_argument("adjacency not symmetric");
    return Graph(n, std::move(rows), static_cast<int>(deg_sum / 2));
}

Graph Graph::with_edge(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_ || has_edge(u, v))
        throw std::invalid_argument("with_edge: invalid or existing edge");
    auto rows = rows_;
    rows[u] |= std::uint64_t{1} << v;
    rows[v] |= std::uint64_t{1} << u;
    return Graph(n_, std::move(rows), m_ + 1);
}

Graph Graph::without_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || !has_edge(u, v))
        throw std::invalid_argument("without_edge: no such edge");
    auto rows = rows_;
    rows[u] &= ~(std::uint64_t{1} << v);
    rows[v] &= ~(std::uint64_t{1} << u);
    return Graph(n_, std::move(rows), m_ - 1);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : VertexSet{rows_[u] & ~(VertexSet::first_n(u + 1).bits)})
            out.emplace_back(u, v);
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    int n = g.n() + h.n();
    if (n > Graph::kMaxVertices)
        throw std::invalid_argument("join exceeds " + std::to_string(Graph::kMaxVertices) +
                                    " vertices");
    std::vector<std::uint64_t> rows(n, 0);
    std::uint64_t left = VertexSet::first_n(g.n()).bits;
    std::uint64_t right = VertexSet::first_n(n).bits & ~left;
    for (int v = 0; v < g.n(); ++v) rows[v] = g.adj(v).bits | right;
    for (int v = 0; v < h.n(); ++v) rows[g.n() + v] = (h.adj(v).bits << g.n()) | left;
    return Graph::from_rows(std::move(rows));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.n() + h.n();
    if (n > Graph::kMaxVertices)
        throw std::invalid_argument("union exceeds " + std::to_string(Graph::kMaxVertices) +
                                    " vertices");
    std::vector<std::uint64_t> rows(n, 0);
    for (int v = 0; v < g.n(); ++v) rows[v] = g.adj(v).bits;
    for (int v = 0; v < h.n(); ++v) rows[g.n() + v] = h.adj(v).bits << g.n();
    return Graph::from_rows(std::move(rows));
}

Graph k_copies(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("k_copies: negative count");
    Graph out;
    for (int i = 0; i < k; ++i) out = disjoint_union(out, g);
    return out;
}

Graph star(int k) {
    if (k < 1) throw std::invalid_argument("star: need k >= 1");
    std::vector<Edge> e;
    for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
    return Graph::from_edge_list(k + 1, e);
}

Graph cycle(int l) {
    if (l < 3) throw std::invalid_argument("cycle: need length >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < l; ++i) e.emplace_back(i, (i + 1) % l);
    return Graph::from_edge_list(l, e);
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: need >= 1 vertex");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, e);
}

Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edge_list(n, e);
}

Graph complete_bipartite(int s, int t) {
    std::vector<Edge> e;
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v) e.emplace_back(u, s + v);
    return Graph::from_edge_list(s + t, e);
}

VertexSet neighborhood(const Graph& g, int v) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("neighborhood: vertex out of range");
    return g.adj(v);
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    if (!s.subset_of(g.vertices()))
        throw std::invalid_argument("induced_subgraph: set not within V(G)");
    std::vector<int> labels;
    labels.reserve(s.count());
    int pos[Graph::kMaxVertices];
    for (int v : s) {
        pos[v] = static_cast<int>(labels.size());
        labels.push_back(v);
    }
    std::vector<std::uint64_t> rows(labels.size(), 0);
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (int u : g.adj(labels[i]) & s)
            rows[i] |= std::uint64_t{1} << pos[u];
    return {Graph::from_rows(std::move(rows)), std::move(labels)};
}

InducedSubgraph remove_isolated_vertices(const Graph& g) {
    VertexSet keep;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 0) keep.add(v);
    return induced_subgraph(g, keep);
}

int edges_within(const Graph& g, VertexSet s) {
    int twice = 0;
    for (int v : s) twice += (g.adj(v) & s).count();
    return twice / 2;
}

int edges_between(const Graph& g, VertexSet s, VertexSet t) {
    if (!(s & t).empty()) throw std::invalid_argument("edges_between: sets overlap");
    int count = 0;
    for (int v : s) count += (g.adj(v) & t).count();
    return count;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::uint64_t seen = 0;
    for (int v = 0; v < g.n(); ++v) {
        if ((seen >> v) & 1u) continue;
        std::uint64_t comp = std::uint64_t{1} << v;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (int u : VertexSet{frontier}) next |= g.adj(u).bits;
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        comps.push_back(VertexSet{comp});
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.n() > 0 && connected_components(g).size() == 1;
}

// -- canonical labeling -------------------------------------------------------
//
// Per connected component: colour refinement to a stable partition, then
// individualization with backtracking over the first smallest non-singleton
// colour class, taking the lexicographically smallest relabeled adjacency.
// Vertices whose rows agree outside the pair ("twins") are interchangeable by
// an automorphism, so only one per twin class is branched on. Components are
// then sorted by their canonical encoding, which makes the full form a
// function of the isomorphism class only.

namespace {

// Re-ranks colours so that equal (colour, sorted neighbour colours) signatures
// share a rank; repeats until the partition is stable. Ranks stay dense.
void refine_colors(const Graph& g, std::vector<int>& color) {
    const int n = g.n();
    std::vector<std::vector<int>> sig(n);
    std::vector<int> order(n);
    while (true) {
        for (int v = 0; v < n; ++v) {
            sig[v].clear();
            sig[v].push_back(color[v]);
            for (int u : g.adj(v)) sig[v].push_back(color[u]);
            std::sort(sig[v].begin() + 1, sig[v].end());
        }
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return sig[a] < sig[b]; });
        std::vector<int> next(n);
        int rank = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
            next[order[i]] = rank;
        }
        if (next == color) return;
        color = std::move(next);
    }
}

bool is_discrete(const std::vector<int>& color) {
    int n = static_cast<int>(color.size());
    std::uint64_t seen = 0;
    for (int c : color) seen |= std::uint64_t{1} << c;
    return std::popcount(seen) == n;
}

// rows of g relabeled so that new label of v is color[v] (discrete colouring)
std::vector<std::uint64_t> relabeled_rows(const Graph& g, const std::vector<int>& color) {
    std::vector<std::uint64_t> rows(g.n(), 0);
    for (int v = 0; v < g.n(); ++v)
        for (int u : g.adj(v)) rows[color[v]] |= std::uint64_t{1} << color[u];
    return rows;
}

bool twin_vertices(const Graph& g, int u, int v) {
    std::uint64_t pair = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    return ((g.adj(u).bits ^ g.adj(v).bits) & ~pair) == 0;
}

struct CanonSearch {
    const Graph& g;
    std::vector<std::uint64_t> best;
    std::vector<int> best_path;  // individualized vertices along the best leaf's branch
    std::vector<int> path;

    static constexpr int kContinue = 1 << 30;

    void run(std::vector<int> color) {
        refine_colors(g, color);
        descend(color);
    }

    // Returns kContinue, or the depth to backjump to: a leaf that exactly
    // reproduces the best labeling exposes an automorphism, so every branch
    // between that leaf and its divergence from the best path is the image
    // of an explored one and can be abandoned wholesale.
    int descend(const std::vector<int>& color) {
        if (is_discrete(color)) {
            auto rows = relabeled_rows(g, color);
            if (best.empty() || rows < best) {
                best = std::move(rows);
                best_path = path;
                return kContinue;
            }
            if (rows == best) {
                int t = 0;
                while (t < static_cast<int>(std::min(path.size(), best_path.size())) &&
                       path[t] == best_path[t])
                    ++t;
                return t;
            }
            return kContinue;
        }
        // first smallest non-singleton class, by colour value
        int n = g.n();
        std::vector<int> count(n, 0);
        for (int c : color) ++count[c];
        int target = -1;
        for (int c = 0; c < n; ++c)
            if (count[c] >= 2 && (target < 0 || count[c] < count[target])) target = c;
        std::vector<int> cell;
        for (int v = 0; v < n; ++v)
            if (color[v] == target) cell.push_back(v);

        std::vector<int> reps;
        for (int v : cell) {
            bool dup = false;
            for (int r : reps)
                if (twin_vertices(g, r, v)) { dup = true; break; }
            if (!dup) reps.push_back(v);
        }
        const int depth = static_cast<int>(path.size());
        for (int v : reps) {
            std::vector<int> next(color);
            for (int u = 0; u < n; ++u)
                if (next[u] > target || (next[u] == target && u != v)) ++next[u];
            refine_colors(g, next);
            path.push_back(v);
            int jump = descend(next);
            path.pop_back();
            if (jump != kContinue && jump < depth) return jump;
        }
        return kContinue;
    }
};

// canonical relabeling of a connected (or small) graph as new-label rows
std::vector<std::uint64_t> canonical_rows_one_piece(const Graph& g) {
    if (g.n() == 0) return {};
    CanonSearch search{g, {}, {}, {}};
    search.run(std::vector<int>(g.n(), 0));
    return search.best;
}

}  // namespace

Graph canonical_graph(const Graph& g) {
    auto comps = connected_components(g);
    struct Piece {
        std::vector<std::uint64_t> rows;
        std::string key;
    };
    std::vector<Piece> pieces;
    pieces.reserve(comps.size());
    for (VertexSet c : comps) {
        auto sub = induced_subgraph(g, c);
        Piece p{canonical_rows_one_piece(sub.graph), {}};
        p.key.push_back(static_cast<char>(sub.graph.n()));
        for (auto r : p.rows)
            for (int b = 0; b < 8; ++b) p.key.push_back(static_cast<char>((r >> (8 * b)) & 0xff));
        pieces.push_back(std::move(p));
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const Piece& a, const Piece& b) { return a.key < b.key; });
    std::vector<std::uint64_t> rows;
    rows.reserve(g.n());
    int offset = 0;
    for (const Piece& p : pieces) {
        for (auto r : p.rows) rows.push_back(r << offset);
        offset += static_cast<int>(p.rows.size());
    }
    return Graph::from_rows(std::move(rows));
}

std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

// -- graph6 -------------------------------------------------------------------

std::string to_edge_list_text(const Graph& g) {
    std::ostringstream os;
    os << g.n() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

Graph from_edge_list_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    long lineno = 0;
    auto bad = [&](const std::string& why) {
        return std::invalid_argument("edge list line " + std::to_string(lineno) + ": " + why);
    };
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n) || n < 0) throw bad("expected the vertex count");
            continue;
        }
        int u, v;
        if (!(fields >> u >> v)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw bad("expected 'u v'");
        }
        std::string extra;
        if (fields >> extra) throw bad("trailing tokens");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw std::invalid_argument("edge list: empty input");
    return Graph::from_edge_list(n, edges);
}

Graph6Error::Graph6Error(std::size_t off, const std::string& what)
    : std::runtime_error("graph6: " + what + " (byte " + std::to_string(off) + ")"),
      offset(off) {}

std::string to_graph6(const Graph& g) {
    const int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.empty()) throw Graph6Error(0, "empty input");
    std::size_t pos = 0;
    auto take = [&]() -> int {
        if (pos >= text.size()) throw Graph6Error(pos, "truncated input");
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) throw Graph6Error(pos, "byte outside graph6 alphabet");
        ++pos;
        return c - 63;
    };
    int n;
    if (static_cast<unsigned char>(text[0]) == 126) {
        ++pos;
        if (pos + 3 > text.size()) throw Graph6Error(pos, "truncated extended header");
        int a = take(), b = take(), c = take();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = take();
    }
    if (n > Graph::kMaxVertices)
        throw Graph6Error(0, "order " + std::to_string(n) + " exceeds capacity " +
                                 std::to_string(Graph::kMaxVertices));
    long bits_needed = static_cast<long>(n) * (n - 1) / 2;
    std::vector<std::uint64_t> rows(n, 0);
    long bit = 0;
    int i = 0, j = 1;
    while (bit < bits_needed) {
        std::size_t at = pos;
        int word = take();
        for (int k = 5; k >= 0; --k) {
            if (bit < bits_needed) {
                if ((word >> k) & 1) {
                    rows[i] |= std::uint64_t{1} << j;
                    rows[j] |= std::uint64_t{1} << i;
                }
                ++bit;
                if (++i == j) { i = 0; ++j; }
            } else if ((word >> k) & 1) {
                throw Graph6Error(at, "nonzero padding bits");
            }
        }
    }
    if (pos != text.size()) throw Graph6Error(pos, "trailing bytes after graph data");
    return Graph::from_rows(std::move(rows));
}

}  // namespace spex
