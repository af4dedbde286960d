#include "spex/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spex/forbidden.hpp"

namespace spex {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
        case CheckStatus::Warn: return "warn";
    }
    return "?";
}

std::string check_csv_header() {
    return "graph6,m,check_id,hypothesis,lhs,rhs,margin,status";
}

std::string to_csv(const CheckRow& row) {
    std::ostringstream os;
    os.precision(15);
    os << row.graph6 << ',' << row.m << ',' << row.check_id << ',' << row.hypothesis << ','
       << row.lhs << ',' << row.rhs << ',' << row.margin << ',' << to_string(row.status);
    return os.str();
}

namespace {

void check_partition(const Graph& g, std::span<const VertexSet> blocks) {
    if (blocks.empty()) throw std::invalid_argument("partition: no blocks");
    VertexSet seen;
    for (const VertexSet& b : blocks) {
        if (b.empty()) throw std::invalid_argument("partition: empty block");
        if (!(seen & b).empty()) throw std::invalid_argument("partition: blocks overlap");
        seen = seen | b;
    }
    if (!(seen == g.vertices()))
        throw std::invalid_argument("partition: blocks do not cover V(G)");
}

}  // namespace

bool is_equitable(const Graph& g, std::span<const VertexSet> blocks) {
    check_partition(g, blocks);
    for (const VertexSet& bi : blocks) {
        for (const VertexSet& bj : blocks) {
            int expected = -1;
            for (int v : bi) {
                int count = (g.adj(v) & bj).count();
                if (expected < 0) expected = count;
                if (count != expected) return false;
            }
        }
    }
    return true;
}

QuotientSpec quotient_matrix(const Graph& g, std::span<const VertexSet> blocks) {
    check_partition(g, blocks);
    const std::size_t s = blocks.size();
    QuotientSpec spec;
    spec.blocks.assign(blocks.begin(), blocks.end());
    spec.matrix.assign(s, std::vector<double>(s, 0.0));
    spec.equitable = true;
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            long total = 0;
            int first = -1;
            bool constant = true;
            for (int v : blocks[i]) {
                int count = (g.adj(v) & blocks[j]).count();
                total += count;
                if (first < 0) first = count;
                if (count != first) constant = false;
            }
            spec.matrix[i][j] = static_cast<double>(total) / blocks[i].count();
            if (!constant) spec.equitable = false;
        }
    }
    return spec;
}

QuotientCheck quotient_spectral_check(const Graph& g, std::span<const VertexSet> blocks,
                                      double tol, const PowerOptions& opts) {
    if (!is_equitable(g, blocks))
        throw std::invalid_argument("quotient_spectral_check: partition is not equitable");
    if (!is_connected(g))
        throw std::invalid_argument("quotient_spectral_check: graph not connected");
    // equitable row sums are integers, so the quotient eigenvalue comes from
    // an exact characteristic polynomial
    const std::size_t s = blocks.size();
    std::vector<std::vector<Rational>> q(s, std::vector<Rational>(s));
    for (std::size_t i = 0; i < s; ++i) {
        int v = *blocks[i].begin();
        for (std::size_t j = 0; j < s; ++j)
            q[i][j] = Rational((g.adj(v) & blocks[j]).count());
    }
    QuotientCheck out;
    out.lambda_quotient = largest_real_root(char_poly(q));
    out.lambda_graph = spectral_radius(g, opts).lambda;
    out.deviation = std::fabs(out.lambda_quotient - out.lambda_graph);
    out.pass = out.deviation <= tol;
    return out;
}

NeighborhoodDecomposition neighborhood_decomposition(const Graph& g, const PowerOptions& opts) {
    NeighborhoodDecomposition d;
    d.perron = perron_vector(g, opts);  // rejects disconnected input
    d.u_star = 0;
    for (int v = 1; v < g.n(); ++v)
        if (d.perron.vector[v] > d.perron.vector[d.u_star]) d.u_star = v;

    d.U = g.adj(d.u_star);
    d.W = g.vertices() - d.U - VertexSet::single(d.u_star);
    for (int v : d.U) {
        if ((g.adj(v) & d.U).empty())
            d.U0.add(v);
        else
            d.U_plus.add(v);
    }
    d.e_u_plus = edges_within(g, d.U_plus);
    d.e_uw = edges_between(g, d.U, d.W);
    d.e_w = edges_within(g, d.W);
    return d;
}

IdentityReport check_eigen_identities(const Graph& g, const NeighborhoodDecomposition& d,
                                      double tol) {
    IdentityReport rep;
    rep.tol = tol;
    rep.counting_exact =
        g.m() == d.U.count() + d.e_u_plus + d.e_uw + d.e_w;

    const auto& x = d.perron.vector;
    const double lambda = d.perron.lambda;
    const double xs = x[d.u_star];

    double sum_u = 0;
    for (int v : d.U) sum_u += x[v];
    rep.dev_weight_sum = std::fabs(lambda * xs - sum_u);

    double sum_plus = 0, sum_plus_minus = 0, sum_w = 0, sum_zero = 0;
    for (int v : d.U_plus) {
        int du = d.d_u(v, g);
        sum_plus += du * x[v];
        sum_plus_minus += (du - 1) * x[v];
    }
    for (int w : d.W) sum_w += d.d_u(w, g) * x[w];
    for (int v : d.U0) sum_zero += x[v];

    rep.dev_square = std::fabs(lambda * lambda * xs - (d.U.count() * xs + sum_plus + sum_w));
    rep.dev_square_minus = std::fabs((lambda * lambda - lambda) * xs -
                                     (d.U.count() * xs + sum_plus_minus + sum_w - sum_zero));
    rep.pass = rep.counting_exact && rep.dev_weight_sum <= tol && rep.dev_square <= tol &&
               rep.dev_square_minus <= tol;
    return rep;
}

std::vector<StarViolation> star_neighborhood_check(const Graph& g) {
    if (!is_h43_free(g))
        throw std::invalid_argument("star_neighborhood_check: input contains H(4,3)");
    std::vector<StarViolation> out;
    for (int u = 0; u < g.n(); ++u) {
        VertexSet nb = g.adj(u);
        if (edges_within(g, nb) < 7) continue;
        auto local = induced_subgraph(g, nb);
        for (VertexSet comp : connected_components(local.graph)) {
            int nv = comp.count();
            int ne = edges_within(local.graph, comp);
            if (ne == 0) continue;  // trivial component
            int maxdeg = 0;
            for (int v : comp) maxdeg = std::max(maxdeg, (local.graph.adj(v) & comp).count());
            if (ne != nv - 1 || maxdeg != nv - 1) {
                std::ostringstream os;
                os << "component of G[N(" << u << ")] with " << nv << " vertices and " << ne
                   << " edges is not a star";
                out.push_back({u, os.str()});
            }
        }
    }
    return out;
}

Graph relocate_edges(const Graph& g, int u, int v, VertexSet moved) {
    std::vector<std::string> problems;
    if (u == v) problems.push_back("u == v");
    if (u < 0 || u >= g.n()) problems.push_back("u out of range");
    if (v < 0 || v >= g.n()) problems.push_back("v out of range");
    if (moved.empty()) problems.push_back("moved set is empty");
    if (problems.empty()) {
        if (moved.contains(u)) problems.push_back("u is inside moved");
        if (moved.contains(v)) problems.push_back("v is inside moved");
        if (!moved.subset_of(g.adj(v))) problems.push_back("moved not a subset of N(v)");
        if (!(moved & g.adj(u)).empty()) problems.push_back("moved intersects N(u)");
        if (!is_connected(g)) problems.push_back("graph not connected");
    }
    if (!problems.empty()) {
        std::string msg = "relocate_edges:";
        for (const auto& p : problems) msg += " [" + p + "]";
        throw std::invalid_argument(msg);
    }
    Graph out = g;
    for (int x : moved) out = out.without_edge(v, x).with_edge(u, x);
    return out;
}

RelocationReport check_relocation_increases_lambda(const Graph& g, int u, int v,
                                                   VertexSet moved, double margin,
                                                   const PowerOptions& opts) {
    RelocationReport rep;
    Graph relocated;
    try {
        relocated = relocate_edges(g, u, v, moved);
    } catch (const std::invalid_argument& e) {
        rep.status = CheckStatus::Skip;
        rep.reason = e.what();
        return rep;
    }
    SpectralResult before = perron_vector(g, opts);
    if (before.vector[u] < before.vector[v]) {
        rep.status = CheckStatus::Skip;
        rep.reason = "hypothesis x_u >= x_v not met";
        rep.lambda_before = before.lambda;
        return rep;
    }
    rep.lambda_before = before.lambda;
    rep.lambda_after = spectral_radius(relocated, opts).lambda;
    double diff = rep.lambda_after - rep.lambda_before;
    if (diff > margin) {
        rep.status = CheckStatus::Pass;
    } else if (diff >= 0) {
        rep.status = CheckStatus::Warn;
        rep.reason = "increase below margin; review";
    } else {
        rep.status = CheckStatus::Fail;
        rep.reason = "spectral radius did not increase";
    }
    return rep;
}

std::string edge_bound_assumption_note() {
    return "# hypothesis set: connected graph, spectral-radius threshold, weight-gap "
           "condition x_j < (1-alpha) x_u*";
}

EdgeBoundReport check_edge_count_bound(const Graph& g, const NeighborhoodDecomposition& d,
                                       const WeightGapQuery& q) {
    if (!(q.alpha > 0 && q.alpha < 1))
        throw std::invalid_argument("check_edge_count_bound: alpha must lie in (0,1)");
    bool in_w = d.W.contains(q.vertex);
    bool in_plus = d.U_plus.contains(q.vertex);
    if (q.vertex < 0 || q.vertex >= g.n() || (!in_w && !in_plus))
        throw std::invalid_argument("check_edge_count_bound: vertex not in W or U+");

    // U0 spans no edges, so e(U) and e(U+) must agree; cheap self-test
    if (edges_within(g, d.U) != d.e_u_plus)
        throw std::logic_error("check_edge_count_bound: e(U) != e(U+)");

    EdgeBoundReport rep;
    const bool gap5 = q.variant == EdgeBoundVariant::Gap5;
    rep.check_id = gap5 ? "edge-bound-gap5" : "edge-bound-gap7";
    double thresh = (1.0 + std::sqrt(4.0 * g.m() - (gap5 ? 5.0 : 7.0))) / 2.0;
    double slack = gap5 ? 1.5 : 2.0;

    if (d.perron.lambda <= thresh) {
        rep.status = CheckStatus::Skip;
        rep.hypothesis = "lambda below threshold";
        return rep;
    }
    double xs = d.perron.vector[d.u_star];
    if (!(d.perron.vector[q.vertex] < (1.0 - q.alpha) * xs)) {
        rep.status = CheckStatus::Skip;
        rep.hypothesis = "weight gap x_j < (1-alpha) x_u* not met";
        return rep;
    }
    rep.hypothesis = "met";
    int du = d.d_u(q.vertex, g);
    rep.lhs = d.e_w;
    rep.rhs = d.e_u_plus - d.U_plus.count() + slack - q.alpha * (in_w ? du : du - 1);
    rep.status = rep.lhs < rep.rhs ? CheckStatus::Pass : CheckStatus::Fail;
    return rep;
}

}  // namespace spex
