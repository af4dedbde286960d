#pragma once

#include <span>
#include <string>
#include <vector>

#include "spex/graph.hpp"
#include "spex/poly.hpp"
#include "spex/spectral.hpp"

namespace spex {

enum class CheckStatus { Pass, Fail, Skip, Warn };
std::string to_string(CheckStatus s);

/// One row of the check-report CSV: graph6, m, check id, hypothesis status,
/// lhs, rhs, margin, status.
struct CheckRow {
    std::string graph6;
    int m = 0;
    std::string check_id;
    std::string hypothesis;  // "met", or why the check was skipped
    double lhs = 0, rhs = 0, margin = 0;
    CheckStatus status = CheckStatus::Skip;
};
std::string check_csv_header();
std::string to_csv(const CheckRow& row);

// -- quotient matrices ---------------------------------------------------------

struct QuotientSpec {
    std::vector<VertexSet> blocks;
    std::vector<std::vector<double>> matrix;  // average row sums per block pair
    bool equitable = false;
};

bool is_equitable(const Graph& g, std::span<const VertexSet> blocks);
QuotientSpec quotient_matrix(const Graph& g, std::span<const VertexSet> blocks);

struct QuotientCheck {
    double lambda_graph = 0;
    double lambda_quotient = 0;
    double deviation = 0;
    bool pass = false;
};

/// For an equitable partition of a connected graph the quotient's largest
/// eigenvalue equals the spectral radius; measures the deviation. The
/// quotient eigenvalue comes from the exact characteristic polynomial.
/// Rejects non-equitable partitions and disconnected graphs.
QuotientCheck quotient_spectral_check(const Graph& g, std::span<const VertexSet> blocks,
                                      double tol, const PowerOptions& opts = {});

// -- decomposition around a maximum-weight vertex ------------------------------

/// U = N(u*), W = V \ (U + u*), U0 = U-vertices with no neighbour in U,
/// U+ = U \ U0, for u* a maximum-Perron-weight vertex (lowest index on ties).
struct NeighborhoodDecomposition {
    int u_star = -1;
    VertexSet U, W, U0, U_plus;
    int e_u_plus = 0;  // e(U+); equals e(U) since U0 spans no edges
    int e_uw = 0;      // e(U, W)
    int e_w = 0;       // e(W)
    SpectralResult perron;

    int d_u(int v, const Graph& g) const { return (g.adj(v) & U).count(); }
};

NeighborhoodDecomposition neighborhood_decomposition(const Graph& g,
                                                     const PowerOptions& opts = {});

/// Checks the counting identity m = |U| + e(U+) + e(U,W) + e(W) exactly, and
/// the three eigenvector identities around u* to the given tolerance.
struct IdentityReport {
    bool counting_exact = false;
    double dev_weight_sum = 0;      // lambda x*  =  sum over U
    double dev_square = 0;          // lambda^2 x*
    double dev_square_minus = 0;    // (lambda^2 - lambda) x*
    double tol = 0;
    bool pass = false;
};
IdentityReport check_eigen_identities(const Graph& g, const NeighborhoodDecomposition& d,
                                      double tol);

// -- local structure of H(4,3)-free graphs -------------------------------------

/// For every vertex u whose neighbourhood spans >= 7 edges, each non-trivial
/// component of G[N(u)] must be a star. Input must be H(4,3)-free (checked).
/// Returns the list of violations (empty on pass).
struct StarViolation {
    int vertex = -1;
    std::string what;
};
std::vector<StarViolation> star_neighborhood_check(const Graph& g);

// -- edge relocation ------------------------------------------------------------

/// Moves the edges {v,x} for x in moved over to {u,x}. Requires a connected
/// graph, moved subset of N(v) \ N(u), u != v, and u,v outside moved; all
/// violations are itemized in the thrown message.
Graph relocate_edges(const Graph& g, int u, int v, VertexSet moved);

/// If x_u >= x_v under the Perron vector, relocation must strictly increase
/// the spectral radius. Below-margin increases are flagged Warn for manual
/// review; an unmet weight hypothesis yields Skip, not failure.
struct RelocationReport {
    CheckStatus status = CheckStatus::Skip;
    double lambda_before = 0, lambda_after = 0;
    std::string reason;
};
RelocationReport check_relocation_increases_lambda(const Graph& g, int u, int v,
                                                   VertexSet moved, double margin = 1e-10,
                                                   const PowerOptions& opts = {});

// -- edge-count bounds under a weight gap ---------------------------------------

/// Two bound variants: Gap5 needs lambda > (1+sqrt(4m-5))/2 and grants
/// slack 3/2; Gap7 needs lambda > (1+sqrt(4m-7))/2 and grants slack 2.
enum class EdgeBoundVariant { Gap5, Gap7 };

struct WeightGapQuery {
    double alpha = 0;  // in (0,1); hypothesis is x_j < (1-alpha) x_{u*}
    int vertex = -1;   // v_j, must lie in W or U+
    EdgeBoundVariant variant = EdgeBoundVariant::Gap7;
};

/// e(W) < e(U) - |U+| + slack - alpha * d_U(v_j)   (v_j in W), or
/// e(W) < e(U) - |U+| + slack - alpha * (d_U(v_j) - 1)  (v_j in U+).
/// Hypothesis failures return Skip so sweeps report honest coverage.
struct EdgeBoundReport {
    CheckStatus status = CheckStatus::Skip;
    double lhs = 0, rhs = 0;
    std::string check_id;
    std::string hypothesis;
};
EdgeBoundReport check_edge_count_bound(const Graph& g, const NeighborhoodDecomposition& d,
                                       const WeightGapQuery& q);

/// Header comment naming the hypothesis set the edge-bound checker enforces
/// (connectivity + spectral threshold + weight gap), for CSV outputs.
std::string edge_bound_assumption_note();

}  // namespace spex
