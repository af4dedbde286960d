#pragma once

#include <span>
#include <string>
#include <vector>

#include "spex/graph.hpp"
#include "spex/poly.hpp"

namespace spex {

enum class FamilyKind { Book, TheoremExtremal, SMinus };

/// Parameter record for an extremal family member. Valid for any edge count
/// the parity rules allow; whether the member fits in an explicit Graph is a
/// separate question (vertex_count <= 64).
struct FamilySpec {
    FamilyKind kind;
    long m = 0;
    long r = 0;      // star size / page count, per family
    long t = 0;      // isolated-part size (TheoremExtremal has t = 2)
    long vertex_count = 0;
};

FamilySpec family_spec(FamilyKind kind, long m);  // validates parity and range

/// Book graph on m edges (m odd >= 3): K_2 joined to (m-1)/2 independent
/// vertices. Vertices 0,1 are the spine.
Graph book_graph(long m);

/// The m-edge extremal graph K_1 v (K_{1,(m-3)/2} u 2K_1), m odd >= 5.
/// Vertex 0 is the apex, 1 the star center.
Graph theorem_extremal(long m);

/// K_2 v (m/2)K_1 with one spine-page edge removed; m even >= 4.
Graph s_minus(long m);

/// K_1 v (K_{1,r} u tK_1) with 2r = m - t - 1; t even >= 2. t = 2 recovers
/// theorem_extremal(m).
Graph apex_star_family(long m, long t);
std::vector<VertexSet> apex_star_partition(long m, long t);  // {apex},{center},{leaves},{isolated}
std::vector<std::vector<Rational>> apex_star_quotient(long m, long t);

/// Book on spine {0,1} with r pages plus a satellite vertex adjacent to s of
/// the pages; m = 2r + s + 1, s even >= 2, r > s.
Graph satellite_book(long m, long s);
std::vector<VertexSet> satellite_book_partition(long m, long s);
std::vector<std::vector<Rational>> satellite_book_quotient(long m, long s);

// -- characteristic quartics and bounds --------------------------------------

/// x^4 - m x^2 - (m-3) x + (m-3); its largest root is the sharp bound for
/// odd-size H(4,3)-free graphs once the book graph is excluded.
Poly theorem_quartic(long m);

/// x^4 - m x^2 - (m-2) x + m/2 - 1, the even-size analogue (m even).
Poly even_quartic(long m);

/// Characteristic quartic of the apex_star_family quotient:
/// x^4 - m x^2 - (m-t-1) x + t(m-t-1)/2.
Poly apex_star_quartic(long m, long t);

/// Characteristic quartic of the satellite_book quotient:
/// x^4 - x^3 + (1-m) x^2 + s x - 3s^2 + ms - s.
Poly satellite_book_quartic(long m, long s);

/// x^2 - x - (m-2); its positive root is (1 + sqrt(4m-7))/2.
Poly threshold_quadratic(long m);

double book_lambda(long m);             // (1 + sqrt(4m-3))/2
double threshold(long m, int k);        // (1 + sqrt(4m-k))/2 for k in {3,5,7}

// -- exact polynomial identities ----------------------------------------------

struct QuarticIdentityReport {
    bool exact = false;          // coefficient-level identity over rationals
    bool grid_positive = true;   // sampled positivity claim, where applicable
    double min_grid_value = 0;
    std::string detail;
};

/// apex_star_quartic(m,t) - apex_star_quartic(m,4) == (t-4) x
/// + (t(m-t-1) - 4(m-5))/2, checked exactly; positivity sampled on xs for
/// t >= 6.
QuarticIdentityReport check_family_difference_identity(long m, long t,
                                                       std::span<const double> xs);

/// apex_star_quartic(m,4) == (x^2 + x - 1) * threshold_quadratic(m)
/// + 2x + (m-8), checked exactly; positivity sampled on xs (meaningful for
/// m >= 58 above the threshold root).
QuarticIdentityReport check_factorization_identity(long m, std::span<const double> xs);

}  // namespace spex
