#include "spex/families.hpp"

#include <cmath>
#include <stdexcept>

namespace spex {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void require_fits(long vertices) {
    require(vertices <= Graph::kMaxVertices,
            "family needs " + std::to_string(vertices) + " vertices; explicit graphs stop at " +
                std::to_string(Graph::kMaxVertices) +
                " (use the polynomial interface for larger m)");
}

}  // namespace

FamilySpec family_spec(FamilyKind kind, long m) {
    FamilySpec s{kind, m, 0, 0, 0};
    switch (kind) {
        case FamilyKind::Book:
            require(m >= 3 && m % 2 == 1, "book graph: m must be odd and >= 3");
            s.r = (m - 1) / 2;  // pages
            s.vertex_count = (m + 3) / 2;
            break;
        case FamilyKind::TheoremExtremal:
            require(m >= 5 && m % 2 == 1, "theorem extremal graph: m must be odd and >= 5");
            s.r = (m - 3) / 2;
            s.t = 2;
            s.vertex_count = s.r + 4;  // apex + star(r) + 2 isolated
            break;
        case FamilyKind::SMinus:
            require(m >= 4 && m % 2 == 0, "s_minus graph: m must be even and >= 4");
            s.r = m / 2;  // pages before deletion
            s.vertex_count = m / 2 + 2;
            break;
    }
    return s;
}

Graph book_graph(long m) {
    auto spec = family_spec(FamilyKind::Book, m);
    require_fits(spec.vertex_count);
    return join(complete(2), k_copies(complete(1), static_cast<int>(spec.r)));
}

Graph theorem_extremal(long m) { return apex_star_family(m, 2); }

Graph s_minus(long m) {
    auto spec = family_spec(FamilyKind::SMinus, m);
    require_fits(spec.vertex_count);
    Graph full = join(complete(2), k_copies(complete(1), static_cast<int>(spec.r)));
    return full.without_edge(0, 2);  // page 2 keeps only spine vertex 1
}

Graph apex_star_family(long m, long t) {
    require(t >= 2 && t % 2 == 0, "apex_star_family: t must be even and >= 2");
    require(m - t - 1 >= 2 && (m - t - 1) % 2 == 0,
            "apex_star_family: need 2r = m-t-1 even and >= 2");
    long r = (m - t - 1) / 2;
    require_fits(r + t + 2);
    Graph inner = disjoint_union(star(static_cast<int>(r)),
                                 k_copies(complete(1), static_cast<int>(t)));
    return join(complete(1), inner);
}

std::vector<VertexSet> apex_star_partition(long m, long t) {
    long r = (m - t - 1) / 2;
    std::vector<VertexSet> blocks(4);
    blocks[0].add(0);  // apex
    blocks[1].add(1);  // star center
    for (long i = 0; i < r; ++i) blocks[2].add(static_cast<int>(2 + i));
    for (long i = 0; i < t; ++i) blocks[3].add(static_cast<int>(2 + r + i));
    return blocks;
}

std::vector<std::vector<Rational>> apex_star_quotient(long m, long t) {
    Rational r = Rational(m - t - 1) / 2;
    return {{0, 1, r, Rational(t)},
            {1, 0, r, 0},
            {1, 1, 0, 0},
            {1, 0, 0, 0}};
}

Graph satellite_book(long m, long s) {
    require(s >= 2, "satellite_book: need s >= 2");
    require((m - s - 1) % 2 == 0, "satellite_book: need m - s - 1 even");
    long r = (m - s - 1) / 2;
    require(r - s >= 1, "satellite_book: need r > s (nonempty plain-page block)");
    require_fits(r + 3);
    std::vector<Edge> e = {{0, 1}};
    for (long i = 0; i < r; ++i) {
        e.emplace_back(0, static_cast<int>(2 + i));
        e.emplace_back(1, static_cast<int>(2 + i));
    }
    int w = static_cast<int>(r + 2);
    for (long i = 0; i < s; ++i) e.emplace_back(w, static_cast<int>(2 + i));
    return Graph::from_edge_list(static_cast<int>(r + 3), e);
}

std::vector<VertexSet> satellite_book_partition(long m, long s) {
    long r = (m - s - 1) / 2;
    std::vector<VertexSet> blocks(4);
    blocks[0].add(0).add(1);
    for (long i = 0; i < s; ++i) blocks[1].add(static_cast<int>(2 + i));
    for (long i = s; i < r; ++i) blocks[2].add(static_cast<int>(2 + i));
    blocks[3].add(static_cast<int>(r + 2));
    return blocks;
}

std::vector<std::vector<Rational>> satellite_book_quotient(long m, long s) {
    Rational v3 = Rational(m - 3 * s - 1) / 2;
    return {{1, Rational(s), v3, 0},
            {2, 0, 0, 1},
            {2, 0, 0, 0},
            {0, Rational(s), 0, 0}};
}

Poly theorem_quartic(long m) {
    return Poly(std::vector<Rational>{Rational(m - 3), Rational(-(m - 3)), Rational(-m),
                                      Rational(0), Rational(1)});
}

Poly even_quartic(long m) {
    require(m % 2 == 0, "even_quartic: m must be even");
    return Poly(std::vector<Rational>{Rational(m) / 2 - 1, Rational(-(m - 2)), Rational(-m),
                                      Rational(0), Rational(1)});
}

Poly apex_star_quartic(long m, long t) {
    // coefficients stay rational for any parity; only the graph needs m-t-1 even
    Rational lin(m - t - 1);
    return Poly(std::vector<Rational>{Rational(t) * lin / 2, -lin, Rational(-m), Rational(0),
                                      Rational(1)});
}

Poly satellite_book_quartic(long m, long s) {
    return Poly(std::vector<Rational>{Rational(-3 * s * s + m * s - s), Rational(s),
                                      Rational(1 - m), Rational(-1), Rational(1)});
}

Poly threshold_quadratic(long m) {
    return Poly(std::vector<Rational>{Rational(-(m - 2)), Rational(-1), Rational(1)});
}

double book_lambda(long m) { return (1.0 + std::sqrt(4.0 * m - 3.0)) / 2.0; }

double threshold(long m, int k) {
    if (k != 3 && k != 5 && k != 7)
        throw std::invalid_argument("threshold: k must be 3, 5 or 7");
    return (1.0 + std::sqrt(4.0 * m - k)) / 2.0;
}

QuarticIdentityReport check_family_difference_identity(long m, long t,
                                                       std::span<const double> xs) {
    QuarticIdentityReport rep;
    Poly diff = apex_star_quartic(m, t) - apex_star_quartic(m, 4);
    Poly expect(std::vector<Rational>{Rational(t * (m - t - 1) - 4 * (m - 5)) / 2,
                                      Rational(t - 4)});
    rep.exact = (diff == expect);
    if (t >= 6) {
        bool first = true;
        for (double x : xs) {
            if (x <= 0) continue;
            double v = diff.eval(x);
            if (first || v < rep.min_grid_value) {
                rep.min_grid_value = v;
                first = false;
            }
            if (v <= 0) rep.grid_positive = false;
        }
    }
    rep.detail = "difference = " + diff.to_string();
    return rep;
}

QuarticIdentityReport check_factorization_identity(long m, std::span<const double> xs) {
    QuarticIdentityReport rep;
    Poly f4 = apex_star_quartic(m, 4);
    Poly shell(std::vector<Rational>{Rational(-1), Rational(1), Rational(1)});  // x^2 + x - 1
    Poly remainder(std::vector<Rational>{Rational(m - 8), Rational(2)});        // 2x + (m-8)
    Poly rebuilt = shell * threshold_quadratic(m) + remainder;
    rep.exact = (f4 == rebuilt);
    double root = (1.0 + std::sqrt(4.0 * m - 7.0)) / 2.0;
    rep.min_grid_value = 0;
    bool first = true;
    for (double x : xs) {
        if (x <= root) continue;
        double v = f4.eval(x);
        if (first || v < rep.min_grid_value) {
            rep.min_grid_value = v;
            first = false;
        }
        if (v <= 0) rep.grid_positive = false;
    }
    rep.detail = "quartic = (x^2 + x - 1)(" + threshold_quadratic(m).to_string() + ") + " +
                 remainder.to_string();
    return rep;
}

}  // namespace spex
