#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spex/families.hpp"
#include "spex/forbidden.hpp"
#include "spex/partitions.hpp"
#include "spex/poly.hpp"
#include "spex/spectral.hpp"

using namespace spex;

TEST_CASE("book graphs") {
    CHECK(canonical_form(book_graph(3)) == canonical_form(complete(3)));

    Graph b9 = book_graph(9);
    CHECK(b9.n() == 6);
    CHECK(b9.m() == 9);
    CHECK(b9.degree(0) == 5);

    CHECK(book_graph(59).n() == 31);

    CHECK_THROWS_WITH_AS(book_graph(8), doctest::Contains("odd"), std::invalid_argument);
    CHECK_THROWS_AS(book_graph(1), std::invalid_argument);
    CHECK_THROWS_WITH_AS(book_graph(127), doctest::Contains("polynomial"),
                         std::invalid_argument);  // 65 vertices
}

TEST_CASE("theorem extremal graphs") {
    Graph t5 = theorem_extremal(5);
    CHECK(t5.n() == 5);
    CHECK(t5.m() == 5);

    Graph t9 = theorem_extremal(9);
    CHECK(t9.n() == 7);
    CHECK(t9.m() == 9);
    CHECK(t9.degree(0) == t9.n() - 1);  // apex

    CHECK_THROWS_AS(theorem_extremal(10), std::invalid_argument);
    CHECK_THROWS_AS(theorem_extremal(3), std::invalid_argument);
}

TEST_CASE("s_minus graphs") {
    Graph s4 = s_minus(4);
    CHECK(s4.n() == 4);
    CHECK(s4.m() == 4);
    // one page keeps both spine edges, the other lost one
    Graph expect = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {0, 3}, {1, 3}});
    CHECK(canonical_form(s4) == canonical_form(expect));

    CHECK(is_h43_free(s_minus(10)));
    CHECK_THROWS_AS(s_minus(7), std::invalid_argument);

    double lam = spectral_radius(s_minus(52)).lambda;
    CHECK(std::fabs(lam - largest_real_root(even_quartic(52))) < 1e-8);
}

TEST_CASE("family specs carry the derived counts") {
    auto b = family_spec(FamilyKind::Book, 59);
    CHECK(b.vertex_count == 31);
    CHECK(b.r == 29);
    auto t = family_spec(FamilyKind::TheoremExtremal, 59);
    CHECK(t.r == 28);
    CHECK(t.t == 2);
    CHECK(t.vertex_count == 32);
    auto s = family_spec(FamilyKind::SMinus, 52);
    CHECK(s.vertex_count == 28);
}

TEST_CASE("quartics and bounds") {
    CHECK(theorem_quartic(59).to_string() == "x^4 - 59x^2 - 56x + 56");
    CHECK(even_quartic(52).to_string() == "x^4 - 52x^2 - 50x + 25");
    CHECK(book_lambda(9) == doctest::Approx((1.0 + std::sqrt(33.0)) / 2.0).epsilon(1e-14));
    CHECK(threshold(58, 7) == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(threshold(9, 3) == doctest::Approx(book_lambda(9)).epsilon(1e-14));
    CHECK_THROWS_AS(threshold(9, 4), std::invalid_argument);
    CHECK_THROWS_AS(even_quartic(9), std::invalid_argument);
}

TEST_CASE("the t = 2 member recovers the theorem quartic") {
    for (long m = 7; m <= 201; m += 2) CHECK(apex_star_quartic(m, 2) == theorem_quartic(m));
    CHECK(apex_star_quartic(59, 4).to_string() == "x^4 - 59x^2 - 54x + 108");
}

TEST_CASE("apex-star family graphs") {
    CHECK(canonical_form(apex_star_family(9, 2)) == canonical_form(theorem_extremal(9)));
    Graph g = apex_star_family(21, 4);
    CHECK(g.m() == 21);
    CHECK(is_h43_free(g));
    CHECK_THROWS_AS(apex_star_family(9, 3), std::invalid_argument);
    CHECK_THROWS_AS(apex_star_family(9, 8), std::invalid_argument);  // r would be empty
}

TEST_CASE("satellite book graphs and their quotient") {
    Graph g = satellite_book(19, 4);
    CHECK(g.m() == 19);
    CHECK(g.n() == 10);
    CHECK(is_equitable(g, satellite_book_partition(19, 4)));

    // s with an empty plain-page block must be rejected
    CHECK_THROWS_WITH_AS(satellite_book(13, 4), doctest::Contains("plain-page"),
                         std::invalid_argument);
    CHECK_THROWS_AS(satellite_book(19, 1), std::invalid_argument);
}

TEST_CASE("characteristic quartics equal the exact quotient determinants") {
    for (long m : {19L, 59L, 61L, 101L})
        for (long t = 2; t <= 8 && m - t - 1 >= 2; t += 2)
            CHECK(char_poly(apex_star_quotient(m, t)) == apex_star_quartic(m, t));

    for (long m : {19L, 31L, 59L, 101L})
        for (long s = 2; 3 * s + 3 <= m; s += 2)
            if ((m - s - 1) % 2 == 0)
                CHECK(char_poly(satellite_book_quotient(m, s)) == satellite_book_quartic(m, s));
}

TEST_CASE("satellite quartic is positive past the threshold root") {
    for (long m : {59L, 79L, 99L}) {
        for (long s = 2; 3 * s + 3 <= m; s += 2) {
            if ((m - s - 1) % 2 != 0) continue;
            Poly f = satellite_book_quartic(m, s);
            double edge = threshold(m, 7);
            for (int i = 1; i <= 40; ++i) {
                double x = edge + i * 0.25;
                CHECK(f.eval(x) > 0.0);
            }
        }
    }
}

TEST_CASE("difference identity between family quartics") {
    auto xs = std::vector<double>{0.5, 1.0, 2.0, 5.0, 10.0, 15.0};
    auto rep = check_family_difference_identity(59, 6, xs);
    CHECK(rep.exact);
    CHECK(rep.grid_positive);
    CHECK(rep.detail == "difference = 2x + 48");

    for (long m = 9; m <= 201; m += 2)
        for (long t = 6; t <= m - 3; t += 2)
            CHECK(check_family_difference_identity(m, t, {}).exact);

    // t = 4 differences away to zero
    auto zero = check_family_difference_identity(33, 4, xs);
    CHECK(zero.exact);
    CHECK(zero.detail == "difference = 0");
}

TEST_CASE("factorization identity of the t = 4 quartic") {
    auto xs = std::vector<double>{8.0 + 1e-6, 9.0, 12.0, 20.0};
    auto rep = check_factorization_identity(58, xs);
    CHECK(rep.exact);
    CHECK(rep.grid_positive);
    CHECK(apex_star_quartic(58, 4).to_string() == "x^4 - 58x^2 - 53x + 106");

    for (long m = 10; m <= 500; ++m) CHECK(check_factorization_identity(m, {}).exact);
}

TEST_CASE("largest quartic root clears the gap-7 threshold") {
    for (long m : {6L, 7L, 20L, 58L, 59L, 121L, 500L}) {
        double root = largest_real_root(theorem_quartic(m));
        CHECK(root > threshold(m, 7));
    }
}

TEST_CASE("families are H(4,3)-free") {
    for (long m : {7L, 9L, 11L}) {
        CHECK_FALSE(brute_force_contains(book_graph(m), h_l3(4)));
        CHECK_FALSE(brute_force_contains(theorem_extremal(m), h_l3(4)));
    }
    for (long m : {8L, 10L}) CHECK_FALSE(brute_force_contains(s_minus(m), h_l3(4)));
    for (long m : {59L, 121L}) {
        CHECK(is_h43_free(book_graph(m)));
        CHECK(is_h43_free(theorem_extremal(m)));
    }
    CHECK(is_h43_free(s_minus(120)));
}

TEST_CASE("edge-count contracts across the families") {
    for (long m = 3; m <= 121; m += 2) CHECK(book_graph(m).m() == m);
    for (long m = 5; m <= 121; m += 2) CHECK(theorem_extremal(m).m() == m);
    for (long m = 4; m <= 120; m += 2) CHECK(s_minus(m).m() == m);
}
