#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace spex {

/// Exact rational scalar. GMP carries the arbitrary-precision arithmetic;
/// every polynomial identity in this library is checked coefficient-wise
/// over these, never in floating point.
using Rational = mpq_class;

double to_double(const Rational& q);
std::string to_string(const Rational& q);

/// Polynomial with exact rational coefficients, stored ascending by degree.
/// The zero polynomial has degree -1; otherwise the leading coefficient is
/// nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> ascending);
    Poly(std::initializer_list<long> ascending);

    static Poly monomial(int degree, Rational coeff = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& coeff(int i) const;  // 0 outside stored range
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const Rational& s) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Rational eval(const Rational& x) const;
    double eval(double x) const;
    Poly derivative() const;

    std::vector<double> coeffs_double() const;

    /// Human-readable form, descending powers: "x^4 - 59x^2 - 56x + 56".
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Characteristic polynomial det(xI - A) of a square rational matrix,
/// by the Faddeev-LeVerrier recurrence (exact).
Poly char_poly(const std::vector<std::vector<Rational>>& a);

}  // namespace spex
