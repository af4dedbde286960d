#include "spex/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace spex {

double to_double(const Rational& q) { return q.get_d(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Poly::Poly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

Poly::Poly(std::initializer_list<long> ascending) {
    c_.reserve(ascending.size());
    for (long v : ascending) c_.emplace_back(v);
    trim();
}

Poly Poly::monomial(int degree, Rational coeff) {
    std::vector<Rational> c(degree + 1, Rational(0));
    c[degree] = std::move(coeff);
    return Poly(std::move(c));
}

const Rational& Poly::coeff(int i) const {
    static const Rational zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rational& s) const {
    Poly r(*this);
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly::eval(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(c));
}

std::vector<double> Poly::coeffs_double() const {
    std::vector<double> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i].get_d();
    return out;
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& a = c_[i];
        if (a == 0) continue;
        Rational mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (!unit || i == 0) os << mag.get_str();
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

Poly char_poly(const std::vector<std::vector<Rational>>& a) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("char_poly: matrix not square");
    // Faddeev-LeVerrier: M_1 = A, c_k = -tr(A M_k)/k ... coefficients of
    // x^n + c_1 x^{n-1} + ... + c_n.
    std::vector<Rational> coef(n + 1, Rational(0));
    coef[n] = 1;
    std::vector<std::vector<Rational>> mk(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) mk[i][i] = 1;  // M_0 = I
    Rational ck(0);
    for (int k = 1; k <= n; ++k) {
        // M_k = A * (M_{k-1} + c_{k-1} I); with M_0 = I, c_0 folded in below
        std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, Rational(0)));
        for (int i = 0; i < n; ++i) mk[i][i] += ck;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (a[i][l] == 0) continue;
                for (int j = 0; j < n; ++j) next[i][j] += a[i][l] * mk[l][j];
            }
        Rational tr(0);
        for (int i = 0; i < n; ++i) tr += next[i][i];
        ck = -tr / Rational(k);
        coef[n - k] = ck;
        mk = std::move(next);
    }
    return Poly(std::move(coef));
}

}  // namespace spex
