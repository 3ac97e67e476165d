#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qzeta/rational.hpp"

namespace qzeta {

/// Dense univariate polynomial with exact rational coefficients. The zero
/// polynomial has no coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

    static Poly constant(const Rational& c) { return Poly({c}); }
    /// c * y^d.
    static Poly monomial(const Rational& c, int d);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    /// Coefficient of y^i, zero outside the stored range.
    Rational coeff(int i) const;
    const Rational& leading() const { return c_.back(); }

    Rational operator()(const Rational& y) const;
    /// p(c y).
    Poly scaled_arg(const Rational& c) const;
    Poly monic() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend bool operator==(const Poly&, const Poly&) = default;

    std::string to_string(const char* var = "y") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder; throws DomainError on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);
Poly lcm(const Poly& a, const Poly& b);

/// Sparse polynomial in x and y: term (i, j) multiplies x^i y^j.
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(std::initializer_list<std::pair<const std::pair<int, int>, Rational>> terms);

    static BiPoly constant(const Rational& c);
    static BiPoly x() { return monomial(1, 1, 0); }
    static BiPoly y() { return monomial(1, 0, 1); }
    static BiPoly monomial(const Rational& c, int i, int j);

    bool is_zero() const noexcept { return t_.empty(); }
    const std::map<std::pair<int, int>, Rational>& terms() const noexcept { return t_; }

    Rational operator()(const Rational& x, const Rational& y) const;
    /// The univariate polynomial in y obtained by fixing x.
    Poly at_x(const Rational& x) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o);
    BiPoly& operator*=(const Rational& c);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
    friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
    friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }
    friend BiPoly operator+(BiPoly a, const Rational& c) { return a += constant(c); }
    friend BiPoly operator-(const Rational& c, const BiPoly& b) { return constant(c) -= b; }
    friend BiPoly pow(BiPoly a, int e);
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    void add_term(std::pair<int, int> ij, const Rational& c);
    std::map<std::pair<int, int>, Rational> t_;
};

/// num(x, y) / den(x, y).
struct RationalFunction2 {
    BiPoly num = BiPoly::constant(1);
    BiPoly den = BiPoly::constant(1);

    /// Throws DomainError when the denominator vanishes.
    Rational operator()(const Rational& x, const Rational& y) const;
};

}  // namespace qzeta
