#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qzeta/rational.hpp"

namespace qzeta {

/// Truncated power series in a^2: coeffs()[k] multiplies a^(2k), k = 0..order().
/// All ring operations are closed at the truncation order.
class SeriesInA {
public:
    /// The zero series of order K.
    explicit SeriesInA(std::size_t order);
    SeriesInA(std::size_t order, std::initializer_list<Rational> leading);
    SeriesInA(std::size_t order, std::vector<Rational> coeffs);

    static SeriesInA constant(std::size_t order, const Rational& c);
    /// The series c0 + c1 * a^2.
    static SeriesInA linear(std::size_t order, const Rational& c0, const Rational& c1);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }

    /// Sum of coeffs[k] * a^(2k).
    Rational evaluate(const Rational& a) const;

    /// Multiplicative inverse; throws DomainError if the constant term is zero.
    SeriesInA inverse() const;

    SeriesInA& operator+=(const SeriesInA& o);
    SeriesInA& operator-=(const SeriesInA& o);
    SeriesInA& operator*=(const SeriesInA& o);
    SeriesInA& operator/=(const SeriesInA& o);
    SeriesInA& operator*=(const Rational& c);

    friend SeriesInA operator+(SeriesInA x, const SeriesInA& y) { return x += y; }
    friend SeriesInA operator-(SeriesInA x, const SeriesInA& y) { return x -= y; }
    friend SeriesInA operator*(SeriesInA x, const SeriesInA& y) { return x *= y; }
    friend SeriesInA operator/(SeriesInA x, const SeriesInA& y) { return x /= y; }
    friend SeriesInA operator*(SeriesInA x, const Rational& c) { return x *= c; }
    friend SeriesInA operator*(const Rational& c, SeriesInA x) { return x *= c; }

    friend bool operator==(const SeriesInA&, const SeriesInA&) = default;

private:
    void require_same_order(const SeriesInA& o, const char* op) const;

    std::vector<Rational> coeffs_;
};

enum class SeriesOp { Add, Mul, Div };

/// Dispatching form of the truncated ring operations.
SeriesInA series_arith(const SeriesInA& lhs, const SeriesInA& rhs, SeriesOp op);

}  // namespace qzeta
