#include "qzeta/series_in_a.hpp"

#include <string>

#include "qzeta/errors.hpp"

namespace qzeta {

SeriesInA::SeriesInA(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

SeriesInA::SeriesInA(std::size_t order, std::initializer_list<Rational> leading)
    : coeffs_(order + 1, Rational(0)) {
    std::size_t k = 0;
    for (const auto& c : leading) {
        if (k > order) break;
        coeffs_[k++] = c;
    }
}

SeriesInA::SeriesInA(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, Rational(0));
}

SeriesInA SeriesInA::constant(std::size_t order, const Rational& c) { return SeriesInA(order, {c}); }

SeriesInA SeriesInA::linear(std::size_t order, const Rational& c0, const Rational& c1) {
    return SeriesInA(order, {c0, c1});
}

Rational SeriesInA::evaluate(const Rational& a) const {
    const Rational a2 = a * a;
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * a2 + *it;
    return acc;
}

void SeriesInA::require_same_order(const SeriesInA& o, const char* op) const {
    if (o.order() != order())
        throw PreconditionError(std::string("SeriesInA ") + op + ": truncation orders differ (" +
                                std::to_string(order()) + " vs " + std::to_string(o.order()) + ")");
}

SeriesInA& SeriesInA::operator+=(const SeriesInA& o) {
    require_same_order(o, "add");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

SeriesInA& SeriesInA::operator-=(const SeriesInA& o) {
    require_same_order(o, "sub");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

SeriesInA& SeriesInA::operator*=(const SeriesInA& o) {
    require_same_order(o, "mul");
    const std::size_t n = coeffs_.size();
    std::vector<Rational> out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    return *this;
}

SeriesInA& SeriesInA::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

SeriesInA SeriesInA::inverse() const {
    if (coeffs_[0].is_zero()) throw DomainError("SeriesInA: inverse of a series with zero constant term");
    const std::size_t n = coeffs_.size();
    std::vector<Rational> inv(n, Rational(0));
    const Rational c0inv = coeffs_[0].inverse();
    inv[0] = c0inv;
    for (std::size_t k = 1; k < n; ++k) {
        Rational s = 0;
        for (std::size_t j = 1; j <= k; ++j) s += coeffs_[j] * inv[k - j];
        inv[k] = -s * c0inv;
    }
    return SeriesInA(order(), std::move(inv));
}

SeriesInA& SeriesInA::operator/=(const SeriesInA& o) {
    require_same_order(o, "div");
    return *this *= o.inverse();
}

SeriesInA series_arith(const SeriesInA& lhs, const SeriesInA& rhs, SeriesOp op) {
    switch (op) {
        case SeriesOp::Add: return lhs + rhs;
        case SeriesOp::Mul: return lhs * rhs;
        case SeriesOp::Div: return lhs / rhs;
    }
    throw PreconditionError("series_arith: unknown op");
}

}  // namespace qzeta
