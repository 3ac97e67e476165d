#include "qzeta/poly.hpp"

#include <sstream>

#include "qzeta/errors.hpp"

namespace qzeta {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, int d) {
    if (d < 0) throw PreconditionError("Poly::monomial: negative degree");
    std::vector<Rational> v(static_cast<std::size_t>(d) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<std::size_t>(i)];
}

Rational Poly::operator()(const Rational& y) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * y + *it;
    return r;
}

Poly Poly::scaled_arg(const Rational& c) const {
    std::vector<Rational> v = c_;
    Rational p = 1;
    for (auto& e : v) {
        e *= p;
        p *= c;
    }
    return Poly(std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    for (auto& e : c_) e *= c;
    trim();
    return *this;
}

std::string Poly::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        const Rational m = c.abs();
        const bool unit = m == Rational(1);
        if (i == 0 || !unit) os << m.to_string();
        if (i == 0) continue;
        if (!unit) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
    std::vector<Rational> rem = a.coeffs();
    const Rational inv = b.leading().inverse();
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        const Rational f = rem[static_cast<std::size_t>(i)] * inv;
        if (f.is_zero()) continue;
        quot[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(j);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    return (divmod(a, gcd(a, b)).first * b).monic();
}

BiPoly::BiPoly(std::initializer_list<std::pair<const std::pair<int, int>, Rational>> terms) {
    for (const auto& [ij, c] : terms) add_term(ij, c);
}

BiPoly BiPoly::constant(const Rational& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Rational& c, int i, int j) {
    if (i < 0 || j < 0) throw PreconditionError("BiPoly::monomial: negative exponent");
    BiPoly p;
    p.add_term({i, j}, c);
    return p;
}

void BiPoly::add_term(std::pair<int, int> ij, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(ij, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Rational BiPoly::operator()(const Rational& x, const Rational& y) const {
    Rational r = 0;
    for (const auto& [ij, c] : t_) r += c * x.pow(ij.first) * y.pow(ij.second);
    return r;
}

Poly BiPoly::at_x(const Rational& x) const {
    int deg = -1;
    for (const auto& [ij, c] : t_) deg = std::max(deg, ij.second);
    std::vector<Rational> v(static_cast<std::size_t>(deg + 1), Rational(0));
    for (const auto& [ij, c] : t_) v[static_cast<std::size_t>(ij.second)] += c * x.pow(ij.first);
    return Poly(std::move(v));
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [ij, c] : o.t_) add_term(ij, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [ij, c] : o.t_) add_term(ij, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
    BiPoly r;
    for (const auto& [a, ca] : t_)
        for (const auto& [b, cb] : o.t_) r.add_term({a.first + b.first, a.second + b.second}, ca * cb);
    *this = std::move(r);
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [ij, v] : t_) v *= c;
    return *this;
}

BiPoly pow(BiPoly a, int e) {
    if (e < 0) throw PreconditionError("BiPoly pow: negative exponent");
    BiPoly r = BiPoly::constant(1);
    for (; e > 0; --e) r *= a;
    return r;
}

Rational RationalFunction2::operator()(const Rational& x, const Rational& y) const {
    const Rational d = den(x, y);
    if (d.is_zero())
        throw DomainError("rational function: denominator vanishes at x=" + x.to_string() + ", y=" + y.to_string());
    return num(x, y) / d;
}

}  // namespace qzeta
