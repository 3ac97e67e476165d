#include "qzeta/rational.hpp"

#include <cctype>
#include <ostream>

#include "qzeta/errors.hpp"

namespace qzeta {

Rational::Rational(long long v) {
    mpz_class z;
    z = static_cast<long>(v);
    v_ = mpq_class(z);
}

Rational::Rational(long long num, long long den) {
    if (den == 0) throw DomainError("Rational: zero denominator");
    v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    v_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw PreconditionError("not an integer: '" + std::string(s) + "'");
    mpz_class z(std::string(s), 10);
    return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw PreconditionError("empty rational literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash));
        mpz_class den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw PreconditionError("rational literal with zero denominator");
        return Rational(mpq_class(num, den));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool neg = !int_part.empty() && int_part.front() == '-';
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
        if (int_part.empty()) int_part = "0";
        if (!all_digits(int_part) || (!frac.empty() && !all_digits(frac)))
            throw PreconditionError("malformed decimal literal: '" + std::string(text) + "'");
        mpz_class whole(std::string(int_part), 10);
        mpz_class f = frac.empty() ? mpz_class(0) : mpz_class(std::string(frac), 10);
        Rational r = Rational(whole) + Rational(f) * pow10(-static_cast<int>(frac.size()));
        return neg ? -r : r;
    }
    return Rational(parse_integer(text));
}

Rational Rational::pow10(int e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(mpq_class(mpz_class(1), p)) : Rational(p);
}

Rational Rational::pow2(int e) {
    mpz_class p(1);
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
    return e < 0 ? Rational(mpq_class(mpz_class(1), p)) : Rational(p);
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    mpq_class r(num, den);
    return Rational(r);  // already canonical up to sign handling
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::round_to_bits(unsigned bits) const {
    // round(v * 2^bits) / 2^bits
    mpz_class scaled = v_.get_num();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits);
    mpz_class den = v_.get_den();
    mpz_class twice = 2 * scaled + (sign() < 0 ? -den : den);
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
    mpz_class scale(1);
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
    return Rational(mpq_class(q, scale));
}

std::string Rational::to_decimal(int digits) const {
    if (digits < 0) digits = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class num = ::abs(v_.get_num()) * scale;
    const mpz_class& den = v_.get_den();
    // round half away from zero
    mpz_class q;
    mpz_class twice = 2 * num + den;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
    std::string s = q.get_str(10);
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) - s.size() + 1, '0');
    std::string out;
    if (sign() < 0 && q != 0) out.push_back('-');
    out.append(s, 0, s.size() - static_cast<std::size_t>(digits));
    if (digits > 0) {
        out.push_back('.');
        out.append(s, s.size() - static_cast<std::size_t>(digits), std::string::npos);
    }
    return out;
}

std::string Rational::to_string() const { return v_.get_str(10); }

std::string Rational::to_scientific(int significant) const {
    if (is_zero()) return "0";
    if (significant < 1) significant = 1;
    const mpf_class f(v_, 64 + 4 * static_cast<unsigned>(significant));
    mp_exp_t exp = 0;
    std::string m = f.get_str(exp, 10, static_cast<std::size_t>(significant));
    std::string out;
    if (m.front() == '-') {
        out += '-';
        m.erase(0, 1);
    }
    out += m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    const long e = static_cast<long>(exp) - 1;
    if (e != 0) out += "e" + std::to_string(e);
    return out;
}

std::size_t Rational::bit_size() const {
    return mpz_sizeinbase(v_.get_num_mpz_t(), 2) + mpz_sizeinbase(v_.get_den_mpz_t(), 2);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

int agreeing_digits(const Rational& difference, int cap) {
    const Rational d = difference.abs();
    if (d.is_zero()) return cap;
    int digits = 0;
    Rational bound = 1;
    const Rational tenth(1, 10);
    while (digits < cap && d < bound * tenth) {
        bound *= tenth;
        ++digits;
    }
    return digits;
}

}  // namespace qzeta
