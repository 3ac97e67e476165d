#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qzeta {

/// Exact arbitrary-precision rational, always in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long long v);       // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den);
    explicit Rational(const mpz_class& v) : v_(v) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p/r", "p" or a finite decimal such as "-0.125".
    static Rational parse(std::string_view text);

    /// 10^e for any integer e.
    static Rational pow10(int e);
    /// 2^e for any integer e.
    static Rational pow2(int e);

    const mpq_class& raw() const noexcept { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    int sign() const noexcept { return sgn(v_); }
    bool is_zero() const noexcept { return sign() == 0; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational inverse() const;
    /// Integer power; negative exponents require a nonzero value.
    Rational pow(long long e) const;

    /// Nearest multiple of 2^-bits (ties away from zero).
    Rational round_to_bits(unsigned bits) const;

    /// Fixed-point rendering with exactly `digits` digits after the point,
    /// rounded to nearest (ties away from zero).
    std::string to_decimal(int digits) const;
    /// Rounded scientific rendering such as "3.14e-41" ("0" for zero).
    std::string to_scientific(int significant = 3) const;
    /// "p/r" (or "p" when the denominator is 1).
    std::string to_string() const;
    /// Total bit length of numerator and denominator.
    std::size_t bit_size() const;
    double to_double() const { return v_.get_d(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.abs(); }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Largest d >= 0 (capped at `cap`) with |x| < 10^-d; `cap` when x == 0.
int agreeing_digits(const Rational& difference, int cap = 10000);

}  // namespace qzeta
