#pragma once

#include "qzeta/rational.hpp"

namespace qzeta {

enum class Regime { Inside, Outside };  // |q| < 1, |q| > 1

const char* to_string(Regime r) noexcept;

/// A fixed exact value of q together with the accuracy policy every
/// summation routine follows.
class QContext {
public:
    /// Throws PreconditionError for q in {0, 1, -1}, digits < 1 or max_terms < 1.
    QContext(Rational q, int target_digits = 30, int max_terms = 20000, unsigned working_bits = 0);

    const Rational& q() const noexcept { return q_; }
    Regime regime() const noexcept { return regime_; }
    int target_digits() const noexcept { return target_digits_; }
    int max_terms() const noexcept { return max_terms_; }
    /// 0 means partial sums are kept exactly; otherwise the running sum is
    /// rounded to a multiple of 2^-working_bits after every term.
    unsigned working_bits() const noexcept { return working_bits_; }

    /// 10^-target_digits.
    Rational tolerance() const { return Rational::pow10(-target_digits_); }

    /// q^e for any integer e.
    Rational power(long long e) const { return q_.pow(e); }

    QContext with_q(Rational q) const { return QContext(std::move(q), target_digits_, max_terms_, working_bits_); }
    QContext with_digits(int digits) const { return QContext(q_, digits, max_terms_, working_bits_); }
    QContext with_max_terms(int n) const { return QContext(q_, target_digits_, n, working_bits_); }
    QContext with_working_bits(unsigned bits) const { return QContext(q_, target_digits_, max_terms_, bits); }

    /// Throws PreconditionError unless 0 < q < 1.
    void require_unit_interval(const char* who) const;
    /// Throws PreconditionError unless |q| > 1.
    void require_outside(const char* who) const;

private:
    Rational q_;
    Regime regime_;
    int target_digits_;
    int max_terms_;
    unsigned working_bits_;
};

}  // namespace qzeta
