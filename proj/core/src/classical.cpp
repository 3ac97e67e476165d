#include <string>

#include "qzeta/errors.hpp"
#include "qzeta/naive.hpp"

namespace qzeta {

namespace {

// arctan(1/x) = sum_k (-1)^k / ((2k+1) x^{2k+1}); alternating and decreasing,
// so the first omitted term bounds the error.
SumResult arctan_inverse(long x, const Rational& eps) {
    SumResult r;
    r.value = 0;
    r.rounding_bound = 0;
    const Rational inv_x2 = Rational(1, x) * Rational(1, x);
    Rational power(1, x);  // x^{-(2k+1)}
    for (long k = 0;; ++k) {
        const Rational term = power / Rational(2 * k + 1);
        if (term < eps) {
            r.tail_bound = term;
            return r;
        }
        r.value += (k % 2 == 0) ? term : -term;
        ++r.terms_used;
        power *= inv_x2;
    }
}

SumResult pi_squared_over_six(int digits) {
    const Rational eps = Rational::pow10(-(digits + 4));
    // pi = 16 atan(1/5) - 4 atan(1/239)
    const SumResult a5 = arctan_inverse(5, eps);
    const SumResult a239 = arctan_inverse(239, eps);
    const Rational pi = a5.value * 16 - a239.value * 4;
    const Rational dpi = a5.tail_bound * 16 + a239.tail_bound * 4;
    SumResult r;
    r.value = pi * pi / 6;
    r.terms_used = a5.terms_used + a239.terms_used;
    // |pi~^2 - pi^2| <= dpi (2 pi~ + dpi)
    r.tail_bound = dpi * (pi.abs() * 2 + dpi) / 6;
    r.rounding_bound = 0;
    return r;
}

SumResult markov_zeta3(int digits) {
    const Rational eps = Rational::pow10(-digits);
    SumResult r;
    r.value = 0;
    r.rounding_bound = 0;
    Rational central = 1;  // binom(2k, k)
    for (long k = 1;; ++k) {
        central = central * Rational(2 * (2 * k - 1)) / Rational(k);
        const Rational term = Rational(5, 2) / (Rational(k).pow(3) * central);
        if (term < eps) {
            r.tail_bound = term;
            return r;
        }
        r.value += (k % 2 == 1) ? term : -term;
        ++r.terms_used;
    }
}

}  // namespace

SumResult classical_zeta_oracle(int s, int digits) {
    if (digits < 1) throw PreconditionError("classical_zeta_oracle: digits must be >= 1");
    switch (s) {
        case 2: return pi_squared_over_six(digits);
        case 3: return markov_zeta3(digits);
        default:
            throw PreconditionError("classical_zeta_oracle: only s in {2, 3} supported, got " + std::to_string(s));
    }
}

}  // namespace qzeta
