#pragma once

#include "qzeta/context.hpp"
#include "qzeta/rational.hpp"
#include "qzeta/series_in_a.hpp"

namespace qzeta {

/// [n]_q = (1 - q^n) / (1 - q), n >= 1.
Rational q_number(long long n, const QContext& ctx);

/// (x; q)_n = prod_{j<n} (1 - x q^j); (x; q)_0 = 1.
Rational q_pochhammer(const Rational& x, long long n, const QContext& ctx);

/// Gaussian binomial (q;q)_n / ((q;q)_k (q;q)_{n-k}); throws unless n >= k >= 0.
Rational q_binomial(long long n, long long k, const QContext& ctx);

/// (q + c; q)_n (q - c; q)_n = prod_{j<n} ((1 - q^{j+1})^2 - c^2 q^{2j}).
Rational poch_pair(const Rational& c, long long n, const QContext& ctx);

/// Same product with c^2 given as a series in a^2 (for c = a q (1-q) pass
/// c_squared = a^2 q^2 (1-q)^2).
SeriesInA poch_pair(const SeriesInA& c_squared, long long n, const QContext& ctx);

}  // namespace qzeta
