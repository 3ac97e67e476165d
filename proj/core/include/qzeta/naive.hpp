#pragma once

#include "qzeta/context.hpp"
#include "qzeta/summation.hpp"

namespace qzeta {

// Definitional series, each summed with a rigorous geometric tail bound.
// All require 0 < q < 1.

/// zeta[s] = sum_{n>=1} q^{n(s-1)} / [n]_q^s for integer s >= 2.
SumResult zeta_q_naive(int s, const QContext& ctx);

/// sum_{n>=1} q^n / ([n]_q^2 - a^2 q^{2n}), the generating function
/// sum_k zeta[2k+2] a^{2k}; requires |a| < 1.
SumResult genfunc_lhs_numeric(const Rational& a, const QContext& ctx);

/// The same generating function as a series in a^2 truncated at order K;
/// coefficient k equals zeta[2k+2].
SeriesSum genfunc_lhs_series(std::size_t K, const QContext& ctx);

/// sum_{n>=1} q^n / [n]_q^3.
SumResult zeta3_alt_naive(const QContext& ctx);

// Term sources, exposed for terms-to-tolerance accounting.
TermSource zeta_q_naive_terms(int s, const QContext& ctx);
TermSource genfunc_lhs_terms(const Rational& a, const QContext& ctx);
TermSource zeta3_alt_terms(const QContext& ctx);

/// Classical zeta(s) for s in {2, 3} (pi^2/6 via Machin's formula; zeta(3)
/// via 5/2 sum (-1)^{k-1} / (k^3 binom(2k,k))), to `digits` digits.
SumResult classical_zeta_oracle(int s, int digits = 40);

}  // namespace qzeta
