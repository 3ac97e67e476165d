#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qzeta/kernel.hpp"
#include "qzeta/summation.hpp"

namespace qzeta::wz {

using CoeffTable = std::vector<std::vector<Rational>>;

/// F(n, k) = H(n, k) P(n, q^k) and G(n, k) = H(n, k) M(n, k), where
/// P(n, y) = sum_i p_coeffs[n][i] y^i. The mate M is either polynomial,
/// w(x, y) sum_j q_coeffs[n][j] y^j with an optional weight w, or an
/// arbitrary closure when it is not polynomial in q^k.
struct MWZPair {
    KernelSpec kernel;
    int L1 = 0;
    int L2 = 0;
    CoeffTable p_coeffs;
    CoeffTable q_coeffs;
    std::optional<RationalFunction2> mate_weight;
    std::function<Rational(int n, int k)> mate;

    /// Rows n for which F(n, .) is available.
    int f_rows() const noexcept { return static_cast<int>(p_coeffs.size()); }
    /// Rows n for which G(n, .) is available.
    int g_rows() const noexcept;

    /// P(n, q^k) and M(n, k). Throw BudgetExhausted past the stored tables.
    Rational f_cofactor(int n, int k, const QContext& ctx) const;
    Rational g_cofactor(int n, int k, const QContext& ctx) const;

    Rational F(int n, int k, const QContext& ctx) const;
    Rational G(int n, int k, const QContext& ctx) const;
};

struct Residual {
    Rational max_abs;
    GridPoint at;     // location of the largest residual
    long long points = 0;
};

/// max |F(n+1,k) - F(n,k) - G(n,k+1) + G(n,k)| over 0 <= n < N, 0 <= k < K.
Residual telescope_residual(const MWZPair& pair, int N, int K, const QContext& ctx);

/// The same for F_s(n,k) = F(sn,k) and G_s(n,k) = sum_{i<s} G(sn+i,k).
Residual telescope_residual_s(const MWZPair& pair, int s, int N, int K, const QContext& ctx);

// --- Built-in pairs ---------------------------------------------------------

/// The pair over bbb_kernel with P = A(n) and M = B(n) + C(n) q^k:
///   A(0) = q (1-q)^2,
///   A(n+1) = q^{2n+3} (1-q)^2 [n+1]^2 ([n+1]^2 - a^2 (1+q^{n+1})^2) / ([2n+1][2n+2]) A(n),
///   B(n) = A(n) / (1 - q^{2n+1}),  C(n) = -2 q^{2n+2} A(n) / ((1+q^{n+1})(1-q^{2n+1})).
/// Tables hold n < rows.
MWZPair bbb_pair(const Rational& a, const QContext& ctx, int rows = 64);

/// One step of the zeta[3] coefficient recurrence:
///   a0(n+1) = (q^{n+1}-1)^2 q^{-2n-1} a1(n),
///   a1(n+1) = -q^2 (q^{n+1}-1)^2 a0(n) - 2 (q^{n+1}-1)^2 q^{1-n} a1(n).
std::pair<Rational, Rational> zeta3_step(int n, const Rational& a0, const Rational& a1, const QContext& ctx);

/// Closed forms of the recurrence for the two unit initial values, n >= 0.
/// init (1,0): a0 = (-1)^{n-1} (n-1) (q;q)_n^2 q^{-n(n-1)/2},  a1 = (-1)^n n (q;q)_n^2 q^{2-(n-1)(n-2)/2}.
/// init (0,1): a0 = (-1)^{n-1} n (q;q)_n^2 q^{-1-n(n-1)/2},     a1 = (-1)^n (n+1) (q;q)_n^2 q^{1-(n-1)(n-2)/2}.
std::pair<Rational, Rational> zeta3_closed_form(std::pair<int, int> init, int n, const QContext& ctx);

/// Mates of the zeta[3] pair: M(n,k) = a0(n) b0(n,k) + a1(n) b1(n,k).
Rational zeta3_b0(int n, int k, const QContext& ctx);
Rational zeta3_b1(int n, int k, const QContext& ctx);

/// The zeta[3] pair for |q| > 1 from any initial (a0(0), a1(0)).
MWZPair zeta3_pair(std::pair<Rational, Rational> init, const QContext& ctx, int rows = 64);

/// Factor c with c * sum_k F(0,k) = target at p = 1/q: for init (1,0) the
/// target is zeta[3](p), for (0,1) it is sum p^n/[n]_p^3.
Rational zeta3_target_scale(std::pair<int, int> init, const QContext& ctx);

// --- Summation formulas --------------------------------------------------------

struct FormulaSums {
    SumResult lhs;       // sum_k F(0, k)
    SumResult rhs;
    Rational boundary;   // size of the boundary terms that were checked to vanish
    int boundary_index = 0;
};

/// sum_k F(0,k) = sum_n G(n,0).
FormulaSums sum_formula_i(const MWZPair& pair, const QContext& ctx);
/// sum_k F(0,k) = sum_n (F(n,n) + G(n,n+1)).
FormulaSums sum_formula_ii(const MWZPair& pair, const QContext& ctx);
/// sum_k F(0,k) = sum_n (F(sn,n) + sum_{i<s} G(sn+i,n+1)), s >= 1.
FormulaSums sum_formula_s(const MWZPair& pair, int s, const QContext& ctx);

/// Term streams behind the formulas, for term counting.
TermSource formula_lhs_terms(const MWZPair& pair, const QContext& ctx);
TermSource formula_rhs_terms_i(const MWZPair& pair, const QContext& ctx);
TermSource formula_rhs_terms_s(const MWZPair& pair, int s, const QContext& ctx);

}  // namespace qzeta::wz
