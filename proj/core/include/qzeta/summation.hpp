#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qzeta/context.hpp"
#include "qzeta/rational.hpp"
#include "qzeta/series_in_a.hpp"

namespace qzeta {

/// A truncated sum with a bound on what was left out.
struct SumResult {
    Rational value;          ///< partial sum of the first terms_used terms
    int terms_used = 0;
    Rational tail_bound;     ///< bound on |sum of omitted terms|
    Rational rounding_bound; ///< accumulated rounding of the partial sum (0 when exact)

    Rational error_bound() const { return tail_bound + rounding_bound; }
};

/// How the remainder after N terms is bounded.
enum class TailRule {
    /// Caller-supplied closed-form bound (rigorous).
    Dominated,
    /// 2 |t_{N+1}|, trusted once |t_{N+1}| <= |t_N| / 2 (fast q^{cn^2} decay).
    RapidDecay,
    /// 2 |t_{N+1}| / (1 - rho) with rho = |t_{N+1}/t_N| < 1 (generic geometric estimate).
    RatioEstimate,
};

const char* to_string(TailRule r) noexcept;

/// Successive terms t_1, t_2, ... of a series plus its tail rule.
struct TermSource {
    std::function<Rational()> next;
    TailRule rule = TailRule::RapidDecay;
    /// For TailRule::Dominated: a bound on sum_{n > N} |t_n| given N.
    std::function<Rational(int)> dominated_tail;
    /// For TailRule::Dominated, instead of dominated_tail: the bound is
    /// factor * |t_{N+1}|, which reuses the next term.
    std::optional<Rational> dominated_factor;
};

/// Adds terms until error_bound() < eps; throws BudgetExhausted after
/// ctx.max_terms() terms.
SumResult sum_to_tolerance(TermSource source, const Rational& eps, const QContext& ctx);
inline SumResult sum_to_tolerance(TermSource source, const QContext& ctx) {
    return sum_to_tolerance(std::move(source), ctx.tolerance(), ctx);
}

/// A SeriesInA-valued sum: one tail bound per coefficient.
struct SeriesSum {
    SeriesInA value;
    std::vector<Rational> tail_bounds;
    int terms_used = 0;
};

struct SeriesTermSource {
    std::function<SeriesInA()> next;
    TailRule rule = TailRule::RapidDecay;
    std::function<std::vector<Rational>(int)> dominated_tail;
};

/// Coefficient-wise analogue of sum_to_tolerance: stops once every
/// coefficient's tail bound is below eps.
SeriesSum sum_series_to_tolerance(SeriesTermSource source, std::size_t order, const Rational& eps,
                                  const QContext& ctx);

}  // namespace qzeta
