#include "qzeta/summation.hpp"

#include <optional>

#include "qzeta/errors.hpp"

namespace qzeta {

const char* to_string(TailRule r) noexcept {
    switch (r) {
        case TailRule::Dominated: return "dominated";
        case TailRule::RapidDecay: return "rapid-decay";
        case TailRule::RatioEstimate: return "ratio-estimate";
    }
    return "?";
}

namespace {

// Tail estimate from the last added term and the next one; nullopt when the
// rule's trust condition is not met yet.
std::optional<Rational> ratio_tail(TailRule rule, int terms_used, const Rational& last_abs,
                                   const Rational& next_abs) {
    if (terms_used == 0) return std::nullopt;
    if (next_abs.is_zero()) {
        if (last_abs.is_zero()) return Rational(0);
        return std::nullopt;
    }
    if (last_abs.is_zero()) return std::nullopt;
    if (rule == TailRule::RapidDecay) {
        if (next_abs * 2 > last_abs) return std::nullopt;
        return next_abs * 2;
    }
    const Rational rho = next_abs / last_abs;
    if (rho >= Rational(1)) return std::nullopt;
    return next_abs * 2 / (Rational(1) - rho);
}

}  // namespace

SumResult sum_to_tolerance(TermSource source, const Rational& eps, const QContext& ctx) {
    if (eps.sign() <= 0) throw PreconditionError("sum_to_tolerance: eps must be > 0");
    if (source.rule == TailRule::Dominated && !source.dominated_tail && !source.dominated_factor)
        throw PreconditionError("sum_to_tolerance: dominated rule without a tail bound");

    SumResult r;
    r.value = 0;
    r.rounding_bound = 0;
    const unsigned bits = ctx.working_bits();
    const Rational half_ulp = bits ? Rational::pow2(-static_cast<int>(bits) - 1) : Rational(0);

    Rational last_abs = 0;
    std::optional<Rational> pending;  // t_{N+1}, computed ahead for the ratio rules
    for (;;) {
        std::optional<Rational> tail;
        if (source.rule == TailRule::Dominated && source.dominated_factor) {
            if (!pending) pending = source.next();
            // a rounded term is within half an ulp of the exact one
            tail = *source.dominated_factor * (pending->abs() + half_ulp);
        } else if (source.rule == TailRule::Dominated) {
            tail = source.dominated_tail(r.terms_used);
        } else {
            if (!pending) pending = source.next();
            tail = ratio_tail(source.rule, r.terms_used, last_abs, pending->abs());
        }
        if (tail && *tail + r.rounding_bound < eps) {
            r.tail_bound = *tail;
            return r;
        }
        if (r.terms_used >= ctx.max_terms())
            throw BudgetExhausted("series not within tolerance after max_terms=" +
                                  std::to_string(ctx.max_terms()) + " terms");
        Rational t = pending ? std::move(*pending) : source.next();
        pending.reset();
        last_abs = t.abs();
        r.value += t;
        if (bits) {
            r.value = r.value.round_to_bits(bits);
            r.rounding_bound += half_ulp;
        }
        ++r.terms_used;
    }
}

SeriesSum sum_series_to_tolerance(SeriesTermSource source, std::size_t order, const Rational& eps,
                                  const QContext& ctx) {
    if (eps.sign() <= 0) throw PreconditionError("sum_series_to_tolerance: eps must be > 0");
    if (source.rule == TailRule::Dominated && !source.dominated_tail)
        throw PreconditionError("sum_series_to_tolerance: dominated rule without a tail bound");

    SeriesSum r{SeriesInA(order), std::vector<Rational>(order + 1, Rational(0)), 0};
    std::vector<Rational> last_abs(order + 1, Rational(0));
    std::optional<SeriesInA> pending;
    for (;;) {
        bool ok = true;
        std::vector<Rational> tails(order + 1, Rational(0));
        if (source.rule == TailRule::Dominated) {
            tails = source.dominated_tail(r.terms_used);
            for (const auto& t : tails) ok = ok && t < eps;
        } else {
            if (!pending) pending = source.next();
            for (std::size_t k = 0; k <= order && ok; ++k) {
                auto t = ratio_tail(source.rule, r.terms_used, last_abs[k], (*pending)[k].abs());
                ok = t && *t < eps;
                if (ok) tails[k] = *t;
            }
        }
        if (ok) {
            r.tail_bounds = std::move(tails);
            return r;
        }
        if (r.terms_used >= ctx.max_terms())
            throw BudgetExhausted("series coefficients not within tolerance after max_terms=" +
                                  std::to_string(ctx.max_terms()) + " terms");
        SeriesInA t = pending ? std::move(*pending) : source.next();
        pending.reset();
        for (std::size_t k = 0; k <= order; ++k) last_abs[k] = t[k].abs();
        r.value += t;
        ++r.terms_used;
    }
}

}  // namespace qzeta
