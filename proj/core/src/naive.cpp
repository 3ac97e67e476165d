#include "qzeta/naive.hpp"

#include <memory>
#include <string>

#include "qzeta/errors.hpp"
#include "qzeta/qcore.hpp"

namespace qzeta {

namespace {

void require_abs_below_one(const Rational& a, const char* who) {
    if (!(a.abs() < Rational(1)))
        throw PreconditionError(std::string(who) + ": requires |a| < 1, got a=" + a.to_string());
}

/// num/den rounded to the nearest multiple of 2^-bits, for num, den > 0.
Rational dyadic_quotient(const mpz_class& num, const mpz_class& den, unsigned bits) {
    mpz_class twice = num;
    mpz_mul_2exp(twice.get_mpz_t(), twice.get_mpz_t(), bits + 1);
    twice += den;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
    mpz_class scale(1);
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
    return Rational(mpq_class(q, scale));
}

// With q = p/r, term n is p^{n(s-1)} (r-p)^s r^{n-s} / (r^n - p^n)^s. Built
// from integers and rounded once onto the accumulator grid, so the engine's
// half-ulp per term still bounds the rounding and no rational gcds are taken.
TermSource zeta_q_naive_terms_rounded(int s, const QContext& ctx) {
    struct State {
        long long n = 0;
        mpz_class pn = 1, rn = 1, weight = 1;
    };
    const mpz_class p = ctx.q().numerator(), r = ctx.q().denominator();
    mpz_class ps1, rps;
    mpz_pow_ui(ps1.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(s - 1));
    const mpz_class diff = r - p;
    mpz_pow_ui(rps.get_mpz_t(), diff.get_mpz_t(), static_cast<unsigned long>(s));
    auto st = std::make_shared<State>();
    TermSource src;
    src.rule = TailRule::Dominated;
    src.next = [st, p, r, ps1, rps, s, bits = ctx.working_bits()] {
        ++st->n;
        st->pn *= p;
        st->rn *= r;
        st->weight *= ps1;
        mpz_class num = st->weight * rps, den, rpow;
        const mpz_class gap = st->rn - st->pn;
        mpz_pow_ui(den.get_mpz_t(), gap.get_mpz_t(), static_cast<unsigned long>(s));
        const long long shift = st->n - s;
        mpz_pow_ui(rpow.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(shift < 0 ? -shift : shift));
        if (shift >= 0) num *= rpow;
        else den *= rpow;
        return dyadic_quotient(num, den, bits);
    };
    return src;
}

}  // namespace

TermSource zeta_q_naive_terms(int s, const QContext& ctx) {
    ctx.require_unit_interval("zeta_q_naive");
    if (s < 2) throw PreconditionError("zeta_q_naive: s must be >= 2, got " + std::to_string(s));
    const Rational q = ctx.q();
    const Rational qs1 = q.pow(s - 1);
    if (ctx.working_bits() > 0) {
        TermSource src = zeta_q_naive_terms_rounded(s, ctx);
        src.dominated_factor = (Rational(1) - qs1).inverse();
        return src;
    }

    // term n = (q^{s-1})^n / [n]^s; [n+1] = [n] + q^n
    struct State {
        Rational qn = 1;       // q^{n-1} before the step, q^n after
        Rational qnum = 0;     // [n]
        Rational weight = 1;   // q^{n(s-1)}
    };
    auto st = std::make_shared<State>();
    TermSource src;
    src.rule = TailRule::Dominated;
    src.next = [st, q, qs1, s] {
        st->qnum += st->qn;
        st->qn *= q;
        st->weight *= qs1;
        return st->weight / st->qnum.pow(s);
    };
    // sum_{n>N} q^{n(s-1)}/[n]^s <= t_{N+1} / (1 - q^{s-1}) since [n] increases
    src.dominated_factor = (Rational(1) - qs1).inverse();
    return src;
}

SumResult zeta_q_naive(int s, const QContext& ctx) { return sum_to_tolerance(zeta_q_naive_terms(s, ctx), ctx); }

TermSource genfunc_lhs_terms(const Rational& a, const QContext& ctx) {
    ctx.require_unit_interval("genfunc_lhs_numeric");
    require_abs_below_one(a, "genfunc_lhs_numeric");
    const Rational q = ctx.q();
    const Rational a2 = a * a;
    // D(n) = [n]^2 - a^2 q^{2n}: positive and increasing in n for |a| < 1
    auto denom = [q, a2](long long n) {
        const Rational qn = q.pow(n);
        const Rational qnum = (Rational(1) - qn) / (Rational(1) - q);
        return qnum * qnum - a2 * qn * qn;
    };
    auto n = std::make_shared<long long>(0);
    TermSource src;
    src.rule = TailRule::Dominated;
    src.next = [n, q, denom] {
        ++*n;
        const Rational d = denom(*n);
        if (d.is_zero()) throw DomainError("genfunc_lhs_numeric: vanishing denominator");
        return q.pow(*n) / d;
    };
    // D(n) increases, so the tail is at most t_{N+1} / (1 - q)
    src.dominated_factor = (Rational(1) - q).inverse();
    return src;
}

SumResult genfunc_lhs_numeric(const Rational& a, const QContext& ctx) {
    return sum_to_tolerance(genfunc_lhs_terms(a, ctx), ctx);
}

SeriesSum genfunc_lhs_series(std::size_t K, const QContext& ctx) {
    ctx.require_unit_interval("genfunc_lhs_series");
    const Rational q = ctx.q();
    auto n = std::make_shared<long long>(0);
    SeriesTermSource src;
    src.rule = TailRule::Dominated;
    // q^n / ([n]^2 - a^2 q^{2n}) expanded in a^2
    src.next = [n, q, K] {
        ++*n;
        const Rational qn = q.pow(*n);
        const Rational qnum = (Rational(1) - qn) / (Rational(1) - q);
        const SeriesInA den = SeriesInA::linear(K, qnum * qnum, -(qn * qn));
        return SeriesInA::constant(K, qn) / den;
    };
    // coefficient k is zeta[2k+2]; reuse its tail bound
    src.dominated_tail = [q, K](int N) {
        std::vector<Rational> tails;
        tails.reserve(K + 1);
        const Rational qnum = (Rational(1) - q.pow(N + 1)) / (Rational(1) - q);
        for (std::size_t k = 0; k <= K; ++k) {
            const long long s = 2 * static_cast<long long>(k) + 2;
            const Rational qs1 = q.pow(s - 1);
            tails.push_back(qs1.pow(N + 1) / (qnum.pow(s) * (Rational(1) - qs1)));
        }
        return tails;
    };
    return sum_series_to_tolerance(std::move(src), K, ctx.tolerance(), ctx);
}

TermSource zeta3_alt_terms(const QContext& ctx) {
    ctx.require_unit_interval("zeta3_alt_naive");
    const Rational q = ctx.q();
    auto n = std::make_shared<long long>(0);
    TermSource src;
    src.rule = TailRule::Dominated;
    src.next = [n, q] {
        ++*n;
        const Rational qn = q.pow(*n);
        return qn / ((Rational(1) - qn) / (Rational(1) - q)).pow(3);
    };
    src.dominated_factor = (Rational(1) - q).inverse();
    return src;
}

SumResult zeta3_alt_naive(const QContext& ctx) { return sum_to_tolerance(zeta3_alt_terms(ctx), ctx); }

}  // namespace qzeta
