#include "qzeta/accel.hpp"

#include <memory>

#include "qzeta/errors.hpp"
#include "qzeta/naive.hpp"
#include "qzeta/qcore.hpp"

namespace qzeta::accel {

namespace {

void require_abs_below_one(const Rational& a, const char* who) {
    if (!(a.abs() < Rational(1)))
        throw PreconditionError(std::string(who) + ": requires |a| < 1, got a=" + a.to_string());
}

Rational sign_alt(long long n) { return (n % 2 == 1) ? Rational(1) : Rational(-1); }  // (-1)^{n-1}

// [m]^2 - a^2 q^{2m}
Rational shifted_square(long long m, const Rational& a2, const QContext& ctx) {
    const Rational qm = q_number(m, ctx);
    return qm * qm - a2 * ctx.power(2 * m);
}

// [m]^2 - a^2 (1 + q^m)^2
Rational product_numerator(long long m, const Rational& a2, const QContext& ctx) {
    const Rational qm = q_number(m, ctx);
    const Rational s = Rational(1) + ctx.power(m);
    return qm * qm - a2 * s * s;
}

}  // namespace

// --- Generating function series ------------------------------------------------

TermSource bbb_rhs_terms(const Rational& a, const QContext& ctx) {
    ctx.require_unit_interval("bbb_rhs");
    require_abs_below_one(a, "bbb_rhs");
    struct State {
        long long n = 0;
        Rational qsq = 1;       // q^{n^2}
        Rational central = 1;   // [2n n]
        Rational product = 1;   // prod_{m<n} N_m / d_m
    };
    auto st = std::make_shared<State>();
    const Rational a2 = a * a;
    TermSource src;
    src.rule = TailRule::RapidDecay;
    src.next = [st, a2, ctx] {
        const long long n = ++st->n;
        st->qsq *= ctx.power(2 * n - 1);
        st->central *= q_number(2 * n - 1, ctx) * q_number(2 * n, ctx) / (q_number(n, ctx) * q_number(n, ctx));
        const Rational d = shifted_square(n, a2, ctx);
        if (d.is_zero()) throw DomainError("bbb_rhs: vanishing denominator at n=" + std::to_string(n));
        Rational term = st->qsq * (Rational(1) + ctx.power(n) * 2) / (st->central * d) * st->product;
        st->product *= product_numerator(n, a2, ctx) / d;
        return term;
    };
    return src;
}

SumResult bbb_rhs(const Rational& a, const QContext& ctx) { return sum_to_tolerance(bbb_rhs_terms(a, ctx), ctx); }

SeriesSum bbb_rhs_series(std::size_t K, const QContext& ctx) {
    ctx.require_unit_interval("bbb_rhs_series");
    struct State {
        long long n = 0;
        Rational qsq = 1;
        Rational central = 1;
        std::optional<SeriesInA> product;
    };
    auto st = std::make_shared<State>();
    SeriesTermSource src;
    src.rule = TailRule::RapidDecay;
    src.next = [st, K, ctx] {
        const long long n = ++st->n;
        if (!st->product) st->product = SeriesInA::constant(K, 1);
        st->qsq *= ctx.power(2 * n - 1);
        st->central *= q_number(2 * n - 1, ctx) * q_number(2 * n, ctx) / (q_number(n, ctx) * q_number(n, ctx));
        const Rational qn = q_number(n, ctx);
        const Rational qpow = ctx.power(n);
        const SeriesInA d = SeriesInA::linear(K, qn * qn, -(qpow * qpow));
        const Rational lift = Rational(1) + qpow;
        const SeriesInA num = SeriesInA::linear(K, qn * qn, -(lift * lift));
        const SeriesInA dinv = d.inverse();
        SeriesInA term = (*st->product) * dinv * (st->qsq * (Rational(1) + qpow * 2) / st->central);
        *st->product *= num * dinv;
        return term;
    };
    return sum_series_to_tolerance(std::move(src), K, ctx.tolerance(), ctx);
}

Rational t2_numerator(long long n, const Rational& a, const QContext& ctx, Transcription form) {
    if (n < 1) throw PreconditionError("t2_numerator: n must be >= 1");
    const Rational& q = ctx.q();
    const Rational x = ctx.power(n);
    const Rational qn = q_number(n, ctx);
    const Rational lead = ctx.power(4 * n - 1) * 3 + ctx.power(3 * n - 1) * 6 - x * x + ctx.power(2 * n - 1) * 8 -
                          x * 4 + ctx.power(n - 1) * 8 + 1;
    const Rational second = (form == Transcription::Corrected ? ctx.power(n - 1) : x) * 8 * qn * qn;
    const Rational a_part = a * a * ctx.power(4 * n - 1) * ((x * x * 3 + x * 4 - q + 3) * qn - 2);
    return lead * qn * qn * qn - second - a_part;
}

Rational t2_term(long long n, const Rational& a, const QContext& ctx, Transcription form) {
    const Rational a2 = a * a;
    Rational product = 1;
    for (long long m = 1; m < n; ++m) product *= product_numerator(m, a2, ctx) / shifted_square(n + m, a2, ctx);
    const Rational den = q_binomial(2 * n, n, ctx) * q_number(n, ctx) * shifted_square(n, a2, ctx) *
                         shifted_square(2 * n, a2, ctx);
    if (den.is_zero()) throw DomainError("t2_rhs: vanishing denominator at n=" + std::to_string(n));
    return ctx.power(3 * n * n - 3 * n + 1) * t2_numerator(n, a, ctx, form) / den * product;
}

TermSource t2_rhs_terms(const Rational& a, const QContext& ctx, Transcription form) {
    ctx.require_unit_interval("t2_rhs");
    require_abs_below_one(a, "t2_rhs");
    auto n = std::make_shared<long long>(0);
    TermSource src;
    src.rule = TailRule::RapidDecay;
    src.next = [n, a, ctx, form] { return t2_term(++*n, a, ctx, form); };
    return src;
}

SumResult t2_rhs(const Rational& a, const QContext& ctx, Transcription form) {
    return sum_to_tolerance(t2_rhs_terms(a, ctx, form), ctx);
}

// --- zeta[3] --------------------------------------------------------------------

Rational zeta3_numerator(Zeta3Variant v, long long n, const QContext& ctx, Transcription form) {
    if (n < 1) throw PreconditionError("zeta3_numerator: n must be >= 1");
    const Rational one_minus_q = Rational(1) - ctx.q();
    const Rational x = ctx.power(n);
    const Rational linear = (Rational(1) + x * 2) * q_number(n, ctx);
    const Rational middle = ctx.power(2 * n - 1) * q_number(2 * n + 1, ctx);
    const Rational last = ctx.power(4 * n - 2) / q_number(2 * n - 1, ctx);
    const bool fixed = form == Transcription::Corrected;
    if (v == Zeta3Variant::V1) {
        const Rational weight = fixed ? Rational(n - 1) : Rational(n);
        return x + x * x * 2 + x * x * x * 2 + weight * one_minus_q * (linear + middle + last);
    }
    const Rational w01 = fixed ? Rational(n - 1) : Rational(n);
    const Rational w2 = fixed ? Rational(n) : Rational(n + 1);
    return Rational(1) + x * 2 + ctx.power(2 * n - 1) + x * x * x * 2 - x * x * x * x +
           one_minus_q * (w01 * linear + w01 * middle + w2 * last);
}

Rational zeta3_accel_term(Zeta3Variant v, long long n, const QContext& ctx, Transcription form) {
    const Rational qn = q_number(n, ctx);
    const Rational den = q_binomial(2 * n, n, ctx) * qn * qn * qn * (Rational(1) + ctx.power(n));
    return sign_alt(n) * ctx.power(n * (3 * n - 1) / 2) * zeta3_numerator(v, n, ctx, form) / den;
}

TermSource zeta3_accel_terms(Zeta3Variant v, const QContext& ctx, Transcription form) {
    ctx.require_unit_interval("zeta3_accel");
    auto n = std::make_shared<long long>(0);
    TermSource src;
    src.rule = TailRule::RapidDecay;
    src.next = [n, v, ctx, form] { return zeta3_accel_term(v, ++*n, ctx, form); };
    return src;
}

SumResult zeta3_accel(Zeta3Variant v, const QContext& ctx, Transcription form) {
    return sum_to_tolerance(zeta3_accel_terms(v, ctx, form), ctx);
}

Rational amdeberhan_numerator(long long n, const QContext& ctx, Transcription form) {
    if (n < 1) throw PreconditionError("amdeberhan_numerator: n must be >= 1");
    const Rational& q = ctx.q();
    const Rational x = ctx.power(n);
    auto qi = [&](long long m) { return q_number(m, ctx); };
    const Rational one_x = Rational(1) + x;
    const Rational first = qi(2 * n - 1) * qi(2 * n - 1) * ctx.power(4 * n - 1) * (one_x + x * x * 2 + x * x * x);
    const Rational second = qi(3 * n - 1) * qi(3 * n) * ctx.power(2 * n - 1) * one_x * one_x;
    if (n == 1) return first + second;  // the third summand carries (n - 1)

    Rational third;
    if (form == Transcription::Corrected) {
        const Rational x2 = x * x, x4 = x2 * x2;
        const Rational r = x4 * x4 + x4 * x2 + q * (x4 * x2 + x4 * x * 3 + x4 - x2) -
                           q * q * (x2 * x + x2 * 2 + x * 2 + 1);
        third = -Rational(n - 1) * qi(2 * n - 1) * qi(2 * n) * r / (q * q);
    } else {
        const Rational inner = qi(n) + qi(2 * n) - qi(3 * n) - qi(4 * n - 1) - qi(6 * n - 1);
        third = (Rational(1) - q) * Rational(n - 1) * one_x *
                (one_x * qi(3 * n - 1) * qi(3 * n) - ctx.power(2 * n - 1) * qi(n) * inner);
    }
    return first + second + third;
}

Rational amdeberhan_term(long long n, const QContext& ctx, Transcription form) {
    const Rational qn = q_number(n, ctx);
    const Rational q2n1 = q_number(2 * n - 1, ctx);
    const Rational lift = Rational(1) + ctx.power(n);
    const Rational den = q_binomial(2 * n, n, ctx) * q_binomial(3 * n, n, ctx) * qn * qn * qn * q2n1 * q2n1 *
                         lift * lift;
    return sign_alt(n) * ctx.power(7 * n * (n - 1) / 2 + 1) * amdeberhan_numerator(n, ctx, form) / den;
}

TermSource zeta3_amdeberhan_terms(const QContext& ctx, Transcription form) {
    ctx.require_unit_interval("zeta3_amdeberhan");
    auto n = std::make_shared<long long>(0);
    TermSource src;
    src.rule = TailRule::RapidDecay;
    src.next = [n, ctx, form] { return amdeberhan_term(++*n, ctx, form); };
    return src;
}

SumResult zeta3_amdeberhan(const QContext& ctx, Transcription form) {
    return sum_to_tolerance(zeta3_amdeberhan_terms(ctx, form), ctx);
}

// --- Identifiers --------------------------------------------------------------------

bool SeriesId::accelerated() const noexcept {
    switch (kind) {
        case SeriesKind::ZetaNaive:
        case SeriesKind::GenfuncLhs:
        case SeriesKind::Zeta3AltNaive: return false;
        default: return true;
    }
}

void SeriesId::validate() const {
    const bool wants_a = kind == SeriesKind::GenfuncLhs || kind == SeriesKind::BbbT1 || kind == SeriesKind::BbbT2;
    if (wants_a != a.has_value())
        throw PreconditionError(name() + (wants_a ? ": parameter a is required" : ": parameter a is not accepted"));
    if (a && !(a->abs() < Rational(1))) throw PreconditionError(name() + ": requires |a| < 1");
    if (kind == SeriesKind::ZetaNaive && s < 2) throw PreconditionError("zeta-q: s must be >= 2");
}

std::string SeriesId::name() const {
    auto with_a = [this](const char* base) {
        return std::string(base) + (a ? "[a=" + a->to_string() + "]" : std::string());
    };
    switch (kind) {
        case SeriesKind::ZetaNaive: return "zeta-q[s=" + std::to_string(s) + "]";
        case SeriesKind::GenfuncLhs: return with_a("genfunc-lhs");
        case SeriesKind::Zeta3AltNaive: return "zeta3-alt";
        case SeriesKind::BbbT1: return with_a("bbb-t1");
        case SeriesKind::BbbT2: return with_a("bbb-t2");
        case SeriesKind::Z3V1: return "z3-v1";
        case SeriesKind::Z3V2: return "z3-v2";
        case SeriesKind::Z3Amdeberhan: return "z3-amdeberhan";
    }
    return "?";
}

SeriesId naive_counterpart(const SeriesId& id) {
    switch (id.kind) {
        case SeriesKind::BbbT1:
        case SeriesKind::BbbT2: return SeriesId::genfunc(id.a.value_or(Rational(0)));
        case SeriesKind::Z3V1:
        case SeriesKind::Z3Amdeberhan: return SeriesId::zeta(3);
        case SeriesKind::Z3V2: return SeriesId::zeta3_alt();
        default: return id;
    }
}

TermSource term_source(const SeriesId& id, const QContext& ctx) {
    id.validate();
    switch (id.kind) {
        case SeriesKind::ZetaNaive: return zeta_q_naive_terms(id.s, ctx);
        case SeriesKind::GenfuncLhs: return genfunc_lhs_terms(*id.a, ctx);
        case SeriesKind::Zeta3AltNaive: return zeta3_alt_terms(ctx);
        case SeriesKind::BbbT1: return bbb_rhs_terms(*id.a, ctx);
        case SeriesKind::BbbT2: return t2_rhs_terms(*id.a, ctx);
        case SeriesKind::Z3V1: return zeta3_accel_terms(Zeta3Variant::V1, ctx);
        case SeriesKind::Z3V2: return zeta3_accel_terms(Zeta3Variant::V2, ctx);
        case SeriesKind::Z3Amdeberhan: return zeta3_amdeberhan_terms(ctx);
    }
    throw PreconditionError("term_source: unknown series");
}

SumResult sum_series(const SeriesId& id, const QContext& ctx) { return sum_to_tolerance(term_source(id, ctx), ctx); }

int terms_to_tolerance(const SeriesId& id, const Rational& eps, const QContext& ctx) {
    if (eps.sign() <= 0) throw PreconditionError("terms_to_tolerance: eps must be > 0");
    return sum_to_tolerance(term_source(id, ctx), eps, ctx).terms_used;
}

}  // namespace qzeta::accel
