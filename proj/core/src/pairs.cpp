#include <memory>
#include <tuple>

#include "qzeta/errors.hpp"
#include "qzeta/qcore.hpp"
#include "qzeta/wz.hpp"

namespace qzeta::wz {

MWZPair bbb_pair(const Rational& a, const QContext& ctx, int rows) {
    if (rows < 1) throw PreconditionError("bbb_pair: rows must be >= 1");
    MWZPair p;
    p.kernel = bbb_kernel(a, ctx);
    p.L1 = 0;
    p.L2 = 1;
    const Rational& q = ctx.q();
    const Rational one_q2 = (Rational(1) - q) * (Rational(1) - q);
    const Rational a2 = a * a;
    Rational A = q * one_q2;
    for (int n = 0; n < rows; ++n) {
        const Rational odd = Rational(1) - ctx.power(2 * n + 1);
        const Rational B = A / odd;
        const Rational C = -(ctx.power(2 * n + 2) * 2 * A) / ((Rational(1) + ctx.power(n + 1)) * odd);
        p.p_coeffs.push_back({A});
        p.q_coeffs.push_back({B, C});

        const Rational m = q_number(n + 1, ctx);
        const Rational lift = Rational(1) + ctx.power(n + 1);
        A *= ctx.power(2 * n + 3) * one_q2 * m * m * (m * m - a2 * lift * lift) /
             (q_number(2 * n + 1, ctx) * q_number(2 * n + 2, ctx));
    }
    return p;
}

std::pair<Rational, Rational> zeta3_step(int n, const Rational& a0, const Rational& a1, const QContext& ctx) {
    const Rational m = (ctx.power(n + 1) - 1) * (ctx.power(n + 1) - 1);
    Rational next0 = m * ctx.power(-2 * n - 1) * a1;
    Rational next1 = -(ctx.q() * ctx.q() * m * a0) - m * ctx.power(1 - n) * a1 * 2;
    return {std::move(next0), std::move(next1)};
}

std::pair<Rational, Rational> zeta3_closed_form(std::pair<int, int> init, int n, const QContext& ctx) {
    if (n < 0) throw PreconditionError("zeta3_closed_form: n must be >= 0");
    const long long N = n;
    const Rational poch = q_pochhammer(ctx.q(), n, ctx);
    const Rational p2 = poch * poch;
    const Rational even = (n % 2 == 0) ? Rational(1) : Rational(-1);  // (-1)^n
    const long long tri = N * (N - 1) / 2;
    const long long tri1 = (N - 1) * (N - 2) / 2;
    if (init == std::pair{1, 0})
        return {-even * Rational(N - 1) * p2 * ctx.power(-tri), even * Rational(N) * p2 * ctx.power(2 - tri1)};
    if (init == std::pair{0, 1})
        return {-even * Rational(N) * p2 * ctx.power(-1 - tri), even * Rational(N + 1) * p2 * ctx.power(1 - tri1)};
    throw PreconditionError("zeta3_closed_form: init must be (1,0) or (0,1)");
}

Rational zeta3_b0(int n, int k, const QContext& ctx) {
    auto Q = [&](long long e) { return ctx.power(e); };
    const Rational num = Q(4 * n + 2 * k + 4) - Q(2 * n + k + 2) - Q(n + k + 1) * 2 + Q(k) + 1;
    const Rational den = Q(k) * (Q(n + 1) - 1) * (Q(n + 1) + 1) * (Q(2 * n + k + 2) - 1);
    return num / den;
}

Rational zeta3_b1(int n, int k, const QContext& ctx) {
    auto Q = [&](long long e) { return ctx.power(e); };
    const Rational num = Rational(1) + Q(5 * n + k + 4) * 2 + Q(4 * n + k + 4) - Q(4 * n + k + 3) * 4 +
                         Q(2 * n + k + 2) * 3 - Q(n + k + 1) * 2 + Q(5 * n + 2 * k + 4) * 2 + Q(4 * n + 2 * k + 4) -
                         Q(6 * n + 2 * k + 5) * 2 - Q(5 * n + 2 * k + 5) * 2 + Q(4 * n + 2 * k + 3) +
                         Q(8 * n + 3 * k + 7) - Q(n + 1) * 2 + Q(3 * n + 2) * 2 - Q(4 * n + 3) - Q(6 * n + 3 * k + 5);
    const Rational den = Q(2 * n + k + 2) * (Q(2 * n + 1) - 1) * (Q(2 * n + 2) - 1) * (Q(2 * n + k + 2) - 1);
    return num / den;
}

MWZPair zeta3_pair(std::pair<Rational, Rational> init, const QContext& ctx, int rows) {
    if (rows < 1) throw PreconditionError("zeta3_pair: rows must be >= 1");
    MWZPair p;
    p.kernel = zeta3_kernel(ctx);
    p.L1 = 1;
    p.L2 = 1;
    auto [a0, a1] = std::move(init);
    for (int n = 0; n < rows; ++n) {
        p.p_coeffs.push_back({a0, a1});
        std::tie(a0, a1) = zeta3_step(n, a0, a1, ctx);
    }
    auto table = std::make_shared<const CoeffTable>(p.p_coeffs);
    p.mate = [table, ctx](int n, int k) {
        const auto& c = (*table)[static_cast<std::size_t>(n)];
        Rational m = 0;
        if (!c[0].is_zero()) m += c[0] * zeta3_b0(n, k, ctx);
        if (!c[1].is_zero()) m += c[1] * zeta3_b1(n, k, ctx);
        return m;
    };
    return p;
}

Rational zeta3_target_scale(std::pair<int, int> init, const QContext& ctx) {
    ctx.require_outside("zeta3_target_scale");
    const Rational p = ctx.q().inverse();
    const Rational cube = (Rational(1) - p).pow(3);
    if (init == std::pair{1, 0}) return -cube / p;
    if (init == std::pair{0, 1}) return -cube / (p * p);
    throw PreconditionError("zeta3_target_scale: init must be (1,0) or (0,1)");
}

}  // namespace qzeta::wz
