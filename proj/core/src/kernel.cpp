#include "qzeta/kernel.hpp"

#include "qzeta/errors.hpp"

namespace qzeta::wz {

void KernelSpec::require_context(const QContext& ctx) const {
    if (ctx.q() != q)
        throw PreconditionError(name + ": kernel built for q=" + q.to_string() + ", context has q=" +
                                ctx.q().to_string());
}

std::optional<GridPoint> compatibility_defect(const KernelSpec& spec, int grid, const QContext& ctx) {
    spec.require_context(ctx);
    const Rational& q = ctx.q();
    for (int n = 0; n < grid; ++n) {
        const Rational x = ctx.power(n);
        for (int k = 0; k < grid; ++k) {
            const Rational y = ctx.power(k);
            if (spec.ratio_n(x, q * y) * spec.ratio_k(x, y) != spec.ratio_k(q * x, y) * spec.ratio_n(x, y))
                return GridPoint{n, k};
        }
    }
    return std::nullopt;
}

KernelWalker::KernelWalker(const KernelSpec& spec, const QContext& ctx) : spec_(&spec), ctx_(ctx), h_(spec.base) {
    spec.require_context(ctx);
}

void KernelWalker::step_n() {
    h_ *= spec_->ratio_n(ctx_.power(n_), ctx_.power(k_));
    ++n_;
}

void KernelWalker::step_k() {
    h_ *= spec_->ratio_k(ctx_.power(n_), ctx_.power(k_));
    ++k_;
}

Rational kernel_eval(const KernelSpec& spec, int n, int k, const QContext& ctx, PathOrder order) {
    if (n < 0 || k < 0) throw PreconditionError("kernel_eval: n and k must be >= 0");
    KernelWalker w(spec, ctx);
    if (order == PathOrder::NFirst) {
        while (w.n() < n) w.step_n();
        while (w.k() < k) w.step_k();
    } else {
        while (w.k() < k) w.step_k();
        while (w.n() < n) w.step_n();
    }
    return w.value();
}

KernelSpec bbb_kernel(const Rational& a, const QContext& ctx) {
    ctx.require_unit_interval("bbb_kernel");
    if (!(a.abs() < Rational(1))) throw PreconditionError("bbb_kernel: requires |a| < 1");
    const Rational& q = ctx.q();
    const Rational one_q = Rational(1) - q;
    const Rational c2 = a * a * q * q * one_q * one_q;
    const BiPoly x = BiPoly::x(), y = BiPoly::y();

    const BiPoly d = pow(Rational(1) - q * q * x * y, 2) - c2 * q * q * pow(x, 2) * pow(y, 2);
    KernelSpec s;
    s.name = "bbb[a=" + a.to_string() + "]";
    s.q = q;
    s.ratio_n = {pow(y, 2), d};
    s.ratio_k = {q * pow(x, 2) * (pow(Rational(1) - q * y, 2) - c2 * pow(y, 2)), d};
    s.base = (one_q * one_q - c2).inverse();
    s.regime = Regime::Inside;
    return s;
}

KernelSpec zeta3_kernel(const QContext& ctx) {
    ctx.require_outside("zeta3_kernel");
    const Rational& q = ctx.q();
    const BiPoly x = BiPoly::x(), y = BiPoly::y();
    const BiPoly lead = pow(Rational(1) - q * x * y, 2);
    const BiPoly shifted = pow(Rational(1) - q * q * x * y, 2);
    const BiPoly first = Rational(1) - q * q * pow(x, 2) * y;

    KernelSpec s;
    s.name = "zeta3";
    s.q = q;
    s.ratio_n = {lead, first * (Rational(1) - q * q * q * pow(x, 2) * y) * shifted};
    s.ratio_k = {q * (Rational(1) - q * y) * lead, first * shifted};
    s.base = (Rational(1) - q).pow(3).inverse();
    s.regime = Regime::Outside;
    return s;
}

RationalFunction2 zeta3_mate_weight(const QContext& ctx) {
    const Rational& q = ctx.q();
    const BiPoly x = BiPoly::x(), y = BiPoly::y();
    return {BiPoly::constant(1), y * (Rational(1) - q * q * pow(x, 2) * y)};
}

}  // namespace qzeta::wz
