#include <algorithm>
#include <memory>
#include <optional>

#include "qzeta/errors.hpp"
#include "qzeta/wz.hpp"

namespace qzeta::wz {

namespace {

// Shared state for a stream that owns a walker over the pair's kernel.
struct Stream {
    Stream(const MWZPair& p, const QContext& c) : pair(p), ctx(c), walk(pair.kernel, ctx) {}
    MWZPair pair;
    QContext ctx;
    KernelWalker walk;
    bool started = false;
};

// sum_k F(row, k) for k >= from, as absolute values.
TermSource row_terms(const MWZPair& pair, int row, int from, const QContext& ctx, bool absolute) {
    auto st = std::make_shared<Stream>(pair, ctx);
    TermSource src;
    src.rule = TailRule::RatioEstimate;
    src.next = [st, row, from, absolute] {
        if (!st->started) {
            st->walk = KernelWalker(st->pair.kernel, st->ctx);
            while (st->walk.n() < row) st->walk.step_n();
            while (st->walk.k() < from) st->walk.step_k();
            st->started = true;
        } else {
            st->walk.step_k();
        }
        Rational t = st->walk.value() * st->pair.f_cofactor(row, st->walk.k(), st->ctx);
        return absolute ? t.abs() : t;
    };
    return src;
}

// sum_{n < rows} |G(n, K)|.
Rational column_mass(const MWZPair& pair, int K, int rows, const QContext& ctx) {
    KernelWalker w(pair.kernel, ctx);
    while (w.k() < K) w.step_k();
    Rational m = 0;
    for (int n = 0; n < rows; ++n) {
        if (n > 0) w.step_n();
        m += (w.value() * pair.g_cofactor(n, K, ctx)).abs();
    }
    return m;
}

// Doubles a boundary index from 8 until each boundary term is below the error
// budget: sum_{n<g_rows_used} |G(n,K)| in K, and sum_{k>=from(L)} |F(sL,k)| in L.
void check_boundary(FormulaSums& out, const MWZPair& pair, int s, bool diagonal, int g_rows_used,
                    const QContext& ctx) {
    const Rational budget = ctx.tolerance();
    const int g_rows = std::min(g_rows_used, pair.g_rows());

    std::optional<Rational> g;
    int K = 8;
    for (; K <= ctx.max_terms(); K *= 2) {
        Rational m = column_mass(pair, K, g_rows, ctx);
        if (m < budget) {
            g = std::move(m);
            break;
        }
    }
    if (!g) throw NonVanishingBoundary("sum_n |G(n,K)| stays above the error budget up to K=" + std::to_string(K / 2));

    std::optional<Rational> f;
    int L = 8;
    for (; s * L < pair.f_rows(); L *= 2) {
        try {
            Rational m = sum_to_tolerance(row_terms(pair, s * L, diagonal ? L : 0, ctx, true), budget / 4, ctx).value;
            if (m < budget) {
                f = std::move(m);
                break;
            }
        } catch (const BudgetExhausted&) {
        }
    }
    if (!f)
        throw NonVanishingBoundary("sum_k |F(L,k)| stays above the error budget for every L in the tables (" +
                                   std::to_string(pair.f_rows()) + " rows)");
    out.boundary = max(*f, *g);
    out.boundary_index = std::max(K, L);
}

}  // namespace

TermSource formula_lhs_terms(const MWZPair& pair, const QContext& ctx) {
    pair.kernel.require_context(ctx);
    return row_terms(pair, 0, 0, ctx, false);
}

TermSource formula_rhs_terms_i(const MWZPair& pair, const QContext& ctx) {
    pair.kernel.require_context(ctx);
    auto st = std::make_shared<Stream>(pair, ctx);
    TermSource src;
    src.rule = TailRule::RatioEstimate;
    src.next = [st] {
        if (st->started) st->walk.step_n();
        st->started = true;
        const int n = st->walk.n();
        return st->walk.value() * st->pair.g_cofactor(n, 0, st->ctx);
    };
    return src;
}

TermSource formula_rhs_terms_s(const MWZPair& pair, int s, const QContext& ctx) {
    if (s < 1) throw PreconditionError("sum_formula_s: s must be >= 1");
    pair.kernel.require_context(ctx);
    auto st = std::make_shared<Stream>(pair, ctx);
    TermSource src;
    src.rule = TailRule::RatioEstimate;
    // The walker sits at (sn, n) before each term and at (s(n+1), n+1) after it.
    src.next = [st, s] {
        auto& w = st->walk;
        const int n = w.k();
        Rational t = w.value() * st->pair.f_cofactor(s * n, n, st->ctx);
        w.step_k();
        for (int i = 0; i < s; ++i) {
            if (i > 0) w.step_n();
            t += w.value() * st->pair.g_cofactor(s * n + i, n + 1, st->ctx);
        }
        w.step_n();
        return t;
    };
    return src;
}

FormulaSums sum_formula_i(const MWZPair& pair, const QContext& ctx) {
    FormulaSums out;
    out.lhs = sum_to_tolerance(formula_lhs_terms(pair, ctx), ctx);
    out.rhs = sum_to_tolerance(formula_rhs_terms_i(pair, ctx), ctx);
    check_boundary(out, pair, 1, false, out.rhs.terms_used + 1, ctx);
    return out;
}

FormulaSums sum_formula_ii(const MWZPair& pair, const QContext& ctx) { return sum_formula_s(pair, 1, ctx); }

FormulaSums sum_formula_s(const MWZPair& pair, int s, const QContext& ctx) {
    FormulaSums out;
    out.lhs = sum_to_tolerance(formula_lhs_terms(pair, ctx), ctx);
    out.rhs = sum_to_tolerance(formula_rhs_terms_s(pair, s, ctx), ctx);
    check_boundary(out, pair, s, true, s * (out.rhs.terms_used + 1), ctx);
    return out;
}

}  // namespace qzeta::wz
