#include "qzeta/solver.hpp"

#include "qzeta/errors.hpp"
#include "qzeta/linear_system.hpp"

namespace qzeta::wz {

namespace {

struct Fraction1 {
    Poly num;
    Poly den;
};

Fraction1 at_x(const RationalFunction2& f, const Rational& x) { return {f.num.at_x(x), f.den.at_x(x)}; }

// L * num / den as a polynomial; den must divide L * num.
Poly cleared(const Poly& L, const Poly& num, const Poly& den) {
    auto [quot, rem] = divmod(L * num, den);
    if (!rem.is_zero()) throw VerificationError("step_solve: denominator does not divide the common multiple");
    return quot;
}

}  // namespace

StepSolution step_solve(const KernelSpec& kernel, int L1, int L2, const std::vector<Rational>& init,
                        const QContext& ctx, int n_max, const std::optional<RationalFunction2>& weight) {
    kernel.require_context(ctx);
    if (L1 < 0 || L2 < 0) throw PreconditionError("step_solve: degrees must be >= 0");
    if (static_cast<int>(init.size()) != L1 + 1)
        throw PreconditionError("step_solve: init needs L1+1 = " + std::to_string(L1 + 1) + " entries");
    bool nonzero = false;
    for (const auto& v : init) nonzero = nonzero || !v.is_zero();
    if (!nonzero) throw PreconditionError("step_solve: init must not be all zero");
    if (n_max < 0) throw PreconditionError("step_solve: n_max must be >= 0");

    const Rational& q = ctx.q();
    const RationalFunction2 w = weight.value_or(RationalFunction2{});
    const std::size_t unknowns = static_cast<std::size_t>(L1 + 1 + L2 + 1);

    StepSolution out;
    out.a.push_back(init);
    for (int n = 0; n < n_max; ++n) {
        const Rational x = ctx.power(n);
        const Fraction1 rn = at_x(kernel.ratio_n, x);
        const Fraction1 rk = at_x(kernel.ratio_k, x);
        const Fraction1 wy = at_x(w, x);
        const Fraction1 wqy{wy.num.scaled_arg(q), wy.den.scaled_arg(q)};
        // ratio_k(x,y) w(x,qy) = shift_num / shift_den
        const Poly shift_num = rk.num * wqy.num;
        const Poly shift_den = rk.den * wqy.den;
        const Poly L = lcm(lcm(rn.den, shift_den), wy.den);

        const Poly cn = cleared(L, rn.num, rn.den);
        const Poly cs = cleared(L, shift_num, shift_den);
        const Poly cw = cleared(L, wy.num, wy.den);

        // ratio_n P1(y) - P0(y) - ratio_k w(qy) Q(qy) + w(y) Q(y) = 0, times L.
        std::vector<Poly> columns;
        for (int i = 0; i <= L1; ++i) columns.push_back(cn * Poly::monomial(1, i));
        for (int j = 0; j <= L2; ++j)
            columns.push_back(cw * Poly::monomial(1, j) - cs * Poly::monomial(q.pow(j), j));
        Poly known;
        for (int i = 0; i <= L1; ++i) known += Poly::monomial(out.a.back()[static_cast<std::size_t>(i)], i);
        known *= L;

        int deg = known.degree();
        for (const auto& c : columns) deg = std::max(deg, c.degree());
        Matrix A(static_cast<std::size_t>(deg + 1), std::vector<Rational>(unknowns, Rational(0)));
        std::vector<Rational> rhs(static_cast<std::size_t>(deg + 1), Rational(0));
        for (int d = 0; d <= deg; ++d) {
            for (std::size_t u = 0; u < unknowns; ++u) A[static_cast<std::size_t>(d)][u] = columns[u].coeff(d);
            rhs[static_cast<std::size_t>(d)] = known.coeff(d);
        }

        LinearSolution sol = solve_exact(std::move(A), std::move(rhs), unknowns);
        if (sol.kind == LinearSolution::Kind::Inconsistent)
            throw InconsistentSystem(n, "step_solve: no solution with L1=" + std::to_string(L1) +
                                            ", L2=" + std::to_string(L2) + " at n=" + std::to_string(n) +
                                            " (" + std::to_string(deg + 1) + " equations, " +
                                            std::to_string(unknowns) + " unknowns)");
        if (sol.kind == LinearSolution::Kind::Underdetermined) {
            out.complete = false;
            out.stopped_at = n;
            out.particular = std::move(sol.particular);
            out.basis = std::move(sol.basis);
            return out;
        }
        const auto& u = sol.particular;
        out.a.emplace_back(u.begin(), u.begin() + L1 + 1);
        out.b.emplace_back(u.begin() + L1 + 1, u.end());
    }
    return out;
}

MWZPair to_pair(const KernelSpec& kernel, const StepSolution& sol, int L1, int L2,
                const std::optional<RationalFunction2>& weight) {
    if (!sol.complete) throw PreconditionError("to_pair: the solution stopped at an underdetermined step");
    MWZPair p;
    p.kernel = kernel;
    p.L1 = L1;
    p.L2 = L2;
    p.p_coeffs = sol.a;
    p.q_coeffs = sol.b;
    p.mate_weight = weight;
    return p;
}

}  // namespace qzeta::wz
