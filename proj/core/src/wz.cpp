#include "qzeta/wz.hpp"

#include "qzeta/errors.hpp"

namespace qzeta::wz {

int MWZPair::g_rows() const noexcept {
    return mate ? static_cast<int>(p_coeffs.size()) : static_cast<int>(q_coeffs.size());
}

namespace {

void require_row(int n, int rows, const char* what) {
    if (n < 0 || n >= rows)
        throw BudgetExhausted(std::string(what) + ": coefficient table covers n < " + std::to_string(rows) +
                              ", asked for n=" + std::to_string(n));
}

Rational horner(const std::vector<Rational>& c, const Rational& y) {
    Rational r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * y + *it;
    return r;
}

// H(n, k) for n <= rows, k <= cols.
std::vector<std::vector<Rational>> kernel_table(const KernelSpec& spec, int rows, int cols, const QContext& ctx) {
    std::vector<std::vector<Rational>> h(static_cast<std::size_t>(rows) + 1);
    Rational head = spec.base;
    for (int n = 0; n <= rows; ++n) {
        const Rational x = ctx.power(n);
        auto& row = h[static_cast<std::size_t>(n)];
        row.reserve(static_cast<std::size_t>(cols) + 1);
        row.push_back(head);
        for (int k = 0; k < cols; ++k) row.push_back(row.back() * spec.ratio_k(x, ctx.power(k)));
        head *= spec.ratio_n(x, Rational(1));
    }
    return h;
}

}  // namespace

Rational MWZPair::f_cofactor(int n, int k, const QContext& ctx) const {
    require_row(n, f_rows(), "F");
    return horner(p_coeffs[static_cast<std::size_t>(n)], ctx.power(k));
}

Rational MWZPair::g_cofactor(int n, int k, const QContext& ctx) const {
    require_row(n, g_rows(), "G");
    if (mate) return mate(n, k);
    const Rational y = ctx.power(k);
    Rational m = horner(q_coeffs[static_cast<std::size_t>(n)], y);
    if (mate_weight) m *= (*mate_weight)(ctx.power(n), y);
    return m;
}

Rational MWZPair::F(int n, int k, const QContext& ctx) const {
    return kernel_eval(kernel, n, k, ctx) * f_cofactor(n, k, ctx);
}

Rational MWZPair::G(int n, int k, const QContext& ctx) const {
    return kernel_eval(kernel, n, k, ctx) * g_cofactor(n, k, ctx);
}

Residual telescope_residual(const MWZPair& pair, int N, int K, const QContext& ctx) {
    return telescope_residual_s(pair, 1, N, K, ctx);
}

Residual telescope_residual_s(const MWZPair& pair, int s, int N, int K, const QContext& ctx) {
    if (s < 1) throw PreconditionError("telescope_residual: s must be >= 1");
    if (N < 0 || K < 0) throw PreconditionError("telescope_residual: grid must be non-negative");
    pair.kernel.require_context(ctx);
    if (N > 0 && (s * N >= pair.f_rows() || s * N > pair.g_rows()))
        throw PreconditionError("telescope_residual: tables too short for grid N=" + std::to_string(N) +
                                " with s=" + std::to_string(s));

    const auto h = kernel_table(pair.kernel, s * N, K, ctx);
    auto H = [&](int n, int k) -> const Rational& { return h[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]; };
    auto Fs = [&](int n, int k) { return H(s * n, k) * pair.f_cofactor(s * n, k, ctx); };
    auto Gs = [&](int n, int k) {
        Rational g = 0;
        for (int i = 0; i < s; ++i) g += H(s * n + i, k) * pair.g_cofactor(s * n + i, k, ctx);
        return g;
    };

    Residual r;
    r.max_abs = 0;
    for (int n = 0; n < N; ++n) {
        for (int k = 0; k < K; ++k) {
            const Rational d = (Fs(n + 1, k) - Fs(n, k) - Gs(n, k + 1) + Gs(n, k)).abs();
            ++r.points;
            if (d > r.max_abs) {
                r.max_abs = d;
                r.at = {n, k};
            }
        }
    }
    return r;
}

}  // namespace qzeta::wz
