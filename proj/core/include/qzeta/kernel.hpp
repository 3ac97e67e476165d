#pragma once

#include <optional>
#include <string>

#include "qzeta/context.hpp"
#include "qzeta/poly.hpp"

namespace qzeta::wz {

/// A q-hypergeometric term H(n, k) given by its shift quotients as rational
/// functions of x = q^n and y = q^k, for one fixed value of q.
struct KernelSpec {
    std::string name;
    Rational q;
    RationalFunction2 ratio_n;  // H(n+1, k) / H(n, k)
    RationalFunction2 ratio_k;  // H(n, k+1) / H(n, k)
    Rational base;              // H(0, 0)
    Regime regime = Regime::Inside;

    /// Throws PreconditionError when ctx carries a different q.
    void require_context(const QContext& ctx) const;
};

struct GridPoint {
    int n = 0;
    int k = 0;
};

/// First lattice point with ratio_n(x, qy) ratio_k(x, y) != ratio_k(qx, y) ratio_n(x, y),
/// for 0 <= n, k < grid.
std::optional<GridPoint> compatibility_defect(const KernelSpec& spec, int grid, const QContext& ctx);

/// Moves H(n, k) around the lattice one unit step at a time.
class KernelWalker {
public:
    KernelWalker(const KernelSpec& spec, const QContext& ctx);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    const Rational& value() const noexcept { return h_; }

    void step_n();
    void step_k();

private:
    const KernelSpec* spec_;
    QContext ctx_;
    int n_ = 0;
    int k_ = 0;
    Rational h_;
};

enum class PathOrder { NFirst, KFirst };

/// H(n, k) as the product of ratios along a lattice path from (0, 0).
Rational kernel_eval(const KernelSpec& spec, int n, int k, const QContext& ctx,
                     PathOrder order = PathOrder::NFirst);

/// The kernel q^{k(2n+1)} (q+c;q)_k (q-c;q)_k / ((q+c;q)_{n+k+1} (q-c;q)_{n+k+1}),
/// c = a q (1-q). Requires 0 < q < 1 and |a| < 1.
KernelSpec bbb_kernel(const Rational& a, const QContext& ctx);

/// (q;q)_k q^k / ((q;q)_{2n+k+1} (1 - q^{n+k+1})^2). Requires |q| > 1.
KernelSpec zeta3_kernel(const QContext& ctx);

/// 1 / (y (1 - q^2 x^2 y)): the common denominator of the zeta[3] mates.
RationalFunction2 zeta3_mate_weight(const QContext& ctx);

}  // namespace qzeta::wz
