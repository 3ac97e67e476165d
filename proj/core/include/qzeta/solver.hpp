#pragma once

#include <optional>
#include <vector>

#include "qzeta/wz.hpp"

namespace qzeta::wz {

/// Output of the per-n ansatz solver. a[n] holds (a_0(n), ..., a_L1(n)) for
/// n <= Nmax and b[n] holds (b_0(n), ..., b_L2(n)) for n < Nmax.
struct StepSolution {
    CoeffTable a;
    CoeffTable b;
    bool complete = true;
    /// When !complete: the step n at which more than one solution exists,
    /// one solution (free unknowns zero) and a basis of the homogeneous part.
    /// Unknowns are ordered (a_0(n+1), ..., a_L1(n+1), b_0(n), ..., b_L2(n)).
    int stopped_at = -1;
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> basis;
};

/// For n = 0..Nmax-1, finds a(n+1) and b(n) with
///   F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k),
///   F = H sum_i a_i(n) y^i,  G = H w(x,y) sum_j b_j(n) y^j,
/// by clearing denominators in y and matching coefficients. w defaults to 1.
/// Throws InconsistentSystem carrying the failing n when no solution exists.
StepSolution step_solve(const KernelSpec& kernel, int L1, int L2, const std::vector<Rational>& init,
                        const QContext& ctx, int n_max,
                        const std::optional<RationalFunction2>& weight = std::nullopt);

/// Wraps a complete solution as a pair with polynomial mate tables.
MWZPair to_pair(const KernelSpec& kernel, const StepSolution& sol, int L1, int L2,
                const std::optional<RationalFunction2>& weight = std::nullopt);

}  // namespace qzeta::wz
