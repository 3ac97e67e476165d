#pragma once

#include <vector>

#include "qzeta/rational.hpp"

namespace qzeta {

using Matrix = std::vector<std::vector<Rational>>;

struct LinearSolution {
    enum class Kind { Unique, Underdetermined, Inconsistent };
    Kind kind = Kind::Inconsistent;
    std::vector<Rational> particular;          // free variables set to zero
    std::vector<std::vector<Rational>> basis;  // nullspace basis, empty when unique
    int rank = 0;
};

/// Solves A u = b exactly by Gauss-Jordan elimination. Every row of A must
/// have `unknowns` entries.
LinearSolution solve_exact(Matrix A, std::vector<Rational> b, std::size_t unknowns);

}  // namespace qzeta
