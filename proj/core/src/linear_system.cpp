#include "qzeta/linear_system.hpp"

#include "qzeta/errors.hpp"

namespace qzeta {

LinearSolution solve_exact(Matrix A, std::vector<Rational> b, std::size_t unknowns) {
    if (A.size() != b.size()) throw PreconditionError("solve_exact: row count mismatch");
    for (const auto& row : A)
        if (row.size() != unknowns) throw PreconditionError("solve_exact: ragged matrix");

    const std::size_t rows = A.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < unknowns && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && A[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(A[p], A[r]);
        std::swap(b[p], b[r]);
        const Rational inv = A[r][c].inverse();
        for (std::size_t j = c; j < unknowns; ++j) A[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c].is_zero()) continue;
            const Rational f = A[i][c];
            for (std::size_t j = c; j < unknowns; ++j) A[i][j] -= f * A[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }

    LinearSolution out;
    out.rank = static_cast<int>(r);
    for (std::size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) return out;

    out.particular.assign(unknowns, Rational(0));
    for (std::size_t i = 0; i < r; ++i) out.particular[pivot_col[i]] = b[i];

    std::vector<bool> is_pivot(unknowns, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    for (std::size_t f = 0; f < unknowns; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(unknowns, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = -A[i][f];
        out.basis.push_back(std::move(v));
    }
    out.kind = out.basis.empty() ? LinearSolution::Kind::Unique : LinearSolution::Kind::Underdetermined;
    return out;
}

}  // namespace qzeta
