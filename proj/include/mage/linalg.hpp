#pragma once

#include "mage/errors.hpp"
#include "mage/rational.hpp"

#include <atomic>
#include <cstddef>
#include <optional>
#include <vector>

namespace mage {

// Dense matrix of exact rationals. Sizes stay small (tens to a few hundred
// columns), so plain Gauss-Jordan over normalized rationals is both exact and
// fast enough; no fraction-free bookkeeping is needed.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

struct RrefResult {
    QMatrix m;
    std::vector<std::size_t> pivot_cols; // ascending; pivot_cols[i] belongs to row i
};

// Reduced row echelon form with deterministic first-nonzero pivoting.
// `cancel`, when set, is polled between pivots and aborts long eliminations.
RrefResult rref(QMatrix m, const std::atomic<bool>* cancel = nullptr);

std::size_t rank(const QMatrix& m);

// Exact basis of {x : Mx = 0}; empty iff the kernel is trivial. Each basis
// vector has a 1 in one free column and zeros in the others (the canonical
// RREF kernel basis), so the result is deterministic.
std::vector<std::vector<Rational>> nullspace(const QMatrix& m,
                                             const std::atomic<bool>* cancel = nullptr);

// One exact solution of Mx = rhs with all free variables set to zero, or
// nullopt when the system is inconsistent. V needs +, -, scaling by Rational
// and value-initialized zero; it is used with Rational scalars and with whole
// polynomials as the right-hand side (the matrices arising from the
// constant-coefficient structure maps are rational even when the unknowns
// are polynomial).
template <class V>
std::optional<std::vector<V>> solve(const QMatrix& m0, std::vector<V> rhs,
                                    const std::atomic<bool>* cancel = nullptr) {
    QMatrix m = m0;
    const std::size_t R = m.rows(), C = m.cols();
    if (rhs.size() != R) throw Error("solve: rhs size does not match row count");
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        if (cancel && cancel->load()) throw OperationCancelled();
        std::size_t pr = row;
        while (pr < R && m.at(pr, col) == 0) ++pr;
        if (pr == R) continue;
        if (pr != row) {
            for (std::size_t c = col; c < C; ++c) std::swap(m.at(pr, c), m.at(row, c));
            std::swap(rhs[pr], rhs[row]);
        }
        const Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t c = col; c < C; ++c) m.at(row, c) *= inv;
        rhs[row] = rhs[row] * inv;
        for (std::size_t r = 0; r < R; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            const Rational f = m.at(r, col);
            for (std::size_t c = col; c < C; ++c) m.at(r, c) -= f * m.at(row, c);
            rhs[r] = rhs[r] - rhs[row] * f;
        }
        pivot_cols.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < R; ++r)
        if (!(rhs[r] == V{})) return std::nullopt;
    std::vector<V> x(C);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = rhs[i];
    return x;
}

} // namespace mage
