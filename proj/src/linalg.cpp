#include "mage/linalg.hpp"

namespace mage {

RrefResult rref(QMatrix m, const std::atomic<bool>* cancel) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        if (cancel && cancel->load()) throw OperationCancelled();
        std::size_t pr = row;
        while (pr < R && m.at(pr, col) == 0) ++pr;
        if (pr == R) continue;
        if (pr != row)
            for (std::size_t c = col; c < C; ++c) std::swap(m.at(pr, c), m.at(row, c));
        const Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t c = col; c < C; ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < R; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            const Rational f = m.at(r, col);
            for (std::size_t c = col; c < C; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivot_cols)};
}

std::size_t rank(const QMatrix& m) { return rref(m).pivot_cols.size(); }

std::vector<std::vector<Rational>> nullspace(const QMatrix& m, const std::atomic<bool>* cancel) {
    const auto r = rref(m, cancel);
    const std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(C, Rational(0));
        x[f] = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) x[r.pivot_cols[i]] = -r.m.at(i, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace mage
