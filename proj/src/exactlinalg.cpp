#include "kostant/exactlinalg.hpp"

#include <utility>

#include "kostant/types.hpp"

namespace kostant {

namespace {

Int exact_div(const Int& num, const Int& den) {
    Int q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw InternalInconsistency("inexact division in fraction-free elimination");
    return q;
}

void swap_rows(IMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

}  // namespace

int rank_ff(IMatrix m) {
    Int prev = 1;
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pr = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        swap_rows(m, rank, pr);
        const Int piv = m.at(rank, col);
        for (int r = rank + 1; r < m.rows; ++r) {
            const Int head = m.at(r, col);
            for (int j = col + 1; j < m.cols; ++j)
                m.at(r, j) = exact_div(piv * m.at(r, j) - head * m.at(rank, j), prev);
            m.at(r, col) = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Int>> kernel_ff(IMatrix m) {
    Int prev = 1;
    std::vector<std::pair<int, int>> pivots;  // (row, col)
    std::vector<char> is_pivot_col(m.cols, 0);
    int next_row = 0;
    for (int col = 0; col < m.cols && next_row < m.rows; ++col) {
        int pr = -1;
        for (int r = next_row; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        swap_rows(m, next_row, pr);
        const Int piv = m.at(next_row, col);
        for (int r = 0; r < m.rows; ++r) {
            if (r == next_row) continue;
            const Int head = m.at(r, col);
            for (int j = 0; j < m.cols; ++j) {
                if (j == col) continue;
                m.at(r, j) = exact_div(piv * m.at(r, j) - head * m.at(next_row, j), prev);
            }
            m.at(r, col) = 0;
        }
        prev = piv;
        pivots.emplace_back(next_row, col);
        is_pivot_col[col] = 1;
        ++next_row;
    }

    /* after the two-sided sweep every pivot entry equals the last pivot, so
     * setting the free coordinate to it makes all rows cancel exactly */
    std::vector<std::vector<Int>> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot_col[f]) continue;
        std::vector<Int> v(m.cols, 0);
        v[f] = prev;
        for (const auto& [r, c] : pivots) v[c] = -m.at(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace kostant
