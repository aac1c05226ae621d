#include "heron/linalg.hpp"

#include <algorithm>

namespace heron {

namespace {

size_t bit_size(const Int& n) { return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2); }

}  // namespace

std::vector<std::vector<Rat>> nullspace(const RatMatrix& m) {
    const size_t rows = m.rows, cols = m.cols;

    // Clear denominators per row; elimination then stays in Z (Bareiss).
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (size_t i = 0; i < rows; ++i) {
        Int l = 1;
        for (size_t j = 0; j < cols; ++j) l = lcm(l, den(m.at(i, j)));
        for (size_t j = 0; j < cols; ++j) a[i][j] = num(m.at(i, j)) * (l / den(m.at(i, j)));
    }

    std::vector<size_t> pivot_col;
    Int prev_pivot = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // pick the nonzero pivot of minimal bit length to slow coefficient growth
        size_t best = rows;
        for (size_t i = r; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            if (best == rows || bit_size(a[i][c]) < bit_size(a[best][c])) best = i;
        }
        if (best == rows) continue;
        std::swap(a[r], a[best]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            for (size_t j = 0; j < cols; ++j) {
                if (j == c) continue;
                Int t = a[i][j] * a[r][c] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev_pivot = a[r][c];
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[fc] = 1;
        // rows are in echelon form (not reduced); back-substitute
        for (size_t i = pivot_col.size(); i-- > 0;) {
            size_t pc = pivot_col[i];
            Rat s(0);
            for (size_t j = pc + 1; j < cols; ++j)
                if (v[j] != 0 && a[i][j] != 0) s += Rat(a[i][j]) * v[j];
            v[pc] = -s / Rat(a[i][pc]);
        }
        for (const auto& x : v) {
            if (x != 0) {
                Rat lead = x;
                for (auto& y : v) y /= lead;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace heron
