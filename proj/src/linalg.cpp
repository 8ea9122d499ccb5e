#include "bms/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace bms {

Poly det_fraction_free(const PolyMatrix& m) {
    if (m.rows != m.cols)
        throw std::invalid_argument("det_fraction_free: matrix is not square");
    const std::size_t n = m.rows;
    if (n == 0)
        return Poly(Rational(1));
    PolyMatrix w = m;
    int sign = 1;
    Poly prev{Rational(1)};
    for (std::size_t kcol = 0; kcol + 1 < n; ++kcol) {
        if (w.at(kcol, kcol).is_zero()) {
            std::size_t pivot = kcol;
            while (pivot < n && w.at(pivot, kcol).is_zero())
                ++pivot;
            if (pivot == n)
                return Poly();  // zero column: singular
            for (std::size_t c = 0; c < n; ++c)
                std::swap(w.at(kcol, c), w.at(pivot, c));
            sign = -sign;
        }
        for (std::size_t i = kcol + 1; i < n; ++i) {
            for (std::size_t j = kcol + 1; j < n; ++j) {
                Poly num = w.at(i, j) * w.at(kcol, kcol) - w.at(i, kcol) * w.at(kcol, j);
                auto q = num.divide_exact(prev);
                if (!q)
                    throw std::logic_error("det_fraction_free: inexact division");
                w.at(i, j) = std::move(*q);
            }
            w.at(i, kcol) = Poly();
        }
        prev = w.at(kcol, kcol);
    }
    Poly det = w.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

std::size_t rank_at(const PolyMatrix& m, const std::map<Var, Rational>& assignment) {
    RatMatrix w(m.rows, std::vector<Rational>(m.cols));
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c)
            w[r][c] = m.at(r, c).eval(assignment);
    return rat_rank(std::move(w));
}

std::size_t rat_rank(RatMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0)
                continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t cc = c; cc < cols; ++cc)
                m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

Rational rat_det(RatMatrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != c) {
            std::swap(m[c], m[pivot]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0)
                continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t cc = c; cc < n; ++cc)
                m[r][cc] -= f * m[c][cc];
        }
    }
    return det;
}

std::vector<std::vector<Rational>> rat_nullspace(const RatMatrix& m, std::size_t cols) {
    RatMatrix w = m;
    const std::size_t rows = w.size();
    std::vector<long long> pivot_of_col(cols, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && w[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(w[rank], w[pivot]);
        Rational inv = Rational(1) / w[rank][c];
        for (std::size_t cc = 0; cc < cols; ++cc)
            w[rank][cc] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || w[r][c] == 0)
                continue;
            Rational f = w[r][c];
            for (std::size_t cc = 0; cc < cols; ++cc)
                w[r][cc] -= f * w[rank][cc];
        }
        pivot_of_col[c] = static_cast<long long>(rank);
        ++rank;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (pivot_of_col[free_c] >= 0)
            continue;
        std::vector<Rational> v(cols, 0);
        v[free_c] = 1;
        for (std::size_t c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0)
                v[c] = -w[static_cast<std::size_t>(pivot_of_col[c])][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace bms
