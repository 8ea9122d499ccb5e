#pragma once

#include "bms/poly.hpp"

#include <vector>

namespace bms {

/// Dense rectangular matrix of exact polynomials.
struct PolyMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Poly> entries;  // row-major

    PolyMatrix() = default;
    PolyMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    Poly& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const Poly& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// Exact determinant by fraction-free (Bareiss) elimination: every division
/// performed is exact in the polynomial ring. Throws on non-square input.
Poly det_fraction_free(const PolyMatrix& m);

/// Rank of the matrix specialized at the given point, by exact Gaussian
/// elimination over Q. The assignment must cover every variable occurring.
std::size_t rank_at(const PolyMatrix& m, const std::map<Var, Rational>& assignment);

/// Rational dense matrix utilities used by the module-level checks.
using RatMatrix = std::vector<std::vector<Rational>>;

std::size_t rat_rank(RatMatrix m);
Rational rat_det(RatMatrix m);

/// Basis of the right nullspace {x : m x = 0}, each vector normalized so its
/// first nonzero entry is 1.
std::vector<std::vector<Rational>> rat_nullspace(const RatMatrix& m, std::size_t cols);

}  // namespace bms
