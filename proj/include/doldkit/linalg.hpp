#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "doldkit/arith.hpp"

namespace doldkit {

/// Determinant of a k x k integer matrix (row-major) by fraction-free
/// Bareiss elimination. Every intermediate division is exact.
Int bareiss_determinant(std::vector<Int> entries, std::size_t k);

/// Determinant of a rational matrix: denominators are cleared row by row,
/// the integer determinant is taken with Bareiss, then rescaled.
Rat rational_determinant(const std::vector<Rat>& entries, std::size_t k);

/// Solves rows * x = rhs over Q (rows is m x n, row-major). Returns one
/// solution (free variables set to zero) or nullopt if inconsistent.
std::optional<std::vector<Rat>> solve_exact(std::vector<Rat> rows, std::vector<Rat> rhs,
                                            std::size_t m, std::size_t n);

}  // namespace doldkit
