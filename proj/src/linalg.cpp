#include "doldkit/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace doldkit {

Int bareiss_determinant(std::vector<Int> a, std::size_t k) {
  if (a.size() != k * k) throw std::invalid_argument("bareiss_determinant: shape mismatch");
  if (k == 0) return 1;
  auto at = [&](std::size_t i, std::size_t j) -> Int& { return a[i * k + j]; };
  Int prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c + 1 < k; ++c) {
    if (at(c, c) == 0) {
      std::size_t r = c + 1;
      while (r < k && at(r, c) == 0) ++r;
      if (r == k) return 0;
      for (std::size_t j = 0; j < k; ++j) std::swap(at(c, j), at(r, j));
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < k; ++i) {
      for (std::size_t j = c + 1; j < k; ++j) {
        Int t = at(c, c) * at(i, j) - at(i, c) * at(c, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(c, c);
  }
  Int det = at(k - 1, k - 1);
  return sign > 0 ? det : Int(-det);
}

Rat rational_determinant(const std::vector<Rat>& entries, std::size_t k) {
  if (entries.size() != k * k) throw std::invalid_argument("rational_determinant: shape mismatch");
  std::vector<Int> scaled(k * k);
  Int scale = 1;
  for (std::size_t i = 0; i < k; ++i) {
    Int row_lcm = 1;
    for (std::size_t j = 0; j < k; ++j) row_lcm = lcm(row_lcm, entries[i * k + j].get_den());
    scale *= row_lcm;
    for (std::size_t j = 0; j < k; ++j) {
      const Rat& q = entries[i * k + j];
      scaled[i * k + j] = q.get_num() * (row_lcm / q.get_den());
    }
  }
  return ratio(bareiss_determinant(std::move(scaled), k), scale);
}

std::optional<std::vector<Rat>> solve_exact(std::vector<Rat> a, std::vector<Rat> b, std::size_t m,
                                            std::size_t n) {
  if (a.size() != m * n || b.size() != m) throw std::invalid_argument("solve_exact: shape mismatch");
  auto at = [&](std::size_t i, std::size_t j) -> Rat& { return a[i * n + j]; };
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && at(p, col) == 0) ++p;
    if (p == m) continue;
    if (p != row) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(p, j), at(row, j));
      std::swap(b[p], b[row]);
    }
    const Rat inv = 1 / at(row, col);
    for (std::size_t j = col; j < n; ++j) at(row, j) *= inv;
    b[row] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || at(i, col) == 0) continue;
      const Rat factor = at(i, col);
      for (std::size_t j = col; j < n; ++j) at(i, j) -= factor * at(row, j);
      b[i] -= factor * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  std::vector<Rat> x(n, Rat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace doldkit
