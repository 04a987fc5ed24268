#include "doldkit/lefschetz.hpp"

#include <stdexcept>

#include "doldkit/linalg.hpp"

namespace doldkit {

namespace {

Rat hankel_det(const HankelWindow& w, std::size_t m) {
  const std::size_t k = m + 1;
  std::vector<Rat> entries(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) entries[i * k + j] = w[i + j];
  }
  return rational_determinant(entries, k);
}

}  // namespace

HankelWindow HankelWindow::from_integers(const std::vector<long>& values) {
  std::vector<Rat> v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return HankelWindow(std::move(v));
}

HankelWindow HankelWindow::from_generating(const RatSeqPrefix& c) {
  return HankelWindow(std::vector<Rat>(c.values().begin(), c.values().end()));
}

SeqPrefix lefschetz_sequence(const IntMatrix& A, const IntMatrix& B, std::size_t N) {
  const SeqPrefix ta = trace_sequence(A, N);
  const SeqPrefix tb = trace_sequence(B, N);
  std::vector<Int> v;
  v.reserve(N);
  for (std::size_t n = 1; n <= N; ++n) v.push_back(ta(n) - tb(n));
  return SeqPrefix(std::move(v));
}

std::vector<Rat> hankel_dets(const HankelWindow& w, std::size_t m_max) {
  if (w.size() < 2 * m_max + 1) throw ShortWindow(w.size(), 2 * m_max + 1);
  std::vector<Rat> dets;
  dets.reserve(m_max + 1);
  for (std::size_t m = 0; m <= m_max; ++m) dets.push_back(hankel_det(w, m));
  return dets;
}

CongruenceVerdict hankel_vanishing(const HankelWindow& w, std::size_t bound, std::size_t width) {
  const std::size_t top = bound + width;
  if (w.size() < 2 * top + 1) throw ShortWindow(w.size(), 2 * top + 1);
  for (std::size_t m = bound; m <= top; ++m) {
    Rat delta = hankel_det(w, m);
    if (delta != 0) return CongruenceVerdict::fails(m, std::move(delta));
  }
  return CongruenceVerdict::holds(top);
}

CongruenceVerdict generating_hankel_test(const SeqPrefix& a, std::size_t bound, std::size_t width) {
  const std::size_t need = 2 * (bound + width) + 1;
  if (a.size() < need) throw ShortWindow(a.size(), need);
  return hankel_vanishing(HankelWindow::from_generating(transform_C(a)), bound, width);
}

std::optional<Recurrence> recurrence_detect(const HankelWindow& w, std::size_t p_max) {
  const std::size_t L = w.size();
  if (L < 2 * p_max + 1) throw ShortWindow(L, 2 * p_max + 1);
  for (std::size_t p = 0; p <= p_max; ++p) {
    const std::size_t rows = L - p;
    std::vector<Rat> system(rows * p);
    std::vector<Rat> rhs(rows);
    for (std::size_t n = 0; n < rows; ++n) {
      for (std::size_t i = 0; i < p; ++i) system[n * p + i] = w[n + i];
      rhs[n] = w[n + p];
    }
    auto alpha = solve_exact(std::move(system), std::move(rhs), rows, p);
    if (alpha) return Recurrence{p, std::move(*alpha)};
  }
  return std::nullopt;
}

IntMatrix cyclic_block(std::size_t k) {
  IntMatrix m = IntMatrix::zero(k);
  if (k == 0) return m;
  m(0, k - 1) = 1;
  for (std::size_t i = 1; i < k; ++i) m(i, i - 1) = 1;
  return m;
}

std::pair<IntMatrix, IntMatrix> periodic_to_matrices(const PeriodicCombination& comb) {
  std::vector<IntMatrix> positive;
  std::vector<IntMatrix> negative;
  for (const auto& [d, c] : comb.coeffs()) {
    const Int copies = abs(c);
    if (!copies.fits_ulong_p()) throw std::length_error("periodic_to_matrices: coefficient too large");
    auto& target = c > 0 ? positive : negative;
    for (unsigned long i = 0; i < copies.get_ui(); ++i) target.push_back(cyclic_block(d));
  }
  return {block_diagonal(positive), block_diagonal(negative)};
}

}  // namespace doldkit
