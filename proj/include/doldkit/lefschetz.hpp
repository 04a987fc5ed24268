#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "doldkit/arith.hpp"
#include "doldkit/dynsys.hpp"
#include "doldkit/seqkit.hpp"

namespace doldkit {

/// 0-indexed window w_0..w_L of Hankel data.
class HankelWindow {
 public:
  explicit HankelWindow(std::vector<Rat> values) : values_(std::move(values)) {}
  static HankelWindow from_integers(const std::vector<long>& values);
  /// Lays the generating sequence out from position 0: w_i = c_{1+i}.
  static HankelWindow from_generating(const RatSeqPrefix& c);

  std::size_t size() const noexcept { return values_.size(); }
  const Rat& operator[](std::size_t i) const { return values_.at(i); }
  const std::vector<Rat>& values() const noexcept { return values_; }

 private:
  std::vector<Rat> values_;
};

/// c_{n+p} = alpha_{p-1} c_{n+p-1} + ... + alpha_0 c_n for every n with
/// n + p inside the window.
struct Recurrence {
  std::size_t order = 0;
  std::vector<Rat> alpha;  // alpha_0 .. alpha_{order-1}
  friend bool operator==(const Recurrence&, const Recurrence&) = default;
};

/// trace(A^n) - trace(B^n) for n = 1..N.
SeqPrefix lefschetz_sequence(const IntMatrix& A, const IntMatrix& B, std::size_t N);

/// Delta_0..Delta_{m_max}, Delta_m = det(w_{i+j})_{0<=i,j<=m}. Needs
/// 2 * m_max + 1 window entries.
std::vector<Rat> hankel_dets(const HankelWindow& w, std::size_t m_max);

/// Verdict on Delta_m = 0 for bound <= m <= bound + width, where the Hankel
/// window is the generating sequence c = C(a) with entries c_{1+i+j}.
/// Fails(m, Delta_m) names the least non-vanishing determinant.
CongruenceVerdict generating_hankel_test(const SeqPrefix& a, std::size_t bound, std::size_t width);

/// Hankel verdict on a raw window: Delta_m = 0 for bound <= m <= bound + width.
CongruenceVerdict hankel_vanishing(const HankelWindow& w, std::size_t bound, std::size_t width);

/// Minimal-order recurrence valid across the entire window, or nullopt if
/// none of order <= p_max fits. Needs 2 * p_max + 1 window entries.
std::optional<Recurrence> recurrence_detect(const HankelWindow& w, std::size_t p_max);

/// The k x k cyclic permutation matrix; trace(M^n) = reg_k(n).
IntMatrix cyclic_block(std::size_t k);

/// Matrices (A, B) with trace(A^n) - trace(B^n) equal to the combination:
/// |c| cyclic blocks of size d go into A when c > 0 and into B when c < 0.
std::pair<IntMatrix, IntMatrix> periodic_to_matrices(const PeriodicCombination& comb);

}  // namespace doldkit
