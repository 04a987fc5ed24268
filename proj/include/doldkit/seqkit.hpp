#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "doldkit/arith.hpp"

namespace doldkit {

/// Integer window a_1..a_N.
using SeqPrefix = Window<Int>;
/// Rational window, e.g. orbit counts b_n or the generating sequence c_n.
using RatSeqPrefix = Window<Rat>;

SeqPrefix make_seq(std::initializer_list<long> values);
RatSeqPrefix to_rational(const SeqPrefix& a);
/// Throws NonIntegral at the first non-integer entry.
SeqPrefix to_integral(const RatSeqPrefix& a);

/// Outcome of a congruence or realizability test over a window.
///
/// Holds(N): the condition was verified for every n <= N.
/// Fails(n, w): n is the least failing index and w the offending value
/// (the raw divisor sum for congruences, b_n for realizability).
template <class W>
class Verdict {
 public:
  static Verdict holds(std::size_t checked) { return Verdict(true, checked, W{}); }
  static Verdict fails(std::size_t n, W witness) { return Verdict(false, n, std::move(witness)); }

  bool ok() const noexcept { return ok_; }
  explicit operator bool() const noexcept { return ok_; }
  /// Number of indices checked on success, failing index otherwise.
  std::size_t index() const noexcept { return index_; }
  const W& witness() const noexcept { return witness_; }

  friend bool operator==(const Verdict&, const Verdict&) = default;

 private:
  Verdict(bool ok, std::size_t index, W witness)
      : ok_(ok), index_(index), witness_(std::move(witness)) {}

  bool ok_;
  std::size_t index_;
  W witness_;
};

using CongruenceVerdict = Verdict<Rat>;

/// b_n = (1/n) sum_{d|n} mu(n/d) a_d.
RatSeqPrefix transform_B(const SeqPrefix& a);
RatSeqPrefix transform_B(const RatSeqPrefix& a);
/// a_n = sum_{d|n} d b_d.
RatSeqPrefix inverse_B(const RatSeqPrefix& b);

/// c_n = (a_n - c_1 a_{n-1} - ... - c_{n-1} a_1) / n.
RatSeqPrefix transform_C(const SeqPrefix& a);
RatSeqPrefix transform_C(const RatSeqPrefix& a);
/// a_n = c_1 a_{n-1} + ... + c_{n-1} a_1 + n c_n.
RatSeqPrefix inverse_C(const RatSeqPrefix& c);

class Criterion {
 public:
  enum class Kind { Mobius, Phi, PrimePower, Psi };

  static Criterion mobius() { return Criterion(Kind::Mobius); }
  static Criterion phi() { return Criterion(Kind::Phi); }
  static Criterion prime_power() { return Criterion(Kind::PrimePower); }
  /// The weight psi must satisfy psi(1) = +-1 and sum_{k|n} psi(k) = 0 mod n;
  /// it is checked on its own window when the test runs.
  static Criterion psi(SeqPrefix weights) { return Criterion(Kind::Psi, std::move(weights)); }

  Kind kind() const noexcept { return kind_; }
  const SeqPrefix& psi_weights() const { return psi_.value(); }

 private:
  explicit Criterion(Kind k, std::optional<SeqPrefix> psi = std::nullopt)
      : kind_(k), psi_(std::move(psi)) {}

  Kind kind_;
  std::optional<SeqPrefix> psi_;
};

/// Throws InvalidPsi at the least offending index.
void validate_psi(const SeqPrefix& psi);

CongruenceVerdict congruence_test(const SeqPrefix& a, const Criterion& criterion);

/// Holds(N) iff every b_n is a non-negative integer.
CongruenceVerdict is_realizable(const SeqPrefix& a);

struct DoldSplit {
  RatSeqPrefix plus;
  RatSeqPrefix minus;
};

/// Writes a Dold window as a difference of two realizable windows.
/// Throws NotDold when the Mobius congruence fails.
DoldSplit dold_split(const SeqPrefix& a);

/// Finite integer combination of the elementary periodic sequences reg_d.
class PeriodicCombination {
 public:
  PeriodicCombination() = default;
  /// Zero coefficients are dropped.
  explicit PeriodicCombination(std::map<std::uint64_t, Int> coeffs);

  static PeriodicCombination reg(std::uint64_t d, const Int& coeff = 1);

  const std::map<std::uint64_t, Int>& coeffs() const noexcept { return coeffs_; }
  bool empty() const noexcept { return coeffs_.empty(); }

  /// sum_d coeff_d * reg_d(n).
  Int at(std::uint64_t n) const;
  SeqPrefix eval(std::size_t N) const;

  friend PeriodicCombination operator+(const PeriodicCombination& x, const PeriodicCombination& y);
  friend PeriodicCombination operator-(const PeriodicCombination& x, const PeriodicCombination& y);
  /// Pointwise product via reg_k reg_l = gcd(k, l) reg_lcm(k, l).
  friend PeriodicCombination operator*(const PeriodicCombination& x, const PeriodicCombination& y);
  friend bool operator==(const PeriodicCombination&, const PeriodicCombination&) = default;

 private:
  std::map<std::uint64_t, Int> coeffs_;
};

/// reg_d(1..N).
SeqPrefix reg(std::uint64_t d, std::size_t N);

inline PeriodicCombination combo_add(const PeriodicCombination& x, const PeriodicCombination& y) {
  return x + y;
}
inline PeriodicCombination combo_mul(const PeriodicCombination& x, const PeriodicCombination& y) {
  return x * y;
}
inline SeqPrefix combo_eval(const PeriodicCombination& x, std::size_t N) { return x.eval(N); }

struct NotPeriodic {
  std::size_t index;
  friend bool operator==(const NotPeriodic&, const NotPeriodic&) = default;
};

/// Periodic expansion relative to a support bound. Requires
/// a.size() >= 2 * support_bound (ShortWindow otherwise).
std::variant<PeriodicCombination, NotPeriodic> periodic_expansion(const SeqPrefix& a,
                                                                  std::size_t support_bound);

/// Polynomial in q with integer coefficients, ascending, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  static IntPoly monomial(const Int& c, std::size_t degree);

  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Int eval(const Int& q) const;
  /// p(q^d).
  IntPoly substitute_power(std::size_t d) const;

  friend IntPoly operator+(const IntPoly& x, const IntPoly& y);
  friend IntPoly operator-(const IntPoly& x, const IntPoly& y);
  friend IntPoly operator*(const IntPoly& x, const IntPoly& y);
  IntPoly operator*(const Int& c) const;
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

struct PolyDivision {
  IntPoly quotient;
  IntPoly remainder;
};

/// Division by a polynomial with leading coefficient +-1, exact over Z.
PolyDivision divide_monic(const IntPoly& num, const IntPoly& den);

std::string to_string(const IntPoly& p);

/// [n]_q = 1 + q + ... + q^{n-1}.
IntPoly q_bracket(std::size_t n);

using QCongruenceVerdict = Verdict<IntPoly>;

/// Checks sum_{d|n} mu(d) a_{n/d}(q^d) = 0 mod [n]_q; the witness on failure
/// is the non-zero remainder.
QCongruenceVerdict q_dold_check(const std::vector<IntPoly>& a);

}  // namespace doldkit
