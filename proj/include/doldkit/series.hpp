#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "doldkit/arith.hpp"
#include "doldkit/dynsys.hpp"
#include "doldkit/seqkit.hpp"

namespace doldkit {

/// Formal power series c_0 + c_1 z + ... + c_N z^N, exact modulo z^{N+1}.
///
/// Binary operations on series of different truncation orders return a
/// result truncated to the smaller order.
class PowerSeries {
 public:
  /// Coefficients c_0..c_N; at least one coefficient is required.
  explicit PowerSeries(std::vector<Rat> coeffs);
  static PowerSeries constant(const Rat& c, std::size_t order);
  /// 1 - z^k (or 1 when k > order).
  static PowerSeries one_minus_power(std::size_t k, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Rat& operator[](std::size_t i) const { return coeffs_.at(i); }
  const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }

  PowerSeries truncated(std::size_t order) const;
  /// f(z^d), same truncation order.
  PowerSeries substitute_power(std::size_t d) const;

  friend PowerSeries operator+(const PowerSeries& x, const PowerSeries& y);
  friend PowerSeries operator-(const PowerSeries& x, const PowerSeries& y);
  friend PowerSeries operator*(const PowerSeries& x, const PowerSeries& y);
  PowerSeries operator*(const Rat& c) const;
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rat> coeffs_;
};

inline PowerSeries ps_mul(const PowerSeries& x, const PowerSeries& y) { return x * y; }
/// Requires c_0 = 0.
PowerSeries ps_exp(const PowerSeries& f);
/// Requires c_0 = 1.
PowerSeries ps_log(const PowerSeries& f);
/// Requires c_0 != 0.
PowerSeries ps_inv(const PowerSeries& f);
/// base^alpha for rational alpha; requires c_0 = 1.
PowerSeries ps_pow_rational(const PowerSeries& base, const Rat& alpha);

/// exp(sum_{n<=N} a_n z^n / n), truncated at order N = a.size().
PowerSeries zeta_from_fix(const SeqPrefix& a);
PowerSeries zeta_from_fix(const RatSeqPrefix& a);
/// n [z^n] log Z for n = 1..order. Throws NonIntegral at the first
/// non-integer count.
SeqPrefix fix_from_zeta(const PowerSeries& Z);

/// prod_{n<=N} (1 - z^n)^{-exponent_n}, exponents rational.
PowerSeries euler_product(const RatSeqPrefix& exponents, std::size_t N);
/// prod over closed orbits of (1 - z^{|orbit|})^{-1}, to order N.
PowerSeries zeta_product_from_orbits(const OrbitSpec& spec, std::size_t N);

/// Orbit census of the Feigenbaum map: one orbit of each length 2^k <= horizon.
OrbitSpec feigenbaum_orbits(std::uint64_t horizon);

/// P(z) / Q(z) with Q(0) = 1 and gcd(P, Q) = 1 over Q.
struct RationalFn {
  std::vector<Rat> numerator;    // ascending, no trailing zeros (empty = 0)
  std::vector<Rat> denominator;  // ascending, denominator[0] = 1
  std::size_t degree() const;
  PowerSeries expand(std::size_t order) const;
  friend bool operator==(const RationalFn&, const RationalFn&) = default;
};

/// Smallest-degree P/Q (max(deg P, deg Q) <= dmax) reproducing every
/// coefficient of Z exactly. Requires Z.order() >= 2 * dmax + 2 (ShortWindow
/// otherwise); nullopt when no such pair exists.
std::optional<RationalFn> rational_fit(const PowerSeries& Z, std::size_t dmax);

/// Dirichlet coefficients indexed 1..N.
using DirichletPrefix = ArithFnPrefix;

/// Checks d_T(s) zeta(s+1) = sum F(n) n^{-s-1} coefficientwise, where
/// d_T has coefficients O = B(F). Throws NotRealizable if F is not.
bool dirichlet_identity_check(const SeqPrefix& F);

/// E_p(x) = exp(x + x^p/p + x^{p^2}/p^2 + ...) to order N.
PowerSeries artin_hasse(std::uint64_t p, std::size_t N);
/// True iff no coefficient has a denominator divisible by p.
bool is_p_integral(const PowerSeries& s, std::uint64_t p);

/// exp(x) = prod_n (1 - x^n)^{-mu(n)/n} to order N.
bool mobius_exp_check(std::size_t N);

}  // namespace doldkit
