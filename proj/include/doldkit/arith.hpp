#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "doldkit/errors.hpp"

namespace doldkit {

/// Arbitrary-precision signed integer.
using Int = mpz_class;
/// Exact rational, always canonical (lowest terms, positive denominator).
using Rat = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error on den == 0.
Rat ratio(const Int& num, const Int& den);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

std::string to_string(const Int& v);
/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rat& v);

Int parse_int(const std::string& text);
/// Accepts "p" or "p/q".
Rat parse_rat(const std::string& text);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
/// base^exp for an unsigned exponent.
Int pow(const Int& base, std::uint64_t exp);

/// A finite 1-indexed window t_1..t_N of a sequence, N >= 1.
template <class T>
class Window {
 public:
  using value_type = T;

  explicit Window(std::vector<T> values) : values_(std::move(values)) {
    if (values_.empty()) throw EmptyWindow();
  }

  std::size_t size() const noexcept { return values_.size(); }

  /// 1-indexed access; n must lie in [1, size()].
  const T& operator()(std::size_t n) const { return values_.at(n - 1); }

  std::span<const T> values() const noexcept { return values_; }

  /// Leading sub-window t_1..t_n.
  Window prefix(std::size_t n) const {
    if (n > values_.size()) throw ShortWindow(values_.size(), n);
    return Window(std::vector<T>(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  friend bool operator==(const Window& a, const Window& b) { return a.values_ == b.values_; }

 private:
  std::vector<T> values_;
};

using ArithFnPrefix = Window<Rat>;

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorisation by wheel trial division; supported for n <= 10^12.
std::vector<PrimePower> factorize(std::uint64_t n);

/// All positive divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
Int divisor_sigma(unsigned k, std::uint64_t n);
unsigned big_omega(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// Sieved tables indexed 0..n (entry 0 unused) for repeated lookups.
std::vector<int> mobius_table(std::size_t n);
std::vector<std::uint64_t> phi_table(std::size_t n);

/// (f*g)(n) = sum over d | n of f(d) g(n/d), for n = 1..N.
ArithFnPrefix dirichlet_convolve(const ArithFnPrefix& f, const ArithFnPrefix& g, std::size_t N);

/// The unique g with f*g equal to the convolution identity on 1..N.
ArithFnPrefix dirichlet_inverse(const ArithFnPrefix& f, std::size_t N);

/// Named arithmetic functions as prefixes of length N.
ArithFnPrefix unit_fn(std::size_t N);            // u(n) = 1
ArithFnPrefix identity_fn(std::size_t N);        // Id(n) = n
ArithFnPrefix convolution_identity(std::size_t N);  // CI(n) = [n == 1]
ArithFnPrefix mobius_fn(std::size_t N);

}  // namespace doldkit
