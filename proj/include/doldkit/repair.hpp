#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "doldkit/arith.hpp"
#include "doldkit/dynsys.hpp"
#include "doldkit/seqkit.hpp"

namespace doldkit {

inline constexpr std::uint64_t kDefaultHorizon = 1'000'000;

/// A deterministic integer sequence n -> s(n), defined for 1 <= n <= horizon.
///
/// Sources with an efficient bulk algorithm (triangular recurrences,
/// Bernoulli tables) provide a batch rule used by window().
class SequenceSource {
 public:
  using Rule = std::function<Int(std::uint64_t)>;
  using Batch = std::function<std::vector<Int>(std::size_t)>;

  SequenceSource(std::string name, std::uint64_t horizon, Rule rule, Batch batch = {});

  const std::string& name() const noexcept { return name_; }
  std::uint64_t horizon() const noexcept { return horizon_; }

  /// Throws HorizonExceeded outside [1, horizon].
  Int at(std::uint64_t n) const;
  SeqPrefix window(std::size_t N) const;

  static SequenceSource fibonacci(std::uint64_t horizon = kDefaultHorizon);
  static SequenceSource lucas(std::uint64_t horizon = kDefaultHorizon);
  /// n -> F_{n^j}.
  static SequenceSource fibonacci_power(unsigned j, std::uint64_t horizon = kDefaultHorizon);
  /// n -> S1(n + k - 1, k), signless Stirling numbers of the first kind.
  static SequenceSource stirling1_row(std::uint64_t k, std::uint64_t horizon = kDefaultHorizon);
  /// n -> S2(n + k - 1, k).
  static SequenceSource stirling2_row(std::uint64_t k, std::uint64_t horizon = kDefaultHorizon);
  static SequenceSource trace_of(IntMatrix A, std::uint64_t horizon = kDefaultHorizon);
  /// Numerators and denominators of |B_{2n} / (2n)|.
  static SequenceSource bernoulli_tau(std::uint64_t horizon = kDefaultHorizon);
  static SequenceSource bernoulli_beta(std::uint64_t horizon = kDefaultHorizon);
  /// n -> (-1)^n E_{2n}.
  static SequenceSource euler_abs(std::uint64_t horizon = kDefaultHorizon);
  /// The window itself; the horizon is its length.
  static SequenceSource prefix(SeqPrefix a);

  /// Looks up a generator by CLI name: fib, lucas, fib-power-J, stirling1-K,
  /// stirling2-K, bernoulli-tau, bernoulli-beta, euler-abs.
  static std::optional<SequenceSource> by_name(const std::string& name);

 private:
  std::string name_;
  std::uint64_t horizon_;
  Rule rule_;
  Batch batch_;
};

/// n -> c * src(n).
SequenceSource scaled_source(const SequenceSource& src, const Int& c);

/// n -> l * n^k.
struct Monomial {
  std::uint64_t k;
  std::uint64_t ell;
};

/// n -> n if p does not divide n, p * n otherwise.
struct Gp {
  std::uint64_t p;
};

class TimeChange {
 public:
  static TimeChange monomial(std::uint64_t k, std::uint64_t ell);
  static TimeChange gp(std::uint64_t p);
  /// Applies the parts left to right: the first element acts first.
  static TimeChange compose(std::vector<TimeChange> parts);
  /// "mono:K,L", "gp:P" or a ';'-separated composition of those.
  static TimeChange parse(const std::string& text);

  /// nullopt when h(n) does not fit in 64 bits.
  std::optional<std::uint64_t> checked(std::uint64_t n) const;
  std::uint64_t operator()(std::uint64_t n) const;
  std::string describe() const;

 private:
  using Rule = std::variant<Monomial, Gp, std::vector<TimeChange>>;
  explicit TimeChange(Rule rule) : rule_(std::move(rule)) {}
  Rule rule_;
};

/// Entry n is src(h(n)). Throws HorizonExceeded if some h(n) is out of range.
SeqPrefix apply_time_change(const SequenceSource& src, const TimeChange& h, std::size_t N);

/// Windowed repair factor: lcm of denominators of b_n = B(src)_n, n <= N.
struct FailureResult {
  std::size_t window = 0;
  Int lcm_value = 1;
  /// Largest n <= window at which the running lcm grew (0 if it never did).
  std::size_t last_new_prime_at = 0;
};

FailureResult failure_window(const SequenceSource& src, std::size_t N);

/// For a non-identity permutation sigma of 1..N (sigma[i] is sigma(i+1)),
/// returns (k, n) such that (reg_k(sigma(m)))_{m<=N} fails realizability at
/// n; k and then n are searched in increasing order. nullopt iff sigma is
/// the identity. Throws NotPermutation.
std::optional<std::pair<std::uint64_t, std::size_t>> surjective_tc_witness(
    const std::vector<std::uint64_t>& sigma);

/// Signless Stirling numbers of the first kind, 0 <= k <= n.
Int stirling1(std::uint64_t n, std::uint64_t k);
/// Stirling numbers of the second kind, 0 <= k <= n.
Int stirling2(std::uint64_t n, std::uint64_t k);

/// B_0..B_m with B_1 = -1/2.
std::vector<Rat> bernoulli_numbers(std::size_t m);
/// (tau_n, beta_n) with tau_n / beta_n = |B_{2n} / (2n)| in lowest terms.
std::pair<Int, Int> bernoulli_pair(std::uint64_t n);
/// (-1)^n E_{2n}, the secant numbers 1, 1, 5, 61, 1385, ...
Int euler_abs(std::uint64_t n);

/// (F_n, F_{n+1}) by fast doubling.
std::pair<Int, Int> fibonacci_pair(std::uint64_t n);
Int fibonacci_number(std::uint64_t n);
Int lucas_number(std::uint64_t n);

}  // namespace doldkit
