#include "doldkit/seqkit.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace doldkit {

namespace {

template <class T>
Rat as_rat(const T& v) {
  return Rat(v);
}

template <class T>
RatSeqPrefix transform_B_impl(const Window<T>& a) {
  const std::size_t N = a.size();
  const auto mu = mobius_table(N);
  std::vector<Rat> b(N, Rat(0));
  for (std::size_t n = 1; n <= N; ++n) {
    Rat sum = 0;
    for (auto d : divisors(n)) {
      const int m = mu[n / d];
      if (m > 0) sum += as_rat(a(d));
      if (m < 0) sum -= as_rat(a(d));
    }
    b[n - 1] = sum / Rat(static_cast<unsigned long>(n));
  }
  return RatSeqPrefix(std::move(b));
}

template <class T>
RatSeqPrefix transform_C_impl(const Window<T>& a) {
  const std::size_t N = a.size();
  std::vector<Rat> c;
  c.reserve(N);
  for (std::size_t n = 1; n <= N; ++n) {
    Rat acc = as_rat(a(n));
    for (std::size_t i = 1; i < n; ++i) acc -= c[i - 1] * as_rat(a(n - i));
    c.push_back(acc / Rat(static_cast<unsigned long>(n)));
  }
  return RatSeqPrefix(std::move(c));
}

bool divisible(const Int& v, std::uint64_t n) {
  return mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(n)) != 0;
}

// sum_{d|n} w(n/d) a_d for an integer weight table w indexed 1..n.
template <class WeightAt>
Int weighted_divisor_sum(const SeqPrefix& a, std::size_t n, WeightAt weight) {
  Int sum = 0;
  for (auto d : divisors(n)) {
    const Int w = weight(n / d);
    if (w != 0) sum += w * a(d);
  }
  return sum;
}

CongruenceVerdict weighted_test(const SeqPrefix& a, auto weight) {
  const std::size_t N = a.size();
  for (std::size_t n = 1; n <= N; ++n) {
    Int s = weighted_divisor_sum(a, n, weight);
    if (!divisible(s, n)) return CongruenceVerdict::fails(n, Rat(s));
  }
  return CongruenceVerdict::holds(N);
}

CongruenceVerdict prime_power_test(const SeqPrefix& a) {
  const std::size_t N = a.size();
  for (std::size_t n = 2; n <= N; ++n) {
    for (const auto& [p, e] : factorize(n)) {
      const Int diff = a(n) - a(n / p);
      const Int modulus = pow(Int(static_cast<unsigned long>(p)), e);
      if (mpz_divisible_p(diff.get_mpz_t(), modulus.get_mpz_t()) == 0) {
        return CongruenceVerdict::fails(n, Rat(diff));
      }
    }
  }
  return CongruenceVerdict::holds(N);
}

}  // namespace

SeqPrefix make_seq(std::initializer_list<long> values) {
  std::vector<Int> v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return SeqPrefix(std::move(v));
}

RatSeqPrefix to_rational(const SeqPrefix& a) {
  std::vector<Rat> v;
  v.reserve(a.size());
  for (const auto& x : a.values()) v.emplace_back(x);
  return RatSeqPrefix(std::move(v));
}

SeqPrefix to_integral(const RatSeqPrefix& a) {
  std::vector<Int> v;
  v.reserve(a.size());
  for (std::size_t n = 1; n <= a.size(); ++n) {
    if (!is_integer(a(n))) throw NonIntegral(n);
    v.push_back(a(n).get_num());
  }
  return SeqPrefix(std::move(v));
}

RatSeqPrefix transform_B(const SeqPrefix& a) { return transform_B_impl(a); }
RatSeqPrefix transform_B(const RatSeqPrefix& a) { return transform_B_impl(a); }

RatSeqPrefix inverse_B(const RatSeqPrefix& b) {
  const std::size_t N = b.size();
  std::vector<Rat> a(N, Rat(0));
  for (std::size_t d = 1; d <= N; ++d) {
    if (b(d) == 0) continue;
    const Rat term = b(d) * Rat(static_cast<unsigned long>(d));
    for (std::size_t n = d; n <= N; n += d) a[n - 1] += term;
  }
  return RatSeqPrefix(std::move(a));
}

RatSeqPrefix transform_C(const SeqPrefix& a) { return transform_C_impl(a); }
RatSeqPrefix transform_C(const RatSeqPrefix& a) { return transform_C_impl(a); }

RatSeqPrefix inverse_C(const RatSeqPrefix& c) {
  const std::size_t N = c.size();
  std::vector<Rat> a;
  a.reserve(N);
  for (std::size_t n = 1; n <= N; ++n) {
    Rat acc = c(n) * Rat(static_cast<unsigned long>(n));
    for (std::size_t i = 1; i < n; ++i) acc += c(i) * a[n - i - 1];
    a.push_back(acc);
  }
  return RatSeqPrefix(std::move(a));
}

void validate_psi(const SeqPrefix& psi) {
  if (psi(1) != 1 && psi(1) != -1) throw InvalidPsi(1);
  for (std::size_t n = 2; n <= psi.size(); ++n) {
    Int sum = 0;
    for (auto k : divisors(n)) sum += psi(k);
    if (!divisible(sum, n)) throw InvalidPsi(n);
  }
}

CongruenceVerdict congruence_test(const SeqPrefix& a, const Criterion& criterion) {
  const std::size_t N = a.size();
  switch (criterion.kind()) {
    case Criterion::Kind::Mobius: {
      const auto mu = mobius_table(N);
      return weighted_test(a, [&](std::size_t k) { return Int(mu[k]); });
    }
    case Criterion::Kind::Phi: {
      const auto phi = phi_table(N);
      return weighted_test(a, [&](std::size_t k) { return Int(static_cast<unsigned long>(phi[k])); });
    }
    case Criterion::Kind::PrimePower:
      return prime_power_test(a);
    case Criterion::Kind::Psi: {
      const SeqPrefix& psi = criterion.psi_weights();
      if (psi.size() < N) throw ShortWindow(psi.size(), N);
      validate_psi(psi.prefix(N));
      return weighted_test(a, [&](std::size_t k) { return psi(k); });
    }
  }
  throw std::logic_error("unknown criterion");
}

CongruenceVerdict is_realizable(const SeqPrefix& a) {
  const auto b = transform_B(a);
  for (std::size_t n = 1; n <= b.size(); ++n) {
    if (!is_integer(b(n)) || b(n) < 0) return CongruenceVerdict::fails(n, b(n));
  }
  return CongruenceVerdict::holds(a.size());
}

DoldSplit dold_split(const SeqPrefix& a) {
  const auto verdict = congruence_test(a, Criterion::mobius());
  if (!verdict) throw NotDold(verdict.index());
  const auto b = transform_B(a);
  std::vector<Rat> plus(b.size(), Rat(0));
  std::vector<Rat> minus(b.size(), Rat(0));
  for (std::size_t n = 1; n <= b.size(); ++n) {
    if (b(n) > 0) plus[n - 1] = b(n);
    if (b(n) < 0) minus[n - 1] = -b(n);
  }
  return {inverse_B(RatSeqPrefix(std::move(plus))), inverse_B(RatSeqPrefix(std::move(minus)))};
}

PeriodicCombination::PeriodicCombination(std::map<std::uint64_t, Int> coeffs) {
  for (auto& [d, c] : coeffs) {
    if (d == 0) throw std::invalid_argument("reg_0 is undefined");
    if (c != 0) coeffs_.emplace(d, std::move(c));
  }
}

PeriodicCombination PeriodicCombination::reg(std::uint64_t d, const Int& coeff) {
  return PeriodicCombination({{d, coeff}});
}

Int PeriodicCombination::at(std::uint64_t n) const {
  Int total = 0;
  for (const auto& [d, c] : coeffs_) {
    if (n % d == 0) total += c * static_cast<unsigned long>(d);
  }
  return total;
}

SeqPrefix PeriodicCombination::eval(std::size_t N) const {
  std::vector<Int> v(N, Int(0));
  for (const auto& [d, c] : coeffs_) {
    const Int term = c * static_cast<unsigned long>(d);
    for (std::size_t n = d; n <= N; n += d) v[n - 1] += term;
  }
  return SeqPrefix(std::move(v));
}

PeriodicCombination operator+(const PeriodicCombination& x, const PeriodicCombination& y) {
  auto sum = x.coeffs_;
  for (const auto& [d, c] : y.coeffs_) sum[d] += c;
  return PeriodicCombination(std::move(sum));
}

PeriodicCombination operator-(const PeriodicCombination& x, const PeriodicCombination& y) {
  auto diff = x.coeffs_;
  for (const auto& [d, c] : y.coeffs_) diff[d] -= c;
  return PeriodicCombination(std::move(diff));
}

PeriodicCombination operator*(const PeriodicCombination& x, const PeriodicCombination& y) {
  std::map<std::uint64_t, Int> prod;
  for (const auto& [k, ck] : x.coeffs_) {
    for (const auto& [l, cl] : y.coeffs_) {
      const std::uint64_t g = std::gcd(k, l);
      prod[k / g * l] += ck * cl * static_cast<unsigned long>(g);
    }
  }
  return PeriodicCombination(std::move(prod));
}

SeqPrefix reg(std::uint64_t d, std::size_t N) { return PeriodicCombination::reg(d).eval(N); }

std::variant<PeriodicCombination, NotPeriodic> periodic_expansion(const SeqPrefix& a,
                                                                  std::size_t support_bound) {
  if (a.size() < 2 * support_bound) throw ShortWindow(a.size(), 2 * support_bound);
  const auto b = transform_B(a);
  std::map<std::uint64_t, Int> coeffs;
  for (std::size_t n = 1; n <= b.size(); ++n) {
    if (!is_integer(b(n))) return NotPeriodic{n};
    if (b(n) == 0) continue;
    if (n > support_bound) return NotPeriodic{n};
    coeffs.emplace(n, b(n).get_num());
  }
  return PeriodicCombination(std::move(coeffs));
}

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const Int& c, std::size_t degree) {
  std::vector<Int> v(degree + 1, Int(0));
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPoly::eval(const Int& q) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

IntPoly IntPoly::substitute_power(std::size_t d) const {
  if (d == 0) throw std::invalid_argument("substitute_power: d must be positive");
  if (coeffs_.empty()) return {};
  std::vector<Int> v((coeffs_.size() - 1) * d + 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * d] = coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& x, const IntPoly& y) {
  std::vector<Int> v(std::max(x.coeffs_.size(), y.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) v[i] += x.coeffs_[i];
  for (std::size_t i = 0; i < y.coeffs_.size(); ++i) v[i] += y.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& x, const IntPoly& y) { return x + y * Int(-1); }

IntPoly operator*(const IntPoly& x, const IntPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<Int> v(x.coeffs_.size() + y.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) v[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const Int& c) const {
  std::vector<Int> v = coeffs_;
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

PolyDivision divide_monic(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Int& lead = den.coeffs().back();
  if (lead != 1 && lead != -1) throw std::invalid_argument("divide_monic: leading coefficient must be +-1");
  std::vector<Int> rem = num.coeffs();
  const std::size_t dd = den.coeffs().size() - 1;
  if (rem.size() <= dd) return {IntPoly(), num};
  std::vector<Int> quot(rem.size() - dd, Int(0));
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    const Int q = rem[i] * lead;  // lead is +-1, so this is rem[i] / lead
    quot[i - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * den.coeffs()[j];
  }
  rem.resize(dd);
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Int& c = p.coeffs()[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Int mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += "q";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPoly q_bracket(std::size_t n) {
  if (n == 0) throw std::invalid_argument("q_bracket: n must be positive");
  return IntPoly(std::vector<Int>(n, Int(1)));
}

QCongruenceVerdict q_dold_check(const std::vector<IntPoly>& a) {
  if (a.empty()) throw EmptyWindow();
  const std::size_t N = a.size();
  const auto mu = mobius_table(N);
  for (std::size_t n = 1; n <= N; ++n) {
    IntPoly sum;
    for (auto d : divisors(n)) {
      if (mu[d] == 0) continue;
      sum = sum + a[n / d - 1].substitute_power(d) * Int(mu[d]);
    }
    auto division = divide_monic(sum, q_bracket(n));
    if (!division.remainder.is_zero()) return QCongruenceVerdict::fails(n, division.remainder);
  }
  return QCongruenceVerdict::holds(N);
}

}  // namespace doldkit
