#include "doldkit/arith.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace doldkit {

namespace {

constexpr std::uint64_t kMaxFactorInput = 1'000'000'000'000ULL;

// Gaps between successive residues coprime to 30, starting from 7.
constexpr std::array<std::uint64_t, 8> kWheelGaps{4, 2, 4, 2, 4, 6, 2, 6};

}  // namespace

Rat ratio(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  if (is_integer(v)) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Int parse_int(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  Int v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad integer literal: " + text);
  return v;
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  return ratio(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int pow(const Int& base, std::uint64_t exp) {
  Int result = 1;
  Int b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp > 0) b *= b;
  }
  return result;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0) throw std::domain_error("factorize: n must be positive");
  if (n > kMaxFactorInput) throw std::domain_error("factorize: input above 10^12");
  std::vector<PrimePower> out;
  auto strip = [&](std::uint64_t p) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  strip(2);
  strip(3);
  strip(5);
  std::uint64_t p = 7;
  for (std::size_t i = 0; p * p <= n; p += kWheelGaps[i], i = (i + 1) % kWheelGaps.size()) {
    strip(p);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (std::uint32_t k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(std::uint64_t n) {
  int sign = 1;
  for (const auto& f : factorize(n)) {
    if (f.exponent > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& f : factorize(n)) phi = phi / f.prime * (f.prime - 1);
  return phi;
}

Int divisor_sigma(unsigned k, std::uint64_t n) {
  Int total = 0;
  for (auto d : divisors(n)) total += pow(Int(static_cast<unsigned long>(d)), k);
  return total;
}

unsigned big_omega(std::uint64_t n) {
  unsigned count = 0;
  for (const auto& f : factorize(n)) count += f.exponent;
  return count;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f.front().exponent == 1;
}

std::vector<int> mobius_table(std::size_t n) {
  std::vector<int> mu(n + 1, 1);
  std::vector<bool> composite(n + 1, false);
  mu[0] = 0;
  for (std::size_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    for (std::size_t m = p; m <= n; m += p) {
      if (m > p) composite[m] = true;
      mu[m] = -mu[m];
    }
    if (p <= n / p) {
      for (std::size_t m = p * p; m <= n; m += p * p) mu[m] = 0;
    }
  }
  return mu;
}

std::vector<std::uint64_t> phi_table(std::size_t n) {
  std::vector<std::uint64_t> phi(n + 1);
  for (std::size_t i = 0; i <= n; ++i) phi[i] = i;
  for (std::size_t p = 2; p <= n; ++p) {
    if (phi[p] != p) continue;
    for (std::size_t m = p; m <= n; m += p) phi[m] -= phi[m] / p;
  }
  return phi;
}

ArithFnPrefix dirichlet_convolve(const ArithFnPrefix& f, const ArithFnPrefix& g, std::size_t N) {
  if (f.size() < N) throw ShortWindow(f.size(), N);
  if (g.size() < N) throw ShortWindow(g.size(), N);
  std::vector<Rat> h(N, Rat(0));
  // Sieve over pairs (d, e) with d*e <= N.
  for (std::size_t d = 1; d <= N; ++d) {
    if (f(d) == 0) continue;
    for (std::size_t e = 1; d * e <= N; ++e) h[d * e - 1] += f(d) * g(e);
  }
  return ArithFnPrefix(std::move(h));
}

ArithFnPrefix dirichlet_inverse(const ArithFnPrefix& f, std::size_t N) {
  if (f.size() < N) throw ShortWindow(f.size(), N);
  if (f(1) == 0) throw NonInvertible();
  std::vector<Rat> g(N, Rat(0));
  g[0] = 1 / f(1);
  for (std::size_t n = 2; n <= N; ++n) {
    Rat acc = 0;
    for (auto d : divisors(n)) {
      if (d == 1) continue;
      acc += f(d) * g[n / d - 1];
    }
    g[n - 1] = -acc / f(1);
  }
  return ArithFnPrefix(std::move(g));
}

ArithFnPrefix unit_fn(std::size_t N) { return ArithFnPrefix(std::vector<Rat>(N, Rat(1))); }

ArithFnPrefix identity_fn(std::size_t N) {
  std::vector<Rat> v;
  v.reserve(N);
  for (std::size_t n = 1; n <= N; ++n) v.emplace_back(static_cast<unsigned long>(n));
  return ArithFnPrefix(std::move(v));
}

ArithFnPrefix convolution_identity(std::size_t N) {
  std::vector<Rat> v(N, Rat(0));
  if (N > 0) v[0] = 1;
  return ArithFnPrefix(std::move(v));
}

ArithFnPrefix mobius_fn(std::size_t N) {
  auto mu = mobius_table(N);
  std::vector<Rat> v;
  v.reserve(N);
  for (std::size_t n = 1; n <= N; ++n) v.emplace_back(mu[n]);
  return ArithFnPrefix(std::move(v));
}

}  // namespace doldkit
