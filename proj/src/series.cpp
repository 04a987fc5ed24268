#include "doldkit/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "doldkit/linalg.hpp"

namespace doldkit {

namespace {

// Above this many repeated (1 - z^n) factors the binomial series is cheaper.
constexpr unsigned long kMaxRepeatedFactors = 64;

Rat rat(std::size_t n) { return Rat(static_cast<unsigned long>(n)); }

void trim(std::vector<Rat>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// g <- g / (1 - z^n), in place.
void divide_one_minus_power(std::vector<Rat>& g, std::size_t n) {
  for (std::size_t k = n; k < g.size(); ++k) g[k] += g[k - n];
}

// g <- g * (1 - z^n), in place.
void multiply_one_minus_power(std::vector<Rat>& g, std::size_t n) {
  for (std::size_t k = g.size(); k-- > n;) g[k] -= g[k - n];
}

}  // namespace

PowerSeries::PowerSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("PowerSeries: at least c_0 is required");
}

PowerSeries PowerSeries::constant(const Rat& c, std::size_t order) {
  std::vector<Rat> v(order + 1, Rat(0));
  v[0] = c;
  return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::one_minus_power(std::size_t k, std::size_t order) {
  PowerSeries s = constant(1, order);
  if (k >= 1 && k <= order) s.coeffs_[k] = -1;
  return s;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  std::vector<Rat> v(order + 1, Rat(0));
  for (std::size_t i = 0; i <= std::min(order, this->order()); ++i) v[i] = coeffs_[i];
  return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::substitute_power(std::size_t d) const {
  if (d == 0) throw std::invalid_argument("substitute_power: d must be positive");
  std::vector<Rat> v(coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i * d < v.size(); ++i) v[i * d] = coeffs_[i];
  return PowerSeries(std::move(v));
}

PowerSeries operator+(const PowerSeries& x, const PowerSeries& y) {
  const std::size_t n = std::min(x.order(), y.order());
  std::vector<Rat> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = x[i] + y[i];
  return PowerSeries(std::move(v));
}

PowerSeries operator-(const PowerSeries& x, const PowerSeries& y) {
  const std::size_t n = std::min(x.order(), y.order());
  std::vector<Rat> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = x[i] - y[i];
  return PowerSeries(std::move(v));
}

PowerSeries operator*(const PowerSeries& x, const PowerSeries& y) {
  const std::size_t n = std::min(x.order(), y.order());
  std::vector<Rat> v(n + 1, Rat(0));
  for (std::size_t i = 0; i <= n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) v[i + j] += x[i] * y[j];
  }
  return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::operator*(const Rat& c) const {
  std::vector<Rat> v = coeffs_;
  for (auto& x : v) x *= c;
  return PowerSeries(std::move(v));
}

PowerSeries ps_exp(const PowerSeries& f) {
  if (f[0] != 0) throw std::domain_error("ps_exp: constant term must be 0");
  const std::size_t N = f.order();
  std::vector<Rat> e(N + 1, Rat(0));
  e[0] = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    Rat acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (f[k] != 0) acc += rat(k) * f[k] * e[n - k];
    }
    e[n] = acc / rat(n);
  }
  return PowerSeries(std::move(e));
}

PowerSeries ps_log(const PowerSeries& f) {
  if (f[0] != 1) throw std::domain_error("ps_log: constant term must be 1");
  const std::size_t N = f.order();
  std::vector<Rat> l(N + 1, Rat(0));
  for (std::size_t n = 1; n <= N; ++n) {
    Rat acc = 0;
    for (std::size_t k = 1; k < n; ++k) {
      if (l[k] != 0) acc += rat(k) * l[k] * f[n - k];
    }
    l[n] = f[n] - acc / rat(n);
  }
  return PowerSeries(std::move(l));
}

PowerSeries ps_inv(const PowerSeries& f) {
  if (f[0] == 0) throw std::domain_error("ps_inv: constant term must be non-zero");
  const std::size_t N = f.order();
  const Rat inv0 = 1 / f[0];
  std::vector<Rat> g(N + 1, Rat(0));
  g[0] = inv0;
  for (std::size_t n = 1; n <= N; ++n) {
    Rat acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (f[k] != 0) acc += f[k] * g[n - k];
    }
    g[n] = -acc * inv0;
  }
  return PowerSeries(std::move(g));
}

PowerSeries ps_pow_rational(const PowerSeries& base, const Rat& alpha) {
  if (base[0] != 1) throw std::domain_error("ps_pow_rational: constant term must be 1");
  const std::size_t N = base.order();
  std::vector<Rat> g(N + 1, Rat(0));
  g[0] = 1;
  // From base * g' = alpha * base' * g.
  for (std::size_t n = 1; n <= N; ++n) {
    Rat acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (base[k] == 0) continue;
      acc += (alpha * rat(k) - rat(n - k)) * base[k] * g[n - k];
    }
    g[n] = acc / rat(n);
  }
  return PowerSeries(std::move(g));
}

PowerSeries zeta_from_fix(const RatSeqPrefix& a) {
  std::vector<Rat> f(a.size() + 1, Rat(0));
  for (std::size_t n = 1; n <= a.size(); ++n) f[n] = a(n) / rat(n);
  return ps_exp(PowerSeries(std::move(f)));
}

PowerSeries zeta_from_fix(const SeqPrefix& a) { return zeta_from_fix(to_rational(a)); }

SeqPrefix fix_from_zeta(const PowerSeries& Z) {
  if (Z[0] != 1) throw std::domain_error("fix_from_zeta: constant term must be 1");
  if (Z.order() == 0) throw EmptyWindow();
  const PowerSeries l = ps_log(Z);
  std::vector<Int> F;
  F.reserve(Z.order());
  for (std::size_t n = 1; n <= Z.order(); ++n) {
    const Rat value = l[n] * rat(n);
    if (!is_integer(value)) throw NonIntegral(n);
    F.push_back(value.get_num());
  }
  return SeqPrefix(std::move(F));
}

PowerSeries euler_product(const RatSeqPrefix& exponents, std::size_t N) {
  std::vector<Rat> g(N + 1, Rat(0));
  g[0] = 1;
  PowerSeries acc = PowerSeries::constant(1, N);
  const std::size_t top = std::min(N, exponents.size());
  for (std::size_t n = 1; n <= top; ++n) {
    const Rat& e = exponents(n);
    if (e == 0) continue;
    if (is_integer(e) && abs(e.get_num()) <= kMaxRepeatedFactors) {
      const unsigned long times = Int(abs(e.get_num())).get_ui();
      for (unsigned long t = 0; t < times; ++t) {
        if (e > 0) divide_one_minus_power(g, n);
        else multiply_one_minus_power(g, n);
      }
    } else {
      acc = acc * ps_pow_rational(PowerSeries::one_minus_power(n, N), -e);
    }
  }
  return PowerSeries(std::move(g)) * acc;
}

PowerSeries zeta_product_from_orbits(const OrbitSpec& spec, std::size_t N) {
  if (N == 0) return PowerSeries::constant(1, 0);
  return euler_product(spec.window(N), N);
}

OrbitSpec feigenbaum_orbits(std::uint64_t horizon) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t len = 1; len <= horizon; len *= 2) {
    counts.emplace(len, 1);
    if (len > horizon / 2) break;
  }
  return OrbitSpec(std::move(counts));
}

std::size_t RationalFn::degree() const {
  const std::size_t p = numerator.empty() ? 0 : numerator.size() - 1;
  const std::size_t q = denominator.empty() ? 0 : denominator.size() - 1;
  return std::max(p, q);
}

PowerSeries RationalFn::expand(std::size_t order) const {
  std::vector<Rat> p(order + 1, Rat(0));
  std::vector<Rat> q(order + 1, Rat(0));
  for (std::size_t i = 0; i < numerator.size() && i <= order; ++i) p[i] = numerator[i];
  for (std::size_t i = 0; i < denominator.size() && i <= order; ++i) q[i] = denominator[i];
  return PowerSeries(std::move(p)) * ps_inv(PowerSeries(std::move(q)));
}

std::optional<RationalFn> rational_fit(const PowerSeries& Z, std::size_t dmax) {
  const std::size_t N = Z.order();
  if (N < 2 * dmax + 2) throw ShortWindow(N + 1, 2 * dmax + 3);
  for (std::size_t d = 0; d <= dmax; ++d) {
    // Unknowns q_1..q_d with sum_{i=0}^{d} q_i Z_{n-i} = 0 for n = d+1..N.
    const std::size_t rows = N - d;
    std::vector<Rat> system(rows * d);
    std::vector<Rat> rhs(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      const std::size_t n = d + 1 + r;
      for (std::size_t i = 1; i <= d; ++i) system[r * d + (i - 1)] = Z[n - i];
      rhs[r] = -Z[n];
    }
    auto solution = solve_exact(std::move(system), std::move(rhs), rows, d);
    if (!solution) continue;
    RationalFn fit;
    fit.denominator.push_back(1);
    for (auto& q : *solution) fit.denominator.push_back(std::move(q));
    for (std::size_t k = 0; k <= d; ++k) {
      Rat acc = 0;
      for (std::size_t i = 0; i <= k; ++i) acc += fit.denominator[i] * Z[k - i];
      fit.numerator.push_back(acc);
    }
    trim(fit.numerator);
    trim(fit.denominator);
    return fit;
  }
  return std::nullopt;
}

bool dirichlet_identity_check(const SeqPrefix& F) {
  const auto verdict = is_realizable(F);
  if (!verdict) throw NotRealizable(verdict.index());
  const std::size_t N = F.size();
  const DirichletPrefix orbits = transform_B(F);
  std::vector<Rat> shifted_zeta;
  shifted_zeta.reserve(N);
  for (std::size_t n = 1; n <= N; ++n) shifted_zeta.push_back(Rat(1) / rat(n));
  const auto lhs = dirichlet_convolve(orbits, DirichletPrefix(std::move(shifted_zeta)), N);
  for (std::size_t n = 1; n <= N; ++n) {
    if (lhs(n) != Rat(F(n)) / rat(n)) return false;
  }
  return true;
}

PowerSeries artin_hasse(std::uint64_t p, std::size_t N) {
  if (!is_prime(p)) throw std::invalid_argument("artin_hasse: p must be prime");
  std::vector<Rat> f(N + 1, Rat(0));
  for (std::uint64_t pk = 1; pk <= N; pk *= p) {
    f[pk] = Rat(1) / Rat(static_cast<unsigned long>(pk));
    if (pk > N / p) break;
  }
  return ps_exp(PowerSeries(std::move(f)));
}

bool is_p_integral(const PowerSeries& s, std::uint64_t p) {
  return std::all_of(s.coeffs().begin(), s.coeffs().end(), [p](const Rat& c) {
    return mpz_divisible_ui_p(c.get_den_mpz_t(), static_cast<unsigned long>(p)) == 0;
  });
}

bool mobius_exp_check(std::size_t N) {
  std::vector<Rat> x(N + 1, Rat(0));
  if (N >= 1) x[1] = 1;
  const PowerSeries lhs = ps_exp(PowerSeries(std::move(x)));
  if (N == 0) return lhs == PowerSeries::constant(1, 0);
  const auto mu = mobius_table(N);
  std::vector<Rat> exponents;
  exponents.reserve(N);
  for (std::size_t n = 1; n <= N; ++n) exponents.push_back(Rat(mu[n]) / rat(n));
  return euler_product(RatSeqPrefix(std::move(exponents)), N) == lhs;
}

}  // namespace doldkit
