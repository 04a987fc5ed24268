// Deliberately naive reference implementations. They share no code with the
// library beyond the number types, so agreement is meaningful.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Int = mpz_class;
using Rat = mpq_class;

inline std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline int mobius(std::uint64_t n) {
  int mu = 1;
  for (auto [p, e] : trial_factor(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

inline std::uint64_t phi_count(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1 ? 1 : 0;
  return c;
}

inline Int sigma(unsigned k, std::uint64_t n) {
  Int s = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Int t;
    mpz_ui_pow_ui(t.get_mpz_t(), d, k);
    s += t;
  }
  return s;
}

// b_n = (1/n) sum_{d | n} mu(n/d) a_d, with a 0-indexed (a[0] = a_1).
inline std::vector<Rat> orbit_counts(const std::vector<Int>& a) {
  std::vector<Rat> b;
  for (std::uint64_t n = 1; n <= a.size(); ++n) {
    Int s = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) s += mobius(n / d) * a[d - 1];
    }
    Rat q(s, Int(n));
    q.canonicalize();
    b.push_back(q);
  }
  return b;
}

// Least n with a non-integral or negative b_n, or 0.
inline std::size_t first_unrealizable(const std::vector<Int>& a) {
  const auto b = orbit_counts(a);
  for (std::size_t n = 1; n <= b.size(); ++n) {
    if (b[n - 1].get_den() != 1 || b[n - 1] < 0) return n;
  }
  return 0;
}

// Least n failing the Mobius congruence, or 0.
inline std::size_t first_non_dold(const std::vector<Int>& a) {
  const auto b = orbit_counts(a);
  for (std::size_t n = 1; n <= b.size(); ++n) {
    if (b[n - 1].get_den() != 1) return n;
  }
  return 0;
}

// Fixed points of T^n by literal iteration.
inline std::uint64_t count_fixed_by_iteration(const std::vector<std::size_t>& table, std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::size_t x = 0; x < table.size(); ++x) {
    std::size_t y = x;
    for (std::uint64_t i = 0; i < n; ++i) y = table[y];
    c += y == x ? 1 : 0;
  }
  return c;
}

using Mat = std::vector<std::vector<Int>>;

inline Mat mat_mul(const Mat& a, const Mat& b) {
  const std::size_t k = a.size();
  Mat c(k, std::vector<Int>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) c[i][j] += a[i][l] * b[l][j];
  return c;
}

inline std::vector<Int> traces(const Mat& a, std::size_t N) {
  std::vector<Int> out;
  Mat p = a;
  for (std::size_t n = 1; n <= N; ++n) {
    Int t = 0;
    for (std::size_t i = 0; i < a.size(); ++i) t += p[i][i];
    out.push_back(t);
    p = mat_mul(p, a);
  }
  return out;
}

// Power sums of the roots of x^k - e[0] x^{k-1} - ... - e[k-1] by Newton's
// identities for the recurrence p_n = sum_i e[i] p_{n-1-i} (+ n e[n-1] term).
inline std::vector<Int> newton_power_sums(const std::vector<Int>& e, std::size_t N) {
  std::vector<Int> p;
  for (std::size_t n = 1; n <= N; ++n) {
    Int s = 0;
    for (std::size_t i = 1; i < n && i <= e.size(); ++i) s += e[i - 1] * p[n - i - 1];
    if (n <= e.size()) s += Int(static_cast<unsigned long>(n)) * e[n - 1];
    p.push_back(s);
  }
  return p;
}

// Cofactor expansion along the first row.
template <class T>
T laplace_det(const std::vector<std::vector<T>>& m) {
  const std::size_t k = m.size();
  if (k == 0) return T(1);
  if (k == 1) return m[0][0];
  T det = 0;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::vector<T>> minor;
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<T> row;
      for (std::size_t c = 0; c < k; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(row);
    }
    const T term = m[0][j] * laplace_det(minor);
    det += (j % 2 == 0) ? term : T(-term);
  }
  return det;
}

// Bernoulli numbers (B_1 = +1/2 convention) by the Akiyama-Tanigawa algorithm.
inline std::vector<Rat> akiyama_tanigawa(std::size_t m) {
  std::vector<Rat> out;
  std::vector<Rat> a(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    a[i] = Rat(1, static_cast<unsigned long>(i + 1));
    for (std::size_t j = i; j >= 1; --j) {
      a[j - 1] = Rat(static_cast<unsigned long>(j)) * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
    out.push_back(a[0]);
  }
  return out;
}

// Secant numbers via the Seidel-Entringer boustrophedon triangle.
inline std::vector<Int> secant_boustrophedon(std::size_t count) {
  std::vector<Int> zigzag;  // E_0, E_1, E_2, ... (up/down numbers)
  std::vector<Int> row{1};
  zigzag.push_back(1);
  for (std::size_t n = 1; n <= 2 * count; ++n) {
    std::vector<Int> next(n + 1, 0);
    for (std::size_t k = 1; k <= n; ++k) next[k] = next[k - 1] + row[n - k];
    row = next;
    zigzag.push_back(row.back());
  }
  std::vector<Int> out;
  for (std::size_t n = 0; n < count; ++n) out.push_back(zigzag[2 * n]);
  return out;
}

inline Int factorial(unsigned long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// S2(n, k) = (1/k!) sum_j (-1)^j C(k, j) (k - j)^n.
inline Int stirling2_explicit(unsigned long n, unsigned long k) {
  Int s = 0;
  for (unsigned long j = 0; j <= k; ++j) {
    Int t;
    mpz_ui_pow_ui(t.get_mpz_t(), k - j, n);
    t *= binomial(k, j);
    s += (j % 2 == 0) ? t : Int(-t);
  }
  return s / factorial(k);
}

// Coefficient of x^k in the rising factorial x (x + 1) ... (x + n - 1).
inline Int stirling1_rising(unsigned long n, unsigned long k) {
  std::vector<Int> poly{1};
  for (unsigned long i = 0; i < n; ++i) {
    std::vector<Int> next(poly.size() + 1, 0);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] += Int(i) * poly[j];
    }
    poly = next;
  }
  return k < poly.size() ? poly[k] : Int(0);
}

// exp(f) = sum_k f^k / k! truncated at order N; f[0] must be zero.
inline std::vector<Rat> exp_series(const std::vector<Rat>& f) {
  const std::size_t N = f.size() - 1;
  std::vector<Rat> result(N + 1, Rat(0));
  std::vector<Rat> power(N + 1, Rat(0));
  power[0] = 1;
  for (std::size_t k = 0; k <= N; ++k) {
    for (std::size_t i = 0; i <= N; ++i) result[i] += power[i] / Rat(factorial(k));
    std::vector<Rat> next(N + 1, Rat(0));
    for (std::size_t i = 0; i <= N; ++i)
      for (std::size_t j = 0; i + j <= N; ++j) next[i + j] += power[i] * f[j];
    power = next;
  }
  for (Rat& r : result) r.canonicalize();
  return result;
}

}  // namespace oracle
