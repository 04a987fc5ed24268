#include "doldkit/repair.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "doldkit/errors.hpp"

namespace doldkit {

namespace {

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    auto next = checked_mul(out, base);
    if (!next) return std::nullopt;
    out = *next;
  }
  return out;
}

// Column k of the triangle T(m, j) = weight(m, j) T(m-1, j) + T(m-1, j-1),
// sampled at rows m = k .. k + count - 1.
template <class Weight>
std::vector<Int> triangle_column(std::uint64_t k, std::size_t count, Weight weight) {
  std::vector<Int> row(k + 1, 0);
  row[0] = 1;
  std::vector<Int> out;
  out.reserve(count);
  if (k == 0) out.push_back(1);
  for (std::uint64_t m = 1; out.size() < count; ++m) {
    for (std::uint64_t j = std::min<std::uint64_t>(m, k); j >= 1; --j) {
      row[j] = weight(m, j) * row[j] + row[j - 1];
    }
    row[0] = 0;
    if (m >= k) out.push_back(row[k]);
  }
  return out;
}

std::vector<Int> stirling1_column(std::uint64_t k, std::size_t count) {
  return triangle_column(k, count, [](std::uint64_t m, std::uint64_t) { return Int(m - 1); });
}

std::vector<Int> stirling2_column(std::uint64_t k, std::size_t count) {
  return triangle_column(k, count, [](std::uint64_t, std::uint64_t j) { return Int(j); });
}

// Binomial rows C(m, 0..m) built incrementally.
class BinomialRows {
 public:
  const std::vector<Int>& next() {
    std::vector<Int> fresh(row_.size() + 1, 1);
    for (std::size_t j = 1; j < row_.size(); ++j) fresh[j] = row_[j - 1] + row_[j];
    row_ = std::move(fresh);
    return row_;
  }
  const std::vector<Int>& current() const { return row_; }

 private:
  std::vector<Int> row_{1};
};

std::vector<Int> secant_numbers(std::size_t count) {
  // E_{2n} from sum_{k<=n} C(2n, 2k) E_{2k} = 0.
  std::vector<Int> E{1};
  BinomialRows binom;
  for (std::size_t n = 1; n < count; ++n) {
    binom.next();
    const std::vector<Int>& row = binom.next();
    Int s = 0;
    for (std::size_t k = 0; k < n; ++k) s += row[2 * k] * E[k];
    E.push_back(-s);
  }
  for (std::size_t n = 1; n < E.size(); n += 2) E[n] = -E[n];
  return E;
}

std::pair<Int, Int> tau_beta(const Rat& b2n, std::uint64_t n) {
  Rat q = abs(b2n) / Rat(Int(2 * n));
  q.canonicalize();
  return {q.get_num(), q.get_den()};
}

std::uint64_t parse_suffix(const std::string& name, const std::string& prefix) {
  const std::string digits = name.substr(prefix.size());
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
    throw std::invalid_argument("bad generator name: " + name);
  }
  return std::stoull(digits);
}

}  // namespace

std::pair<Int, Int> fibonacci_pair(std::uint64_t n) {
  Int a = 0;  // F_k
  Int b = 1;  // F_{k+1}
  for (int bit = 63; bit >= 0; --bit) {
    Int two_b = 2 * b;
    Int even = a * (two_b - a);  // F_{2k}
    Int odd = a * a + b * b;     // F_{2k+1}
    if ((n >> bit) & 1U) {
      a = odd;
      b = even + odd;
    } else {
      a = even;
      b = odd;
    }
  }
  return {a, b};
}

Int fibonacci_number(std::uint64_t n) { return fibonacci_pair(n).first; }

Int lucas_number(std::uint64_t n) {
  auto [f, g] = fibonacci_pair(n);
  return 2 * g - f;
}

Int stirling1(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  return stirling1_column(k, n - k + 1).back();
}

Int stirling2(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  return stirling2_column(k, n - k + 1).back();
}

std::vector<Rat> bernoulli_numbers(std::size_t m) {
  // sum_{j<=k} C(k+1, j) B_j = 0 for k >= 1.
  std::vector<Rat> B{Rat(1)};
  BinomialRows binom;
  binom.next();
  for (std::size_t k = 1; k <= m; ++k) {
    const std::vector<Int>& row = binom.next();  // C(k+1, .)
    Rat s = 0;
    for (std::size_t j = 0; j < k; ++j) s += Rat(row[j]) * B[j];
    Rat bk = -s / Rat(Int(k + 1));
    bk.canonicalize();
    B.push_back(bk);
  }
  return B;
}

std::pair<Int, Int> bernoulli_pair(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("bernoulli_pair: n must be positive");
  return tau_beta(bernoulli_numbers(2 * n).back(), n);
}

Int euler_abs(std::uint64_t n) { return secant_numbers(n + 1).back(); }

SequenceSource::SequenceSource(std::string name, std::uint64_t horizon, Rule rule, Batch batch)
    : name_(std::move(name)), horizon_(horizon), rule_(std::move(rule)), batch_(std::move(batch)) {}

Int SequenceSource::at(std::uint64_t n) const {
  if (n == 0 || n > horizon_) throw HorizonExceeded(n, horizon_);
  return rule_(n);
}

SeqPrefix SequenceSource::window(std::size_t N) const {
  if (N == 0) throw EmptyWindow();
  if (N > horizon_) throw HorizonExceeded(N, horizon_);
  if (batch_) return SeqPrefix(batch_(N));
  std::vector<Int> v;
  v.reserve(N);
  for (std::size_t n = 1; n <= N; ++n) v.push_back(rule_(n));
  return SeqPrefix(std::move(v));
}

SequenceSource SequenceSource::fibonacci(std::uint64_t horizon) {
  return SequenceSource("fib", horizon, fibonacci_number);
}

SequenceSource SequenceSource::lucas(std::uint64_t horizon) {
  return SequenceSource("lucas", horizon, lucas_number);
}

SequenceSource SequenceSource::fibonacci_power(unsigned j, std::uint64_t horizon) {
  if (j == 0) throw std::invalid_argument("fibonacci_power: exponent must be positive");
  return SequenceSource("fib-power-" + std::to_string(j), horizon, [j](std::uint64_t n) {
    auto m = checked_pow(n, j);
    if (!m) throw std::overflow_error("fibonacci_power: n^j overflows");
    return fibonacci_number(*m);
  });
}

SequenceSource SequenceSource::stirling1_row(std::uint64_t k, std::uint64_t horizon) {
  if (k == 0) throw std::invalid_argument("stirling1_row: k must be positive");
  return SequenceSource(
      "stirling1-" + std::to_string(k), horizon,
      [k](std::uint64_t n) { return stirling1(n + k - 1, k); },
      [k](std::size_t N) { return stirling1_column(k, N); });
}

SequenceSource SequenceSource::stirling2_row(std::uint64_t k, std::uint64_t horizon) {
  if (k == 0) throw std::invalid_argument("stirling2_row: k must be positive");
  return SequenceSource(
      "stirling2-" + std::to_string(k), horizon,
      [k](std::uint64_t n) { return stirling2(n + k - 1, k); },
      [k](std::size_t N) { return stirling2_column(k, N); });
}

SequenceSource SequenceSource::trace_of(IntMatrix A, std::uint64_t horizon) {
  return SequenceSource(
      "trace", horizon, [A](std::uint64_t n) { return A.pow(n).trace(); },
      [A](std::size_t N) {
        SeqPrefix t = trace_sequence(A, N);
        return std::vector<Int>(t.values().begin(), t.values().end());
      });
}

SequenceSource SequenceSource::bernoulli_tau(std::uint64_t horizon) {
  return SequenceSource(
      "bernoulli-tau", horizon, [](std::uint64_t n) { return bernoulli_pair(n).first; },
      [](std::size_t N) {
        const std::vector<Rat> B = bernoulli_numbers(2 * N);
        std::vector<Int> out;
        for (std::size_t n = 1; n <= N; ++n) out.push_back(tau_beta(B[2 * n], n).first);
        return out;
      });
}

SequenceSource SequenceSource::bernoulli_beta(std::uint64_t horizon) {
  return SequenceSource(
      "bernoulli-beta", horizon, [](std::uint64_t n) { return bernoulli_pair(n).second; },
      [](std::size_t N) {
        const std::vector<Rat> B = bernoulli_numbers(2 * N);
        std::vector<Int> out;
        for (std::size_t n = 1; n <= N; ++n) out.push_back(tau_beta(B[2 * n], n).second);
        return out;
      });
}

SequenceSource SequenceSource::euler_abs(std::uint64_t horizon) {
  return SequenceSource(
      "euler-abs", horizon, [](std::uint64_t n) { return doldkit::euler_abs(n); },
      [](std::size_t N) {
        std::vector<Int> E = secant_numbers(N + 1);
        return std::vector<Int>(E.begin() + 1, E.end());
      });
}

SequenceSource SequenceSource::prefix(SeqPrefix a) {
  const std::uint64_t horizon = a.size();
  return SequenceSource("prefix", horizon, [a](std::uint64_t n) { return a(n); });
}

std::optional<SequenceSource> SequenceSource::by_name(const std::string& name) {
  auto starts = [&](const std::string& p) { return name.rfind(p, 0) == 0; };
  if (name == "fib") return fibonacci();
  if (name == "lucas") return lucas();
  if (name == "bernoulli-tau") return bernoulli_tau();
  if (name == "bernoulli-beta") return bernoulli_beta();
  if (name == "euler-abs") return euler_abs();
  if (starts("fib-power-")) {
    return fibonacci_power(static_cast<unsigned>(parse_suffix(name, "fib-power-")));
  }
  if (starts("stirling1-")) return stirling1_row(parse_suffix(name, "stirling1-"));
  if (starts("stirling2-")) return stirling2_row(parse_suffix(name, "stirling2-"));
  return std::nullopt;
}

SequenceSource scaled_source(const SequenceSource& src, const Int& c) {
  return SequenceSource(
      to_string(c) + "*" + src.name(), src.horizon(),
      [src, c](std::uint64_t n) { return Int(c * src.at(n)); },
      [src, c](std::size_t N) {
        SeqPrefix w = src.window(N);
        std::vector<Int> out;
        out.reserve(N);
        for (const Int& x : w.values()) out.push_back(c * x);
        return out;
      });
}

TimeChange TimeChange::monomial(std::uint64_t k, std::uint64_t ell) {
  if (k == 0 || ell == 0) throw std::invalid_argument("monomial time change needs k, l >= 1");
  return TimeChange(Monomial{k, ell});
}

TimeChange TimeChange::gp(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("gp time change needs a prime");
  return TimeChange(Gp{p});
}

TimeChange TimeChange::compose(std::vector<TimeChange> parts) {
  if (parts.empty()) throw std::invalid_argument("empty time-change composition");
  if (parts.size() == 1) return std::move(parts.front());
  return TimeChange(std::move(parts));
}

TimeChange TimeChange::parse(const std::string& text) {
  std::vector<TimeChange> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    auto number = [&](const std::string& s) {
      if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) {
        throw ParseError("bad time change: " + item, 0);
      }
      return std::stoull(s);
    };
    try {
      if (item.rfind("mono:", 0) == 0) {
        const std::string args = item.substr(5);
        const std::size_t comma = args.find(',');
        if (comma == std::string::npos) throw ParseError("bad time change: " + item, 0);
        parts.push_back(monomial(number(args.substr(0, comma)), number(args.substr(comma + 1))));
      } else if (item.rfind("gp:", 0) == 0) {
        parts.push_back(gp(number(item.substr(3))));
      } else {
        throw ParseError("bad time change: " + item, 0);
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 0);
    } catch (const std::out_of_range&) {
      throw ParseError("time change parameter out of range: " + item, 0);
    }
    start = end + 1;
  }
  return compose(std::move(parts));
}

std::optional<std::uint64_t> TimeChange::checked(std::uint64_t n) const {
  if (const auto* m = std::get_if<Monomial>(&rule_)) {
    auto power = checked_pow(n, m->k);
    if (!power) return std::nullopt;
    return checked_mul(*power, m->ell);
  }
  if (const auto* g = std::get_if<Gp>(&rule_)) {
    return n % g->p == 0 ? checked_mul(n, g->p) : std::optional<std::uint64_t>(n);
  }
  std::optional<std::uint64_t> v = n;
  for (const TimeChange& part : std::get<std::vector<TimeChange>>(rule_)) {
    v = part.checked(*v);
    if (!v) break;
  }
  return v;
}

std::uint64_t TimeChange::operator()(std::uint64_t n) const {
  auto v = checked(n);
  if (!v) throw std::overflow_error("time change overflows 64 bits at n = " + std::to_string(n));
  return *v;
}

std::string TimeChange::describe() const {
  if (const auto* m = std::get_if<Monomial>(&rule_)) {
    return "mono:" + std::to_string(m->k) + "," + std::to_string(m->ell);
  }
  if (const auto* g = std::get_if<Gp>(&rule_)) return "gp:" + std::to_string(g->p);
  std::string out;
  for (const TimeChange& part : std::get<std::vector<TimeChange>>(rule_)) {
    if (!out.empty()) out += ';';
    out += part.describe();
  }
  return out;
}

SeqPrefix apply_time_change(const SequenceSource& src, const TimeChange& h, std::size_t N) {
  if (N == 0) throw EmptyWindow();
  std::vector<std::uint64_t> targets;
  targets.reserve(N);
  for (std::size_t n = 1; n <= N; ++n) {
    auto t = h.checked(n);
    if (!t) throw HorizonExceeded(std::numeric_limits<std::uint64_t>::max(), src.horizon());
    if (*t > src.horizon()) throw HorizonExceeded(*t, src.horizon());
    targets.push_back(*t);
  }
  std::vector<Int> v;
  v.reserve(N);
  for (std::uint64_t t : targets) v.push_back(src.at(t));
  return SeqPrefix(std::move(v));
}

FailureResult failure_window(const SequenceSource& src, std::size_t N) {
  const RatSeqPrefix b = transform_B(src.window(N));
  FailureResult result;
  result.window = N;
  for (std::size_t n = 1; n <= N; ++n) {
    Int next = lcm(result.lcm_value, b(n).get_den());
    if (next != result.lcm_value) {
      result.lcm_value = next;
      result.last_new_prime_at = n;
    }
  }
  return result;
}

std::optional<std::pair<std::uint64_t, std::size_t>> surjective_tc_witness(
    const std::vector<std::uint64_t>& sigma) {
  const std::size_t N = sigma.size();
  if (N == 0) throw EmptyWindow();
  std::vector<bool> seen(N + 1, false);
  for (std::uint64_t s : sigma) {
    if (s == 0 || s > N || seen[s]) throw NotPermutation();
    seen[s] = true;
  }
  bool identity = true;
  for (std::size_t i = 0; i < N; ++i) identity = identity && sigma[i] == i + 1;
  if (identity) return std::nullopt;

  for (std::uint64_t k = 1; k <= N; ++k) {
    std::vector<Int> v;
    v.reserve(N);
    for (std::uint64_t s : sigma) v.push_back(s % k == 0 ? Int(k) : Int(0));
    const CongruenceVerdict verdict = is_realizable(SeqPrefix(std::move(v)));
    if (!verdict) return std::make_pair(k, verdict.index());
  }
  throw std::logic_error("surjective_tc_witness: no witness for a non-identity permutation");
}

}  // namespace doldkit
