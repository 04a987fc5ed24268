#include "doldkit/dynsys.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "doldkit/linalg.hpp"

namespace doldkit {

namespace {

// Largest map realize() will materialise.
constexpr std::uint64_t kMaxRealizedPoints = 1ULL << 28;

IntMatrix mul_mod(const IntMatrix& a, const IntMatrix& b, const Int& modulus) {
  IntMatrix c = a * b;
  std::vector<Int> e = c.entries();
  for (auto& x : e) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  return IntMatrix(c.dim(), std::move(e));
}

Int trace_pow_mod(const IntMatrix& A, std::uint64_t e, const Int& modulus) {
  IntMatrix result = IntMatrix::identity(A.dim());
  IntMatrix base = A;
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, base, modulus);
    e >>= 1U;
    if (e > 0) base = mul_mod(base, base, modulus);
  }
  return result.trace();
}

}  // namespace

FiniteMap::FiniteMap(std::vector<std::size_t> table) : table_(std::move(table)) {
  for (auto t : table_) {
    if (t >= table_.size()) throw std::invalid_argument("FiniteMap: target out of range");
  }
}

OrbitSpec::OrbitSpec(std::map<std::uint64_t, std::uint64_t> counts) {
  for (const auto& [len, c] : counts) {
    if (len == 0) throw std::invalid_argument("OrbitSpec: orbit length must be positive");
    if (c != 0) counts_.emplace(len, c);
  }
}

std::uint64_t OrbitSpec::count(std::uint64_t length) const {
  auto it = counts_.find(length);
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t OrbitSpec::points() const {
  std::uint64_t total = 0;
  for (const auto& [len, c] : counts_) {
    std::uint64_t block = 0;
    if (__builtin_mul_overflow(len, c, &block) || __builtin_add_overflow(total, block, &total)) {
      throw std::overflow_error("OrbitSpec: point count overflows 64 bits");
    }
  }
  return total;
}

RatSeqPrefix OrbitSpec::window(std::size_t N) const {
  std::vector<Rat> v(N, Rat(0));
  for (const auto& [len, c] : counts_) {
    if (len <= N) v[len - 1] = Rat(static_cast<unsigned long>(c));
  }
  return RatSeqPrefix(std::move(v));
}

IntMatrix::IntMatrix(std::size_t dim, std::vector<Int> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) throw std::invalid_argument("IntMatrix: not square");
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m = zero(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::zero(std::size_t dim) { return IntMatrix(dim, std::vector<Int>(dim * dim, Int(0))); }

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t k = rows.size();
  std::vector<Int> e;
  e.reserve(k * k);
  for (const auto& row : rows) {
    if (row.size() != k) throw std::invalid_argument("IntMatrix: not square");
    for (long x : row) e.emplace_back(x);
  }
  return IntMatrix(k, std::move(e));
}

Int IntMatrix::trace() const {
  Int t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

Int IntMatrix::determinant() const { return bareiss_determinant(entries_, dim_); }

IntMatrix IntMatrix::pow(std::uint64_t e) const {
  IntMatrix result = identity(dim_);
  IntMatrix base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("IntMatrix: dimension mismatch");
  const std::size_t k = a.dim_;
  IntMatrix c = IntMatrix::zero(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const Int& x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < k; ++j) c(i, j) += x * b(l, j);
    }
  }
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("IntMatrix: dimension mismatch");
  std::vector<Int> e(a.entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries_[i] - b.entries_[i];
  return IntMatrix(a.dim_, std::move(e));
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t k = 0;
  for (const auto& b : blocks) k += b.dim();
  IntMatrix m = IntMatrix::zero(k);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.dim(); ++i) {
      for (std::size_t j = 0; j < b.dim(); ++j) m(offset + i, offset + j) = b(i, j);
    }
    offset += b.dim();
  }
  return m;
}

IntMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  long long k = -1;
  if (!(in >> k) || k < 0) throw ParseError("matrix: missing or invalid dimension", 1);
  std::vector<Int> e;
  const auto dim = static_cast<std::size_t>(k);
  e.reserve(dim * dim);
  std::string token;
  while (in >> token) {
    try {
      e.push_back(parse_int(token));
    } catch (const std::invalid_argument&) {
      throw ParseError("matrix: bad entry '" + token + "'", 0);
    }
  }
  if (e.size() != dim * dim) {
    throw ParseError("matrix: expected " + std::to_string(dim * dim) + " entries, got " +
                         std::to_string(e.size()),
                     0);
  }
  return IntMatrix(dim, std::move(e));
}

std::string format_matrix(const IntMatrix& m) {
  std::string out = std::to_string(m.dim()) + "\n";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j > 0) out += ' ';
      out += m(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

OrbitSpec orbit_spec(const FiniteMap& T) {
  const std::size_t m = T.size();
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  // walk_id[x]: the walk that first reached x; pos[x]: step index within it.
  std::vector<std::size_t> walk_id(m, kUnseen);
  std::vector<std::size_t> pos(m, 0);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::size_t start = 0; start < m; ++start) {
    if (walk_id[start] != kUnseen) continue;
    std::size_t x = start;
    std::size_t step = 0;
    while (walk_id[x] == kUnseen) {
      walk_id[x] = start;
      pos[x] = step++;
      x = T(x);
    }
    if (walk_id[x] == start) ++counts[step - pos[x]];
  }
  return OrbitSpec(std::move(counts));
}

std::uint64_t count_fixed(const FiniteMap& T, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("count_fixed: n must be positive");
  std::uint64_t total = 0;
  const OrbitSpec spec = orbit_spec(T);
  for (const auto& [len, c] : spec.counts()) {
    if (n % len == 0) total += len * c;
  }
  return total;
}

SeqPrefix fixed_point_counts(const FiniteMap& T, std::size_t N) {
  const OrbitSpec spec = orbit_spec(T);
  std::vector<Int> v(N, Int(0));
  for (const auto& [len, c] : spec.counts()) {
    const Int block = Int(static_cast<unsigned long>(len)) * static_cast<unsigned long>(c);
    for (std::size_t n = len; n <= N; n += len) v[n - 1] += block;
  }
  return SeqPrefix(std::move(v));
}

FiniteMap realize(const OrbitSpec& spec) {
  const std::uint64_t total = spec.points();
  if (total > kMaxRealizedPoints) throw std::length_error("realize: orbit census too large to materialise");
  std::vector<std::size_t> table;
  table.reserve(total);
  for (const auto& [len, c] : spec.counts()) {
    for (std::uint64_t orbit = 0; orbit < c; ++orbit) {
      const std::size_t base = table.size();
      for (std::size_t i = 0; i < len; ++i) table.push_back(base + (i + 1) % len);
    }
  }
  return FiniteMap(std::move(table));
}

RealizabilityError::RealizabilityError(std::size_t n, Rat witness)
    : Error("sequence is not realizable at n = " + std::to_string(n) + " (b_n = " + to_string(witness) + ")"),
      n_(n),
      witness_(std::move(witness)) {}

FiniteMap realize_sequence(const SeqPrefix& a) {
  const auto verdict = is_realizable(a);
  if (!verdict) throw RealizabilityError(verdict.index(), verdict.witness());
  const auto b = transform_B(a);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::size_t n = 1; n <= b.size(); ++n) {
    const Int& c = b(n).get_num();
    if (c == 0) continue;
    if (!c.fits_ulong_p()) throw std::length_error("realize_sequence: orbit count exceeds 64 bits");
    counts.emplace(n, c.get_ui());
  }
  return realize(OrbitSpec(std::move(counts)));
}

SeqPrefix trace_sequence(const IntMatrix& A, std::size_t N) {
  std::vector<Int> v;
  v.reserve(N);
  IntMatrix power = A;
  for (std::size_t n = 1; n <= N; ++n) {
    v.push_back(power.trace());
    if (n < N) power = power * A;
  }
  return SeqPrefix(std::move(v));
}

bool euler_fermat_check(const IntMatrix& A, std::uint64_t p, unsigned r) {
  if (!is_prime(p)) throw std::invalid_argument("euler_fermat_check: p must be prime");
  if (r == 0) throw std::invalid_argument("euler_fermat_check: r must be positive");
  const Int modulus = pow(Int(static_cast<unsigned long>(p)), r);
  std::uint64_t e_hi = 1;
  for (unsigned i = 0; i < r; ++i) e_hi *= p;
  const Int hi = trace_pow_mod(A, e_hi, modulus);
  const Int lo = trace_pow_mod(A, e_hi / p, modulus);
  const Int diff = hi - lo;
  return mpz_divisible_p(diff.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

SeqPrefix det_fix_sequence(const IntMatrix& A, std::size_t N) {
  std::vector<Int> v;
  v.reserve(N);
  const IntMatrix I = IntMatrix::identity(A.dim());
  IntMatrix power = A;
  for (std::size_t n = 1; n <= N; ++n) {
    v.push_back(abs((I - power).determinant()));
    if (n < N) power = power * A;
  }
  return SeqPrefix(std::move(v));
}

SeqPrefix nielsen_circle(const Int& d, std::size_t N) {
  std::vector<Int> v;
  v.reserve(N);
  Int dn = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    dn *= d;
    v.push_back(abs(1 - dn));
  }
  return SeqPrefix(std::move(v));
}

SeqPrefix nielsen_klein(const Int& u, const Int& v, std::size_t N) {
  std::vector<Int> out;
  out.reserve(N);
  const bool expanding = abs(u) > 1;
  Int un = 1;
  Int vn = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    un *= u;
    vn *= v;
    out.push_back(expanding ? Int(abs(un * (vn - 1))) : Int(abs(vn - 1)));
  }
  return SeqPrefix(std::move(out));
}

bool sharkovskii_precedes(std::uint64_t m, std::uint64_t n) {
  if (m == 0 || n == 0) throw std::invalid_argument("sharkovskii_precedes: arguments must be positive");
  const auto a_m = static_cast<unsigned>(std::countr_zero(m));
  const auto a_n = static_cast<unsigned>(std::countr_zero(n));
  const std::uint64_t q_m = m >> a_m;
  const std::uint64_t q_n = n >> a_n;
  const bool pow2_m = q_m == 1;
  const bool pow2_n = q_n == 1;
  if (pow2_m != pow2_n) return !pow2_m;  // 2^a * odd (odd > 1) precede all powers of two
  if (pow2_m) return a_m > a_n;          // powers of two in decreasing order
  if (a_m != a_n) return a_m < a_n;
  return q_m < q_n;
}

}  // namespace doldkit
