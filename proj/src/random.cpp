#include "doldkit/random.hpp"

#include <algorithm>
#include <numeric>

namespace doldkit::gen {

long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

SeqPrefix window(Rng& rng, std::size_t N, long lo, long hi) {
  std::vector<Int> v;
  v.reserve(N);
  for (std::size_t i = 0; i < N; ++i) v.emplace_back(uniform(rng, lo, hi));
  return SeqPrefix(std::move(v));
}

SeqPrefix realizable_window(Rng& rng, std::size_t N, long max_orbits) {
  std::vector<Rat> b;
  b.reserve(N);
  for (std::size_t i = 0; i < N; ++i) b.emplace_back(uniform(rng, 0, max_orbits));
  return to_integral(inverse_B(RatSeqPrefix(std::move(b))));
}

OrbitSpec orbit_spec(Rng& rng, std::uint64_t max_length, std::uint64_t max_count) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t len = 1; len <= max_length; ++len) {
    counts[len] = static_cast<std::uint64_t>(uniform(rng, 0, static_cast<long>(max_count)));
  }
  return OrbitSpec(std::move(counts));
}

IntMatrix matrix(Rng& rng, std::size_t dim, long lo, long hi) {
  std::vector<Int> e;
  e.reserve(dim * dim);
  for (std::size_t i = 0; i < dim * dim; ++i) e.emplace_back(uniform(rng, lo, hi));
  return IntMatrix(dim, std::move(e));
}

PeriodicCombination combination(Rng& rng, std::uint64_t max_support, long max_abs) {
  std::map<std::uint64_t, Int> coeffs;
  for (std::uint64_t d = 1; d <= max_support; ++d) coeffs[d] = uniform(rng, -max_abs, max_abs);
  return PeriodicCombination(std::move(coeffs));
}

std::vector<std::uint64_t> permutation(Rng& rng, std::size_t N) {
  std::vector<std::uint64_t> p(N);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace doldkit::gen
