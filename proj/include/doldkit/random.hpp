#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "doldkit/arith.hpp"
#include "doldkit/dynsys.hpp"
#include "doldkit/seqkit.hpp"

namespace doldkit::gen {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);
/// Entries uniform in [lo, hi].
SeqPrefix window(Rng& rng, std::size_t N, long lo, long hi);
/// A window whose orbit counts b_n are uniform in [0, max_orbits].
SeqPrefix realizable_window(Rng& rng, std::size_t N, long max_orbits);
/// Lengths in [1, max_length], counts in [0, max_count].
OrbitSpec orbit_spec(Rng& rng, std::uint64_t max_length, std::uint64_t max_count);
IntMatrix matrix(Rng& rng, std::size_t dim, long lo, long hi);
/// Support in [1, max_support], coefficients in [-max_abs, max_abs].
PeriodicCombination combination(Rng& rng, std::uint64_t max_support, long max_abs);
/// A uniformly random permutation of 1..N.
std::vector<std::uint64_t> permutation(Rng& rng, std::size_t N);

}  // namespace doldkit::gen
