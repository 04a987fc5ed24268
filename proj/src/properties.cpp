#include "doldkit/properties.hpp"

#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

#include "doldkit/dynsys.hpp"
#include "doldkit/lefschetz.hpp"
#include "doldkit/random.hpp"
#include "doldkit/repair.hpp"
#include "doldkit/series.hpp"

namespace doldkit {

namespace {

using gen::Rng;
using Check = std::function<std::optional<std::string>(Rng&)>;

std::string show(const SeqPrefix& a) {
  std::string out = "(";
  for (const Int& x : a.values()) {
    if (out.size() > 1) out += ",";
    out += to_string(x);
  }
  return out + ")";
}

SeqPrefix window_of(std::vector<Int> v) { return SeqPrefix(std::move(v)); }

SeqPrefix seq_of(std::size_t N, long (*f)(std::size_t)) {
  std::vector<Int> v;
  for (std::size_t n = 1; n <= N; ++n) v.emplace_back(f(n));
  return window_of(std::move(v));
}

// A Dold window: difference of two realizable windows, optionally perturbed
// at one index.
SeqPrefix dold_like_window(Rng& rng, std::size_t N) {
  SeqPrefix x = gen::realizable_window(rng, N, 3);
  SeqPrefix y = gen::realizable_window(rng, N, 3);
  std::vector<Int> v;
  for (std::size_t n = 1; n <= N; ++n) v.push_back(x(n) - y(n));
  if (gen::uniform(rng, 0, 1) == 1) {
    v[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<long>(N) - 1))] +=
        gen::uniform(rng, -3, 3);
  }
  return window_of(std::move(v));
}

// A realizable source defined at every n: periodic points of a finite
// orbit census, or traces of a non-negative matrix.
SequenceSource realizable_source(Rng& rng) {
  if (gen::uniform(rng, 0, 1) == 0) {
    OrbitSpec spec = gen::orbit_spec(rng, 6, 3);
    return SequenceSource("orbits", std::numeric_limits<std::uint64_t>::max(),
                          [spec](std::uint64_t n) {
                            Int s = 0;
                            for (const auto& [len, count] : spec.counts()) {
                              if (n % len == 0) s += Int(len) * Int(count);
                            }
                            return s;
                          });
  }
  return SequenceSource::trace_of(gen::matrix(rng, 2, 0, 2),
                                  std::numeric_limits<std::uint64_t>::max());
}

std::optional<std::string> criterion_equivalence(Rng& rng) {
  constexpr std::size_t N = 48;
  const SeqPrefix a = gen::uniform(rng, 0, 1) == 0 ? gen::window(rng, N, -50, 50)
                                                   : dold_like_window(rng, N);
  const SeqPrefix mu = seq_of(N, [](std::size_t n) { return long(mobius(n)); });
  const SeqPrefix phi = seq_of(N, [](std::size_t n) { return long(euler_phi(n)); });
  const std::vector<Criterion> criteria{Criterion::mobius(), Criterion::phi(),
                                        Criterion::prime_power(), Criterion::psi(mu),
                                        Criterion::psi(phi)};
  const CongruenceVerdict ref = congruence_test(a, criteria.front());
  for (const Criterion& c : criteria) {
    const CongruenceVerdict v = congruence_test(a, c);
    if (v.ok() != ref.ok() || v.index() != ref.index()) return "criteria disagree on " + show(a);
  }
  return std::nullopt;
}

std::optional<std::string> orbit_duality(Rng& rng) {
  constexpr std::size_t N = 24;
  const OrbitSpec spec = gen::orbit_spec(rng, 8, 5);
  const FiniteMap T = realize(spec);
  for (std::uint64_t n = 1; n <= N; ++n) {
    std::uint64_t expected = 0;
    for (std::uint64_t d : divisors(n)) expected += d * spec.count(d);
    if (count_fixed(T, n) != expected) return "fixed-point count mismatch at n=" + std::to_string(n);
  }
  if (!(transform_B(fixed_point_counts(T, N)) == spec.window(N))) return "orbit counts not recovered";
  return std::nullopt;
}

std::optional<std::string> hankel_vanishing_prop(Rng& rng) {
  const IntMatrix A = gen::matrix(rng, 3, -5, 5);
  const IntMatrix B = gen::matrix(rng, 2, -5, 5);
  const SeqPrefix a = lefschetz_sequence(A, B, 48);
  if (!congruence_test(a, Criterion::mobius())) return "Lefschetz window not Dold: " + show(a);
  if (!generating_hankel_test(a.prefix(17), 3, 5)) return "Hankel determinant nonzero: " + show(a);
  return std::nullopt;
}

std::optional<std::string> euler_transforms(Rng& rng) {
  constexpr std::size_t N = 24;
  const SeqPrefix a = gen::realizable_window(rng, N, 3);
  const PowerSeries z1 = zeta_from_fix(a);
  const RatSeqPrefix b = transform_B(a);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::size_t n = 1; n <= N; ++n) counts[n] = b(n).get_num().get_ui();
  const PowerSeries z2 = zeta_product_from_orbits(OrbitSpec(std::move(counts)), N);
  const RatSeqPrefix c = transform_C(a);
  std::vector<Rat> poly{Rat(1)};
  for (std::size_t n = 1; n <= N; ++n) poly.push_back(-c(n));
  const PowerSeries z3 = ps_inv(PowerSeries(std::move(poly)));
  if (!(z1 == z2) || !(z1 == z3)) return "zeta expressions differ for " + show(a);
  return std::nullopt;
}

std::optional<std::string> periodic_roundtrip(Rng& rng) {
  const PeriodicCombination comb = gen::combination(rng, 8, 4);
  const auto [A, B] = periodic_to_matrices(comb);
  const SeqPrefix a = lefschetz_sequence(A, B, 16);
  if (!(a == comb.eval(16))) return "Lefschetz sequence differs from combination";
  const auto expansion = periodic_expansion(a, 8);
  const auto* got = std::get_if<PeriodicCombination>(&expansion);
  if (got == nullptr || !(*got == comb)) return "expansion does not recover combination";
  return std::nullopt;
}

std::optional<std::string> euler_fermat(Rng& rng) {
  const std::size_t dim = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
  const IntMatrix A = gen::matrix(rng, dim, -5, 5);
  static const std::uint64_t primes[] = {2, 3, 5, 7};
  const std::uint64_t p = primes[gen::uniform(rng, 0, 3)];
  const unsigned r = static_cast<unsigned>(gen::uniform(rng, 1, 3));
  if (!euler_fermat_check(A, p, r)) return format_matrix(A) + " fails at p=" + std::to_string(p);
  return std::nullopt;
}

std::optional<std::string> nonneg_trace(Rng& rng) {
  const std::size_t dim = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
  const IntMatrix A = gen::matrix(rng, dim, 0, 3);
  if (!is_realizable(trace_sequence(A, 60))) return format_matrix(A) + " traces not realizable";
  return std::nullopt;
}

std::optional<std::string> monomial_time_change(Rng& rng) {
  const SequenceSource src = realizable_source(rng);
  const auto k = static_cast<std::uint64_t>(gen::uniform(rng, 1, 3));
  const auto ell = static_cast<std::uint64_t>(gen::uniform(rng, 1, 4));
  const SeqPrefix a = apply_time_change(src, TimeChange::monomial(k, ell), 16);
  if (!congruence_test(a, Criterion::mobius()) || !is_realizable(a)) {
    return "mono:" + std::to_string(k) + "," + std::to_string(ell) + " broke " + src.name();
  }
  return std::nullopt;
}

std::optional<std::string> gp_time_change(Rng& rng) {
  static const std::uint64_t primes[] = {2, 3, 5};
  const SequenceSource src = realizable_source(rng);
  const std::uint64_t p = primes[gen::uniform(rng, 0, 2)];
  if (!is_realizable(apply_time_change(src, TimeChange::gp(p), 48))) {
    return "gp:" + std::to_string(p) + " broke " + src.name();
  }
  return std::nullopt;
}

std::optional<std::string> tc_witness(Rng& rng) {
  const std::size_t N = static_cast<std::size_t>(gen::uniform(rng, 2, 9));
  std::vector<std::uint64_t> sigma = gen::permutation(rng, N);
  bool identity = true;
  for (std::size_t i = 0; i < N; ++i) identity = identity && sigma[i] == i + 1;
  const auto w = surjective_tc_witness(sigma);
  if (identity) return w ? std::optional<std::string>("witness for the identity") : std::nullopt;
  if (!w) return "no witness for a non-identity permutation";
  std::vector<Int> v;
  for (std::uint64_t s : sigma) v.push_back(s % w->first == 0 ? Int(w->first) : Int(0));
  const CongruenceVerdict verdict = is_realizable(window_of(std::move(v)));
  if (verdict.ok() || verdict.index() != w->second) return "reported witness does not fail";
  return std::nullopt;
}

const std::map<std::string, Check>& registry() {
  static const std::map<std::string, Check> checks{
      {"criterion-equivalence", criterion_equivalence},
      {"euler-fermat", euler_fermat},
      {"euler-transforms", euler_transforms},
      {"gp-time-change", gp_time_change},
      {"hankel-vanishing", hankel_vanishing_prop},
      {"monomial-time-change", monomial_time_change},
      {"nonneg-trace", nonneg_trace},
      {"orbit-duality", orbit_duality},
      {"periodic-roundtrip", periodic_roundtrip},
      {"tc-witness", tc_witness},
  };
  return checks;
}

}  // namespace

std::vector<std::string> property_names() {
  std::vector<std::string> names;
  for (const auto& entry : registry()) names.push_back(entry.first);
  return names;
}

PropertyResult run_property(const std::string& name, std::uint64_t seed, std::size_t trials) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown property: " + name);
  Rng rng(seed);
  PropertyResult result{name, trials, 0, std::nullopt};
  for (std::size_t t = 0; t < trials; ++t) {
    if (auto failure = it->second(rng)) {
      ++result.failures;
      if (!result.first_failure) result.first_failure = "trial " + std::to_string(t) + ": " + *failure;
    }
  }
  return result;
}

}  // namespace doldkit
