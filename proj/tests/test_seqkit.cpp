#include <gtest/gtest.h>

#include "doldkit/random.hpp"
#include "doldkit/seqkit.hpp"
#include "oracles.hpp"

using namespace doldkit;

namespace {

RatSeqPrefix rats(std::initializer_list<Rat> v) { return RatSeqPrefix(std::vector<Rat>(v)); }

SeqPrefix seq_from(std::size_t N, const std::function<Int(std::size_t)>& f) {
  std::vector<Int> v;
  for (std::size_t n = 1; n <= N; ++n) v.push_back(f(n));
  return SeqPrefix(std::move(v));
}

SeqPrefix lucas(std::size_t N) {
  std::vector<Int> v{1, 3};
  while (v.size() < N) v.push_back(v[v.size() - 1] + v[v.size() - 2]);
  v.resize(N);
  return SeqPrefix(std::move(v));
}

SeqPrefix pow2(std::size_t N) {
  return seq_from(N, [](std::size_t n) { return pow(Int(2), n); });
}

std::vector<Int> raw(const SeqPrefix& a) { return {a.values().begin(), a.values().end()}; }

}  // namespace

TEST(TransformB, Examples) {
  EXPECT_EQ(transform_B(pow2(6)), rats({2, 1, 2, 3, 6, 9}));
  EXPECT_EQ(transform_B(lucas(6)), rats({1, 1, 1, 1, 2, 2}));
  EXPECT_EQ(transform_B(make_seq({4, 8, 316, 2320, 16564, 116920})),
            rats({4, 2, 104, 578, 3312, ratio(58300, 3)}));
}

TEST(TransformB, AgreesWithOracle) {
  gen::Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const SeqPrefix a = gen::window(rng, 40, -1000, 1000);
    const auto want = oracle::orbit_counts(raw(a));
    EXPECT_EQ(transform_B(a), RatSeqPrefix(want));
  }
}

TEST(InverseB, Examples) {
  EXPECT_EQ(inverse_B(rats({1, 1, 1, 1, 2, 2})), to_rational(lucas(6)));
  EXPECT_EQ(inverse_B(rats({1, 0, 0, 0, 0})), rats({1, 1, 1, 1, 1}));
  EXPECT_EQ(inverse_B(rats({0, 1, 0, 0, 0, 0})), rats({0, 2, 0, 2, 0, 2}));
}

TEST(TransformC, Examples) {
  EXPECT_EQ(transform_C(pow2(6)), rats({2, 0, 0, 0, 0, 0}));
  EXPECT_EQ(transform_C(lucas(5)), rats({1, 1, 0, 0, 0}));
  const SeqPrefix mersenne = seq_from(10, [](std::size_t n) { return Int(pow(Int(2), n) - 1); });
  EXPECT_EQ(transform_C(mersenne), RatSeqPrefix(std::vector<Rat>(10, Rat(1))));
}

TEST(Transforms, AreBijectionsOnRandomWindows) {
  gen::Rng rng(11);
  for (int t = 0; t < 500; ++t) {
    const std::size_t N = static_cast<std::size_t>(gen::uniform(rng, 1, 48));
    const SeqPrefix a = gen::window(rng, N, -100, 100);
    ASSERT_EQ(inverse_B(transform_B(a)), to_rational(a));
    ASSERT_EQ(inverse_C(transform_C(a)), to_rational(a));
  }
}

TEST(Congruence, Examples) {
  const SeqPrefix identity = seq_from(8, [](std::size_t n) { return Int(n); });
  // a_2 - a_1 = 1 is already odd, so n = 2 is the least failing index.
  EXPECT_EQ(congruence_test(identity, Criterion::mobius()), CongruenceVerdict::fails(2, 1));
  const SeqPrefix sigma0 = seq_from(8, [](std::size_t n) { return divisor_sigma(0, n); });
  EXPECT_EQ(congruence_test(sigma0, Criterion::mobius()), CongruenceVerdict::fails(2, 1));

  const SeqPrefix L = lucas(100);
  const SeqPrefix mu = seq_from(100, [](std::size_t n) { return Int(mobius(n)); });
  for (const Criterion& c : {Criterion::mobius(), Criterion::phi(), Criterion::prime_power(),
                             Criterion::psi(mu)}) {
    EXPECT_EQ(congruence_test(L, c), CongruenceVerdict::holds(100));
  }
}

TEST(Congruence, PsiValidation) {
  EXPECT_THROW(validate_psi(make_seq({2, 0, 0})), InvalidPsi);
  try {
    validate_psi(make_seq({1, 0, 0}));
    FAIL();
  } catch (const InvalidPsi& e) {
    EXPECT_EQ(e.index(), 2u);
  }
  EXPECT_NO_THROW(validate_psi(make_seq({-1, 1, 1, 0, 1})));
  EXPECT_THROW(congruence_test(make_seq({1, 1, 1}), Criterion::psi(make_seq({1, 1}))), ShortWindow);
}

TEST(Congruence, NegativeInstances) {
  const SeqPrefix squares = seq_from(16, [](std::size_t n) { return Int(n * n); });
  EXPECT_FALSE(congruence_test(squares, Criterion::mobius()));
  for (unsigned k = 1; k <= 3; ++k) {
    const SeqPrefix s = seq_from(200, [k](std::size_t n) { return divisor_sigma(k, n); });
    EXPECT_EQ(congruence_test(s, Criterion::mobius()), CongruenceVerdict::holds(200)) << k;
  }
}

TEST(Congruence, AgreesWithOracleAndAcrossCriteria) {
  gen::Rng rng(3);
  const SeqPrefix mu = seq_from(48, [](std::size_t n) { return Int(mobius(n)); });
  const SeqPrefix phi = seq_from(48, [](std::size_t n) { return Int(static_cast<unsigned long>(euler_phi(n))); });
  for (int t = 0; t < 500; ++t) {
    SeqPrefix a = gen::window(rng, 48, -50, 50);
    if (t % 2 == 1) {
      // Bias toward late failures: a Dold window with one perturbed entry.
      auto v = raw(gen::realizable_window(rng, 48, 2));
      v[static_cast<std::size_t>(gen::uniform(rng, 8, 47))] += gen::uniform(rng, -2, 2);
      a = SeqPrefix(std::move(v));
    }
    const std::size_t want = oracle::first_non_dold(raw(a));
    const CongruenceVerdict ref = congruence_test(a, Criterion::mobius());
    ASSERT_EQ(ref.ok(), want == 0);
    if (!ref.ok()) {
      ASSERT_EQ(ref.index(), want);
    }
    for (const Criterion& c : {Criterion::phi(), Criterion::prime_power(), Criterion::psi(mu),
                               Criterion::psi(phi)}) {
      const CongruenceVerdict v = congruence_test(a, c);
      ASSERT_EQ(v.ok(), ref.ok());
      ASSERT_EQ(v.index(), ref.index());
    }
  }
}

TEST(Congruence, ClosedUnderRingOperations) {
  gen::Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const SeqPrefix x = gen::realizable_window(rng, 30, 3);
    const SeqPrefix y = gen::realizable_window(rng, 30, 3);
    std::vector<Int> sum, diff, prod;
    for (std::size_t n = 1; n <= 30; ++n) {
      sum.push_back(x(n) + y(n));
      diff.push_back(x(n) - y(n));
      prod.push_back(x(n) * y(n));
    }
    ASSERT_TRUE(congruence_test(SeqPrefix(sum), Criterion::mobius()));
    ASSERT_TRUE(congruence_test(SeqPrefix(diff), Criterion::mobius()));
    ASSERT_TRUE(congruence_test(SeqPrefix(prod), Criterion::mobius()));
  }
}

TEST(Realizable, Examples) {
  EXPECT_EQ(is_realizable(make_seq({1, 1, 2, 3, 5, 8})), CongruenceVerdict::fails(3, ratio(1, 3)));
  EXPECT_EQ(is_realizable(make_seq({1, 0, 1, 1, 2, 3})), CongruenceVerdict::fails(2, ratio(-1, 2)));
  EXPECT_EQ(is_realizable(lucas(2000)), CongruenceVerdict::holds(2000));
  // Integral but negative orbit count.
  EXPECT_EQ(is_realizable(make_seq({1, -1})), CongruenceVerdict::fails(2, -1));
}

TEST(Realizable, AgreesWithOracle) {
  gen::Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    SeqPrefix a = t % 3 == 0 ? gen::window(rng, 24, 0, 40) : gen::realizable_window(rng, 24, 2);
    if (t % 3 == 2) {
      auto v = raw(a);
      v[static_cast<std::size_t>(gen::uniform(rng, 0, 23))] -= gen::uniform(rng, 0, 30);
      a = SeqPrefix(std::move(v));
    }
    const std::size_t want = oracle::first_unrealizable(raw(a));
    const CongruenceVerdict v = is_realizable(a);
    ASSERT_EQ(v.ok(), want == 0);
    if (!v.ok()) {
      ASSERT_EQ(v.index(), want);
    }
  }
}

TEST(DoldSplit, Examples) {
  const DoldSplit s = dold_split(make_seq({-1, 1, -1, 1}));
  EXPECT_EQ(s.plus, rats({0, 2, 0, 2}));
  EXPECT_EQ(s.minus, rats({1, 1, 1, 1}));

  const SeqPrefix L = lucas(10);
  const DoldSplit r = dold_split(L);
  EXPECT_EQ(r.plus, to_rational(L));
  EXPECT_EQ(r.minus, RatSeqPrefix(std::vector<Rat>(10, Rat(0))));

  const SeqPrefix lef = (PeriodicCombination::reg(3) - PeriodicCombination::reg(2)).eval(12);
  const DoldSplit m = dold_split(lef);
  EXPECT_EQ(m.plus, to_rational(reg(3, 12)));
  EXPECT_EQ(m.minus, to_rational(reg(2, 12)));

  EXPECT_THROW(dold_split(make_seq({1, 2})), NotDold);
}

TEST(DoldSplit, PartsAreRealizable) {
  gen::Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    const SeqPrefix x = gen::realizable_window(rng, 24, 3);
    const SeqPrefix y = gen::realizable_window(rng, 24, 3);
    std::vector<Int> d;
    for (std::size_t n = 1; n <= 24; ++n) d.push_back(x(n) - y(n));
    const DoldSplit s = dold_split(SeqPrefix(d));
    ASSERT_TRUE(is_realizable(to_integral(s.plus)));
    ASSERT_TRUE(is_realizable(to_integral(s.minus)));
    for (std::size_t n = 1; n <= 24; ++n) ASSERT_EQ(s.plus(n) - s.minus(n), Rat(d[n - 1]));
  }
}

TEST(Periodic, ExpansionExamples) {
  const auto r1 = periodic_expansion(reg(2, 12), 6);
  EXPECT_EQ(std::get<PeriodicCombination>(r1), PeriodicCombination::reg(2));

  const auto r2 = periodic_expansion(make_seq({0, -2, 3, -2, 0, 1, 0, -2, 3, -2, 0, 1}), 6);
  EXPECT_EQ(std::get<PeriodicCombination>(r2),
            PeriodicCombination({{2, Int(-1)}, {3, Int(1)}}));

  const auto r3 = periodic_expansion(pow2(12), 6);
  ASSERT_TRUE(std::holds_alternative<NotPeriodic>(r3));
  EXPECT_EQ(std::get<NotPeriodic>(r3).index, 7u);

  EXPECT_THROW(periodic_expansion(pow2(11), 6), ShortWindow);
  // A non-integral b_n is reported at its own index.
  EXPECT_EQ(std::get<NotPeriodic>(periodic_expansion(make_seq({1, 2, 1, 2}), 2)).index, 2u);
}

TEST(Periodic, CombinationAlgebra) {
  EXPECT_EQ(PeriodicCombination::reg(4) * PeriodicCombination::reg(6),
            PeriodicCombination::reg(12, 2));
  const PeriodicCombination x({{2, Int(3)}, {5, Int(-1)}});
  EXPECT_EQ(combo_mul(PeriodicCombination::reg(1), x), x);
  EXPECT_EQ(combo_eval(combo_add(PeriodicCombination::reg(2), PeriodicCombination::reg(3)), 6),
            make_seq({0, 2, 3, 2, 0, 5}));
  EXPECT_TRUE((x - x).empty());
}

TEST(Periodic, ProductMatchesPointwise) {
  gen::Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    const auto x = gen::combination(rng, 8, 4);
    const auto y = gen::combination(rng, 8, 4);
    const SeqPrefix p = combo_mul(x, y).eval(60);
    for (std::size_t n = 1; n <= 60; ++n) ASSERT_EQ(p(n), x.at(n) * y.at(n));
  }
}

TEST(QDold, Examples) {
  std::vector<IntPoly> qn, ones, constq;
  for (std::size_t n = 1; n <= 12; ++n) {
    qn.push_back(IntPoly::monomial(1, n));
    ones.push_back(IntPoly({1}));
    constq.push_back(IntPoly::monomial(1, 1));
  }
  EXPECT_EQ(q_dold_check(qn), QCongruenceVerdict::holds(12));
  EXPECT_EQ(q_dold_check(ones), QCongruenceVerdict::holds(12));
  EXPECT_EQ(q_dold_check(constq), QCongruenceVerdict::fails(2, IntPoly({-2})));
}

TEST(QDold, BracketsAndDivision) {
  EXPECT_EQ(q_bracket(3), IntPoly({1, 1, 1}));
  EXPECT_EQ(to_string(IntPoly({1, 2, -1})), "1 + 2q - q^2");
  const IntPoly num = IntPoly({1, 0, 0, 0, 0, -1});
  const PolyDivision d = divide_monic(num, q_bracket(5));
  EXPECT_TRUE(d.remainder.is_zero());
  EXPECT_EQ(d.quotient, IntPoly({1, -1}));
  EXPECT_THROW(divide_monic(num, IntPoly({1, 2})), std::invalid_argument);
}

TEST(QDold, QHoldsImpliesIntegerDoldAtOne) {
  // Random polynomials rarely pass; c (q^n + 1) always does.
  gen::Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    std::vector<IntPoly> a;
    for (std::size_t n = 1; n <= 16; ++n) {
      std::vector<Int> c(n + 1, 0);
      for (std::size_t j = 0; j <= n; ++j) c[j] = gen::uniform(rng, -2, 2);
      a.emplace_back(std::move(c));
    }
    if (t % 2 == 0) {
      const Int c = gen::uniform(rng, 1, 3);
      for (std::size_t n = 1; n <= 16; ++n) a[n - 1] = IntPoly::monomial(c, n) + IntPoly({c});
    }
    if (q_dold_check(a)) {
      std::vector<Int> at_one;
      for (const IntPoly& p : a) at_one.push_back(p.eval(1));
      ASSERT_TRUE(congruence_test(SeqPrefix(at_one), Criterion::mobius()));
    }
  }
}
