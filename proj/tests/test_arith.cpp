#include <gtest/gtest.h>

#include <random>

#include "doldkit/arith.hpp"
#include "doldkit/linalg.hpp"
#include "oracles.hpp"

using namespace doldkit;

namespace {

ArithFnPrefix fn(std::initializer_list<long> v) {
  std::vector<Rat> out;
  for (long x : v) out.emplace_back(x);
  return ArithFnPrefix(std::move(out));
}

ArithFnPrefix random_fn(std::mt19937_64& rng, std::size_t N) {
  std::uniform_int_distribution<long> d(-9, 9);
  std::vector<Rat> out;
  for (std::size_t i = 0; i < N; ++i) out.emplace_back(d(rng));
  return ArithFnPrefix(std::move(out));
}

}  // namespace

TEST(Rat, CanonicalFormAndPrinting) {
  EXPECT_EQ(to_string(ratio(6, -4)), "-3/2");
  EXPECT_EQ(to_string(ratio(8, 4)), "2");
  EXPECT_EQ(parse_rat("10/-4"), ratio(-5, 2));
  EXPECT_THROW(ratio(1, 0), std::domain_error);
  EXPECT_THROW(parse_int("12x"), std::invalid_argument);
}

TEST(Rat, NoOverflowAtLargeMagnitudes) {
  const Int big = pow(Int(3), 200);
  const Rat q = ratio(big * 7, big * 5);
  EXPECT_EQ(q, ratio(7, 5));
  EXPECT_EQ(to_string(pow(Int(2), 100)), "1267650600228229401496703205376");
}

TEST(Factorize, Examples) {
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_EQ(factorize(12), (std::vector<PrimePower>{{2, 2}, {3, 1}}));
  EXPECT_EQ(factorize(32760), (std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}, {7, 1}, {13, 1}}));
  EXPECT_THROW(factorize(0), std::domain_error);
}

TEST(Factorize, AgreesWithTrialDivision) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> d(1, 1'000'000'000'000ULL);
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    const auto got = factorize(n);
    const auto want = oracle::trial_factor(n);
    ASSERT_EQ(got.size(), want.size()) << n;
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i].prime, want[i].first);
      EXPECT_EQ(got[i].exponent, want[i].second);
    }
  }
  // Large semiprimes near the contract limit.
  EXPECT_EQ(factorize(999'983ULL * 1'000'003ULL),
            (std::vector<PrimePower>{{999'983, 1}, {1'000'003, 1}}));
  for (int i = 0; i < 20; ++i) {
    const std::uint64_t n = d(rng);
    std::uint64_t prod = 1;
    for (const auto& pp : factorize(n)) {
      EXPECT_TRUE(is_prime(pp.prime));
      for (unsigned e = 0; e < pp.exponent; ++e) prod *= pp.prime;
    }
    EXPECT_EQ(prod, n);
  }
}

TEST(Multiplicative, Examples) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(12), 0);
  EXPECT_EQ(mobius(30), -1);
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(6), 2u);
  EXPECT_EQ(euler_phi(1024), 512u);
  EXPECT_EQ(divisor_sigma(0, 6), 4);
  EXPECT_EQ(divisor_sigma(1, 6), 12);
  EXPECT_EQ(divisor_sigma(2, 2), 5);
  EXPECT_EQ(big_omega(1), 0u);
  EXPECT_EQ(big_omega(12), 3u);
  EXPECT_EQ(big_omega(97), 1u);
}

TEST(Multiplicative, AgreeWithOracles) {
  const auto mu = mobius_table(2000);
  const auto phi = phi_table(2000);
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    ASSERT_EQ(mobius(n), oracle::mobius(n)) << n;
    ASSERT_EQ(mu[n], oracle::mobius(n)) << n;
    ASSERT_EQ(euler_phi(n), oracle::phi_count(n)) << n;
    ASSERT_EQ(phi[n], oracle::phi_count(n)) << n;
    ASSERT_EQ(divisor_sigma(2, n), oracle::sigma(2, n)) << n;
  }
}

TEST(Multiplicative, DivisorSumIdentities) {
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    long mu_sum = 0;
    std::uint64_t phi_sum = 0;
    for (std::uint64_t d : divisors(n)) {
      mu_sum += mobius(d);
      phi_sum += euler_phi(d);
    }
    ASSERT_EQ(mu_sum, n == 1 ? 1 : 0) << n;
    ASSERT_EQ(phi_sum, n) << n;
  }
}

TEST(Dirichlet, ConvolutionExamples) {
  EXPECT_EQ(dirichlet_convolve(mobius_fn(4), unit_fn(4), 4), convolution_identity(4));
  EXPECT_EQ(dirichlet_convolve(mobius_fn(6), identity_fn(6), 6)(6), Rat(2));
  EXPECT_EQ(dirichlet_convolve(unit_fn(6), unit_fn(6), 6)(6), Rat(4));
  EXPECT_THROW(dirichlet_convolve(unit_fn(3), unit_fn(6), 6), ShortWindow);
}

TEST(Dirichlet, InverseExamples) {
  EXPECT_EQ(dirichlet_inverse(unit_fn(6), 6), fn({1, -1, -1, 0, -1, 1}));
  EXPECT_EQ(dirichlet_inverse(convolution_identity(8), 8), convolution_identity(8));
  const ArithFnPrefix inv = dirichlet_inverse(fn({2, 0, 0, 0, 0}), 5);
  EXPECT_EQ(inv(1), ratio(1, 2));
  for (std::size_t n = 2; n <= 5; ++n) EXPECT_EQ(inv(n), 0);
  EXPECT_THROW(dirichlet_inverse(fn({0, 1, 1}), 3), NonInvertible);
}

TEST(Dirichlet, CommutativeAssociativeAndInvertible) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> len(1, 64);
  for (int t = 0; t < 100; ++t) {
    const std::size_t N = len(rng);
    const auto f = random_fn(rng, N);
    const auto g = random_fn(rng, N);
    const auto h = random_fn(rng, N);
    ASSERT_EQ(dirichlet_convolve(f, g, N), dirichlet_convolve(g, f, N));
    ASSERT_EQ(dirichlet_convolve(dirichlet_convolve(f, g, N), h, N),
              dirichlet_convolve(f, dirichlet_convolve(g, h, N), N));
    // Mobius inversion round trip.
    const auto F = dirichlet_convolve(f, unit_fn(N), N);
    ASSERT_EQ(dirichlet_convolve(F, mobius_fn(N), N), f);
    if (f(1) != 0) {
      ASSERT_EQ(dirichlet_convolve(f, dirichlet_inverse(f, N), N), convolution_identity(N));
    }
  }
}

TEST(Window, RejectsEmptyAndIsOneIndexed) {
  EXPECT_THROW(Window<Int>(std::vector<Int>{}), EmptyWindow);
  const Window<Int> w(std::vector<Int>{5, 6, 7});
  EXPECT_EQ(w(1), 5);
  EXPECT_EQ(w(3), 7);
  EXPECT_THROW(w(4), std::out_of_range);
  EXPECT_THROW(w.prefix(4), ShortWindow);
  EXPECT_EQ(w.prefix(2).size(), 2u);
}

TEST(Linalg, BareissMatchesLaplace) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> d(-20, 20);
  for (std::size_t k = 1; k <= 6; ++k) {
    for (int t = 0; t < 20; ++t) {
      std::vector<Int> flat;
      oracle::Mat rows(k, std::vector<Int>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          rows[i][j] = d(rng);
          flat.push_back(rows[i][j]);
        }
      ASSERT_EQ(bareiss_determinant(flat, k), oracle::laplace_det(rows));
    }
  }
  // Needs a row swap.
  EXPECT_EQ(bareiss_determinant({0, 1, 1, 0}, 2), -1);
  EXPECT_EQ(bareiss_determinant({}, 0), 1);
}

TEST(Linalg, RationalDeterminantAndSolve) {
  EXPECT_EQ(rational_determinant({ratio(1, 2), ratio(1, 3), ratio(1, 4), ratio(1, 5)}, 2),
            ratio(1, 10) - ratio(1, 12));
  const auto x = solve_exact({1, 1, 1, -1}, {3, 1}, 2, 2);
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 2);
  EXPECT_EQ((*x)[1], 1);
  EXPECT_FALSE(solve_exact({1, 1, 1, 1}, {1, 2}, 2, 2));
}
