#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mols/resolution.hpp"
#include "mols/scheme.hpp"
#include "mols/transversal.hpp"
#include "oracles.hpp"
#include "random_latin.hpp"

namespace {

constexpr int kPerOrder = 500;

class RandomOrder : public ::testing::TestWithParam<int> {};

}  // namespace

TEST_P(RandomOrder, IsLatinAgreesWithPermutationCheck) {
  const int s = GetParam();
  std::mt19937 rng(1000 + static_cast<unsigned>(s));
  for (int n = 0; n < kPerOrder; ++n) {
    auto m = testgen::walked_latin(s, rng);
    ASSERT_TRUE(testgen::direct_is_latin(m));
    ASSERT_TRUE(mols::is_latin(m)) << n;
    std::uniform_int_distribution<int> d(0, s - 1);
    std::swap(m[static_cast<std::size_t>(d(rng))][static_cast<std::size_t>(d(rng))],
              m[static_cast<std::size_t>(d(rng))][static_cast<std::size_t>(d(rng))]);
    ASSERT_EQ(mols::is_latin(m), testgen::direct_is_latin(m)) << n;
    const auto junk = testgen::random_matrix(s, rng);
    ASSERT_EQ(mols::is_latin(junk), testgen::direct_is_latin(junk)) << n;
  }
}

TEST_P(RandomOrder, OrthogonalityIsSymmetric) {
  const int s = GetParam();
  std::mt19937 rng(2000 + static_cast<unsigned>(s));
  for (int n = 0; n < kPerOrder; ++n) {
    const mols::LatinSquare a(testgen::walked_latin(s, rng));
    const mols::LatinSquare b(testgen::walked_latin(s, rng));
    ASSERT_EQ(mols::are_orthogonal(a, b), mols::are_orthogonal(b, a));
    EXPECT_FALSE(mols::are_orthogonal(a, a));
  }
}

TEST_P(RandomOrder, DoubleComplementIsIdentity) {
  const int s = GetParam();
  std::mt19937 rng(3000 + static_cast<unsigned>(s));
  for (int n = 0; n < kPerOrder; ++n) {
    const auto pol = mols::PolSet::from_matrices({testgen::walked_latin(s, rng)});
    const auto x = mols::build_lg_scheme(pol);
    ASSERT_EQ(mols::induce_complement(mols::induce_complement(x)), x);
  }
}

TEST_P(RandomOrder, EmittedResolutionsRevalidate) {
  const int s = GetParam();
  std::mt19937 rng(4000 + static_cast<unsigned>(s));
  std::size_t emitted = 0;
  for (int n = 0; n < kPerOrder / 25; ++n) {
    const auto m = n % 2 == 0 ? testgen::walked_latin(s, rng) : testgen::group_isotope(s, rng);
    const auto pol = mols::PolSet::from_matrices({m});
    for (int d = 1; d <= (n % 2 == 0 ? 1 : 2); ++d) {
      for (const auto& r : mols::enumerate_resolutions(pol, d, 2)) {
        ++emitted;
        ASSERT_TRUE(oracles::revalidates(r, pol)) << "sample " << n << " degree " << d;
        ASSERT_TRUE(mols::resolution_violation(r).empty());
      }
    }
  }
  // No square of order 6 has an orthogonal mate.
  if (s == 6) {
    EXPECT_EQ(emitted, 0U);
  } else {
    EXPECT_GT(emitted, 0U);
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, RandomOrder, ::testing::Range(4, 10));

TEST(BruteForceOracle, WalkedSquaresUpToOrderFive) {
  std::mt19937 rng(5000);
  for (int n = 0; n < 100; ++n) {
    const int s = 3 + n % 3;
    const auto pol = mols::PolSet::from_matrices({testgen::walked_latin(s, rng)});
    ASSERT_EQ(mols::count_all_transversals(pol), oracles::brute_force_count(pol)) << "sample " << n;
    ASSERT_EQ(mols::common_transversals(pol).size(), oracles::brute_force_count(pol));
  }
}
