#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mols/verifier.hpp"

using mols::Block;
using mols::Verdict;

namespace {

Block pts(std::initializer_list<int> treatments) {
  Block b;
  for (int t : treatments) b.insert(t - 1);
  return b;
}

std::vector<Block> blocks(std::initializer_list<std::initializer_list<int>> lists) {
  std::vector<Block> out;
  for (auto l : lists) out.push_back(pts(l));
  return out;
}

// Classes 1..6 as printed for the L3(3) scheme.
std::vector<std::vector<Block>> ex41_classes() {
  return {
      blocks({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), blocks({{1, 4, 7}, {2, 5, 8}, {3, 6, 9}}),
      blocks({{1, 6, 8}, {2, 4, 9}, {3, 5, 7}}), blocks({{1, 2, 3}, {4, 9, 6}, {7, 8, 5}}),
      blocks({{1, 4, 7}, {2, 9, 8}, {3, 6, 5}}), blocks({{1, 6, 8}, {2, 4, 5}, {3, 9, 7}}),
  };
}

mols::AssociationScheme lg(const char* name) { return mols::build_lg_scheme(fixtures::pol(name)); }

}  // namespace

TEST(NeighborPartitions, PrintedTypeCounts) {
  const auto x1 = lg("ex4_1.txt");
  const auto c1 = mols::cliques_of_size(x1, 3);
  EXPECT_EQ(mols::neighbor_partitions(x1, 0, 3, mols::detail::through(c1, 0)).size(), 6U);

  const auto x2 = lg("ex4_2.txt");
  const auto c2 = mols::cliques_of_size(x2, 4);
  EXPECT_EQ(mols::neighbor_partitions(x2, 0, 3, mols::detail::through(c2, 0)).size(), 2U);

  const auto x4 = mols::induced_scheme(fixtures::pol("ex4_4.txt").prefix(3));
  const auto c4 = mols::cliques_of_size(x4, 7);
  EXPECT_EQ(mols::neighbor_partitions(x4, 0, 3, mols::detail::through(c4, 0)).size(), 1U);
}

TEST(NeighborPartitions, RejectsBadCliques) {
  const auto x1 = lg("ex4_1.txt");
  try {
    (void)mols::neighbor_partitions(x1, 0, 3, {pts({2, 3, 4})});
    FAIL();
  } catch (const mols::Error& e) {
    EXPECT_EQ(e.kind(), mols::ErrorKind::invalid_clique);
  }
  // 1 and 5 are second associates.
  EXPECT_THROW((void)mols::neighbor_partitions(x1, 0, 3, {pts({1, 5, 9})}), mols::Error);
}

TEST(SixProperties, InducedOrderFiveAllHold) {
  const auto pol = fixtures::pol("ex4_3.txt");
  const auto r = mols::find_resolution(pol, 3);
  ASSERT_TRUE(r);
  const auto report = mols::check_six_properties(mols::induced_scheme(pol), r->classes, 3);
  ASSERT_EQ(report.results.size(), 6U);
  for (const auto& p : report.results) {
    EXPECT_EQ(p.verdict, Verdict::satisfied) << p.name;
    EXPECT_FALSE(p.witness) << p.name;
  }
}

TEST(SixProperties, FirstThreeClassesPartitionAndMeetOnce) {
  auto classes = ex41_classes();
  classes.resize(3);
  const auto report = mols::check_six_properties(lg("ex4_1.txt"), classes, 3);
  EXPECT_EQ(report["i"].verdict, Verdict::satisfied);
  EXPECT_EQ(report["ii"].verdict, Verdict::satisfied);
}

TEST(SixProperties, SixClassesOverlap) {
  const auto report = mols::check_six_properties(lg("ex4_1.txt"), ex41_classes(), 3);
  EXPECT_EQ(report["i"].verdict, Verdict::violated);
  const auto& ii = report["ii"];
  ASSERT_EQ(ii.verdict, Verdict::violated);
  ASSERT_TRUE(ii.witness);
  EXPECT_EQ(ii.witness->points, (std::vector<int>{3, 5}));
  EXPECT_EQ(ii.witness->sets, blocks({{4, 5, 6}, {4, 9, 6}}));
  EXPECT_NE(ii.witness->detail.find("B^1_2 and B^4_2"), std::string::npos);
}

TEST(SixProperties, MalformedClassificationIsStructural) {
  auto classes = ex41_classes();
  classes[0][0] = pts({1, 5, 9});
  try {
    (void)mols::check_six_properties(lg("ex4_1.txt"), classes, 3);
    FAIL();
  } catch (const mols::Error& e) {
    EXPECT_EQ(e.kind(), mols::ErrorKind::structural);
  }
  classes = ex41_classes();
  classes[1][0] = pts({1, 4});
  EXPECT_THROW((void)mols::check_six_properties(lg("ex4_1.txt"), classes, 3), mols::Error);
}

TEST(Violations, OrderThreeHitsV) {
  const auto report = mols::detect_violations(lg("ex4_1.txt"), 3);
  const auto& v = report["V"];
  ASSERT_EQ(v.verdict, Verdict::violated);
  EXPECT_EQ(v.witness->points, (std::vector<int>{0, 1}));
  EXPECT_EQ(v.witness->sets, blocks({{1, 2, 3}, {1, 2, 4}, {1, 2, 8}}));
}

TEST(Violations, OrderFourHitsV) {
  const auto report = mols::detect_violations(lg("ex4_2.txt"), 3);
  const auto& v = report["V"];
  ASSERT_EQ(v.verdict, Verdict::violated);
  EXPECT_EQ(v.witness->points, (std::vector<int>{0, 1}));
  EXPECT_EQ(v.witness->sets, blocks({{1, 2, 3, 4}, {1, 2, 13, 14}}));
}

TEST(Violations, InducedOrderSevenIsClean) {
  const auto report = mols::detect_violations(mols::induced_scheme(fixtures::pol("ex4_4.txt").prefix(2)), 4);
  ASSERT_EQ(report.results.size(), 5U);
  for (const auto& p : report.results) EXPECT_EQ(p.verdict, Verdict::satisfied) << p.name;
  EXPECT_FALSE(report.any_violated());
}

TEST(G3Conditions, CertificationNeedsOrderAboveFour) {
  const auto r5 = mols::check_g3_conditions(mols::induced_scheme(fixtures::pol("ex4_3.txt")), 5);
  EXPECT_EQ(r5["I"].verdict, Verdict::satisfied);
  EXPECT_EQ(r5["I'"].verdict, Verdict::satisfied);
  EXPECT_EQ(r5["certified"].verdict, Verdict::satisfied);

  for (const char* name : {"ex4_1.txt", "ex4_2.txt"}) {
    const auto x = lg(name);
    const auto r = mols::check_g3_conditions(x, fixtures::pol(name).order());
    EXPECT_EQ(r["I"].verdict, Verdict::satisfied) << name;
    EXPECT_EQ(r["I'"].verdict, Verdict::satisfied) << name;
    EXPECT_EQ(r["certified"].verdict, Verdict::not_applicable) << name;
  }
}

TEST(G3Conditions, RequiresPseudoL3) {
  try {
    (void)mols::check_g3_conditions(mols::induced_scheme(fixtures::pol("ex4_4.txt").prefix(1)), 7);
    FAIL();
  } catch (const mols::Error& e) {
    EXPECT_EQ(e.kind(), mols::ErrorKind::precondition);
  }
}

TEST(ContainingSet, PrintedCollections) {
  const auto pol1 = fixtures::pol("ex4_4.txt").prefix(1);
  const auto x1 = mols::induced_scheme(pol1);
  const auto r1 = mols::unique_containing_set(x1, 0, 12, mols::cliques_of_size(x1, 7));
  EXPECT_FALSE(r1.unique);
  EXPECT_EQ(r1.sets.size(), 5U);
  EXPECT_EQ(r1.sets, mols::common_transversals(pol1, std::vector<int>{0, 12}, 1));

  const auto x6 = mols::induced_scheme(fixtures::pol("ex4_6.txt").prefix(4));
  const auto r6 = mols::unique_containing_set(x6, 0, 10, mols::cliques_of_size(x6, 9));
  EXPECT_FALSE(r6.unique);
  EXPECT_EQ(r6.sets.size(), 2U);
}

TEST(ContainingSet, UniqueForEveryPairAtThreeSquares) {
  const auto x = mols::induced_scheme(fixtures::pol("ex4_5.txt").prefix(3));
  const auto index = mols::cliques_of_size(x, 8);
  for (int a = 0; a < 64; ++a) {
    x.first_associates(a).for_each([&](int b) {
      if (b <= a) return;
      EXPECT_TRUE(mols::unique_containing_set(x, a, b, index).unique) << a << "," << b;
    });
  }
  const auto x2 = mols::induced_scheme(fixtures::pol("ex4_4.txt").prefix(2));
  const auto i2 = mols::cliques_of_size(x2, 7);
  EXPECT_TRUE(mols::unique_containing_set(x2, 0, 8, i2).unique);
}

TEST(ContainingSet, NeedsFirstAssociates) {
  const auto x = lg("ex4_1.txt");
  EXPECT_THROW((void)mols::unique_containing_set(x, 0, 4, mols::cliques_of_size(x, 3)), mols::Error);
  EXPECT_THROW((void)mols::unique_containing_set(x, 2, 2, mols::cliques_of_size(x, 3)), mols::Error);
}

TEST(CountLaw, HoldsOnEveryPrintedCase) {
  const std::pair<const char*, int> cases[] = {{"ex4_3.txt", 1}, {"ex4_4.txt", 3}, {"ex4_5.txt", 4}, {"ex4_6.txt", 5}};
  for (const auto& [name, w] : cases) {
    const auto pol = fixtures::full(std::string(name).substr(0, 5)).prefix(w);
    const auto r = mols::check_count_law(pol);
    EXPECT_EQ(r.verdict, Verdict::satisfied) << name << ": " << r.note;
  }
}

TEST(CountLaw, NeedsRoom) {
  try {
    (void)mols::check_count_law(fixtures::full("ex4_3").prefix(2));
    FAIL();
  } catch (const mols::Error& e) {
    EXPECT_EQ(e.kind(), mols::ErrorKind::precondition);
  }
}
