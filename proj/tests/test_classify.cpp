#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "safecol/classify.hpp"
#include "safecol/errors.hpp"

using namespace safecol;

namespace {

std::vector<int> vec(const CycleColouring& c) { return {c.colours().begin(), c.colours().end()}; }

}  // namespace

TEST(IsBad, FourColourExample) {
  auto w = is_bad(CycleColouring(4, {1, 2, 1, 3}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->condition, 2);
}

TEST(IsBad, TwoColoursWithFiveAvailable) { EXPECT_FALSE(is_bad(CycleColouring(5, {1, 2, 1, 2, 1, 2}))); }

TEST(IsBad, LengthTwoKMinusFourExample) {
  auto w = is_bad(CycleColouring(5, {1, 2, 3, 1, 2, 4}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->condition, 2);
}

TEST(IsGood, FewColours) {
  auto w = is_good(CycleColouring(5, {1, 2, 1, 2, 1, 2}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->condition, 1);
}

TEST(IsGood, TriangleWithFiveColours) {
  auto w = is_good(CycleColouring(5, {1, 2, 3}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->condition, 2);
  EXPECT_EQ(w->indices, (std::vector<int>{1, 3}));
  EXPECT_EQ(w->A, (std::vector<Colour>{1}));
}

TEST(IsGood, NeitherExample) {
  CycleColouring c(6, {1, 2, 3, 4, 1, 2, 3, 4});
  EXPECT_FALSE(is_good(c));
  EXPECT_FALSE(is_bad(c));
  EXPECT_EQ(classify(c).kind, VerdictKind::kNeither);
}

TEST(IsGood, RejectsFourColours) { EXPECT_THROW(is_good(CycleColouring(4, {1, 2, 3})), PreconditionError); }

// Presence and first condition agree with the set-based definitions, and every witness
// re-validates.
TEST(Classify, AgreesWithDefinitions) {
  for (int k = 4; k <= 6; ++k) {
    for (int l = 3; l <= 8; ++l) {
      for_each_colouring(l, k, true, [&](const CycleColouring& c) {
        auto bad = is_bad(c);
        ASSERT_EQ(bad ? bad->condition : 0, oracle::bad_condition(vec(c), k)) << l << " " << k;
        if (bad) EXPECT_TRUE(check_bad_witness(c, *bad));
        if (k < 5) return;
        auto good = is_good(c);
        ASSERT_EQ(good ? good->condition : 0, oracle::good_condition(vec(c), k));
        if (good) {
          EXPECT_TRUE(check_good_witness(c, *good));
          if (good->condition > 1) EXPECT_EQ(static_cast<int>(good->A.size()), k - 4);
        }
        // Good colourings are never bad.
        EXPECT_FALSE(good && bad);
      });
    }
  }
}

TEST(Classify, FourColouringsOfLongCyclesAreBad) {
  for (int l = 4; l <= 8; ++l)
    for_each_colouring(l, 4, false, [&](const CycleColouring& c) { EXPECT_TRUE(is_bad(c)); });
}

TEST(Witness, TamperedWitnessIsRejected) {
  CycleColouring c(5, {1, 2, 3, 1, 2, 4});
  auto w = *is_bad(c);
  EXPECT_FALSE(check_bad_witness(c, {3, {1, 2, 3}}));
  EXPECT_FALSE(check_bad_witness(c, {1, {}}));
  EXPECT_TRUE(check_bad_witness(c, w));
  GoodWitness g{2, {1, 2}, {5}};
  EXPECT_FALSE(check_good_witness(c, g));
}

TEST(Canonical, FirstOccurrenceRelabelling) {
  EXPECT_EQ(canonical_colouring(CycleColouring(5, {2, 3, 2, 3})), CycleColouring(5, {1, 2, 1, 2}));
  EXPECT_EQ(canonical_colouring(CycleColouring(3, {1, 2, 3})), canonical_colouring(CycleColouring(3, {3, 1, 2})));
}

TEST(Canonical, OrbitSizeDividesGroupOrder) {
  auto cls = canonicalize(CycleColouring(5, {1, 2, 1, 2, 1, 2}));
  // 2l * k! = 12 * 120
  EXPECT_EQ(1440 % cls.orbit_size, 0u);
  // Orbit = colourings of the form (a,b,a,b,a,b) with a != b.
  EXPECT_EQ(cls.orbit_size, 20u);
}

TEST(Canonical, OrbitsPartitionAllColourings) {
  for (int k = 3; k <= 5; ++k) {
    for (int l = 3; l <= 7; ++l) {
      std::uint64_t total = 0;
      for_each_colouring(l, k, true, [&](const CycleColouring& c) { total += canonicalize(c).orbit_size; });
      // Chromatic polynomial of C_l.
      std::int64_t expect = 1;
      for (int i = 0; i < l; ++i) expect *= k - 1;
      expect += (l % 2 ? -1 : 1) * (k - 1);
      EXPECT_EQ(total, static_cast<std::uint64_t>(expect));
    }
  }
}

TEST(EnumerateColourings, SmallCounts) {
  EXPECT_EQ(enumerate_colourings(3, 3, false).size(), 6u);
  EXPECT_EQ(enumerate_colourings(3, 3, true).size(), 1u);
  EXPECT_EQ(enumerate_colourings(4, 3, false).size(), 18u);
}

TEST(Equivalence, VerdictInvariantUnderGroupAction) {
  std::mt19937 rng(11);
  for (int k = 4; k <= 6; ++k) {
    for (int l = 3; l <= 8; ++l) {
      for_each_colouring(l, k, true, [&](const CycleColouring& c) {
        Verdict base = classify(c);
        std::vector<Colour> perm(k + 1);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin() + 1, perm.end(), rng);
        auto d = transform(c, static_cast<int>(rng() % l), rng() % 2, perm);
        Verdict v = classify(d);
        ASSERT_EQ(v.kind, base.kind);
        if (base.bad) EXPECT_EQ(v.bad->condition, base.bad->condition);
        if (base.good) EXPECT_EQ(v.good->condition, base.good->condition);
        EXPECT_EQ(canonical_colouring(d), canonical_colouring(c));
      });
    }
  }
}
