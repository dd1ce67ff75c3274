#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "safecol/enumerate.hpp"
#include "safecol/errors.hpp"

using namespace safecol;

namespace {

std::vector<int> vec(const CycleColouring& c) { return {c.colours().begin(), c.colours().end()}; }

}  // namespace

TEST(Triangulations, PolygonCountsAreCatalan) {
  for (int l = 3; l <= 9; ++l)
    EXPECT_EQ(static_cast<long>(enumerate_disk_triangulations(l, 0, false).size()), oracle::catalan(l - 2)) << l;
}

TEST(Triangulations, SmallCases) {
  EXPECT_EQ(enumerate_disk_triangulations(4, 0, false).size(), 2u);
  EXPECT_EQ(enumerate_disk_triangulations(5, 0, false).size(), 5u);
  auto one = enumerate_disk_triangulations(3, 1, false);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].triangles().size(), 3u);
  // No chordless triangulation of a polygon without internal vertices beyond the triangle.
  EXPECT_EQ(enumerate_disk_triangulations(3, 0, true).size(), 1u);
  EXPECT_TRUE(enumerate_disk_triangulations(5, 0, true).empty());
}

TEST(Triangulations, EulerCountsDistinctAndChordFilter) {
  for (int l = 3; l <= 7; ++l) {
    for (int n = 0; n <= 3; ++n) {
      auto all = enumerate_disk_triangulations(l, n, false);
      auto chordless = enumerate_disk_triangulations(l, n, true);
      std::set<std::vector<std::int32_t>> codes;
      long without_chord = 0;
      for (const auto& g : all) {
        EXPECT_EQ(g.vertex_count(), l + n);
        EXPECT_EQ(static_cast<int>(g.edges().size()), 2 * l + 3 * n - 3);
        EXPECT_EQ(static_cast<int>(g.triangles().size()), l + 2 * n - 2);
        EXPECT_EQ(canonical_form(g), g);
        codes.insert(canonical_code(g));
        without_chord += is_chordless(g);
      }
      EXPECT_EQ(codes.size(), all.size());
      EXPECT_EQ(static_cast<long>(chordless.size()), without_chord);
      for (const auto& g : chordless) EXPECT_TRUE(is_chordless(g));
    }
  }
}

TEST(Triangulations, StreamMatchesSortedList) {
  for (int l = 3; l <= 6; ++l) {
    for (int n = 0; n <= 3; ++n) {
      std::set<std::vector<std::int32_t>> streamed;
      for_each_disk_triangulation(l, n, true, [&](const NearTriangulation& g) {
        EXPECT_TRUE(streamed.insert(canonical_code(g)).second);
      });
      auto listed = enumerate_disk_triangulations(l, n, true);
      std::set<std::vector<std::int32_t>> from_list;
      for (const auto& g : listed) from_list.insert(canonical_code(g));
      EXPECT_EQ(streamed, from_list);
      for (std::size_t i = 1; i < listed.size(); ++i)
        EXPECT_LT(canonical_code(listed[i - 1]), canonical_code(listed[i]));
    }
  }
}

TEST(BruteForce, WheelSeeingEveryColour) {
  EXPECT_FALSE(brute_force_extend(CycleColouring(4, {1, 2, 3, 4, 2}), oracle::wheel(5)));
}

TEST(BruteForce, HubTakesFirstFreeColour) {
  auto f = brute_force_extend(CycleColouring(5, {1, 2, 1, 2, 1, 2}), oracle::wheel(6));
  ASSERT_TRUE(f);
  EXPECT_EQ((*f)[6], 3);
}

TEST(BruteForce, LengthMismatch) {
  EXPECT_THROW(brute_force_extend(CycleColouring(5, {1, 2, 3}), oracle::wheel(4)), PreconditionError);
}

TEST(BruteForce, MonochromaticChordBlocksExtension) {
  // Fan from v_1 has chord v_1 v_3.
  EXPECT_FALSE(brute_force_extend(CycleColouring(3, {1, 2, 1, 2}), oracle::fan(4)));
}

// Backtracking agrees with trying every assignment of the internal vertices.
TEST(BruteForce, AgreesWithCartesianEnumeration) {
  for (int k = 4; k <= 5; ++k) {
    for (int l = 3; l <= 6; ++l) {
      std::vector<NearTriangulation> graphs;
      for (int n = 0; n <= 2; ++n)
        for (const auto& g : enumerate_disk_triangulations(l, n, false)) graphs.push_back(g);
      for_each_colouring(l, k, true, [&](const CycleColouring& c) {
        for (const auto& g : graphs) {
          auto f = brute_force_extend(c, g);
          long count = oracle::count_extensions(g, vec(c), k);
          ASSERT_EQ(f.has_value(), count > 0);
          if (f) EXPECT_TRUE(oracle::proper(g, *f, k));
        }
      });
    }
  }
}

TEST(Probe, BadColouringHasSmallCounterexample) {
  CycleColouring c(5, {1, 2, 3, 1, 2, 4});
  auto p = safety_probe(c, 2);
  ASSERT_TRUE(p.counterexample);
  EXPECT_LE(p.counterexample->internal_count(), 2);
  EXPECT_TRUE(is_chordless(*p.counterexample));
  EXPECT_EQ(oracle::count_extensions(*p.counterexample, vec(c), 5), 0);
}

TEST(Probe, GoodColouringHasNone) {
  for (auto c : {CycleColouring(5, {1, 2, 1, 2, 1, 3}), CycleColouring(6, {1, 2, 3, 1, 2, 3, 1, 2})}) {
    auto p = safety_probe(c, 3);
    EXPECT_FALSE(p.counterexample);
    EXPECT_EQ(p.scanned.size(), 4u);
  }
}

TEST(Probe, ParallelMatchesSerial) {
  for (int k = 4; k <= 6; ++k) {
    for (int l = 3; l <= 7; ++l) {
      for_each_colouring(l, k, true, [&](const CycleColouring& c) {
        auto s = safety_probe(c, 2);
        for (int jobs : {1, 3}) {
          auto p = safety_probe_parallel(c, 2, jobs);
          ASSERT_EQ(p.scanned, s.scanned);
          ASSERT_EQ(p.counterexample.has_value(), s.counterexample.has_value());
          if (s.counterexample) EXPECT_EQ(*p.counterexample, *s.counterexample);
        }
      });
    }
  }
}

TEST(Explorer, NoNeitherClassesForFiveColours) {
  for (int l = 3; l <= 8; ++l) EXPECT_TRUE(conjecture_explorer(5, l, 1, 1).empty());
}

TEST(Explorer, SixColourExampleListed) {
  auto entries = conjecture_explorer(6, 8, 1, 0);
  auto target = canonical_colouring(CycleColouring(6, {1, 2, 3, 4, 1, 2, 3, 4}));
  bool found = false;
  for (const auto& e : entries) {
    EXPECT_EQ(classify(e.canonical).kind, VerdictKind::kNeither);
    found = found || e.canonical == target;
  }
  EXPECT_TRUE(found);
}

TEST(Explorer, TrianglesNotBadWithFourColours) {
  for (const auto& c : enumerate_colourings(3, 4, false)) EXPECT_FALSE(is_bad(c));
  // Not bad triangles with k = 4 classify as neither and are listed.
  EXPECT_FALSE(conjecture_explorer(4, 3, 1, 1).empty());
}
