#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "safecol/enumerate.hpp"
#include "safecol/errors.hpp"
#include "safecol/extend.hpp"

using namespace safecol;

namespace {

ColourSet one(Colour c) { return colour_bit(c); }
ColourSet list_of(std::initializer_list<Colour> cs) {
  ColourSet s = 0;
  for (Colour c : cs) s |= colour_bit(c);
  return s;
}

// Checks a realised colouring against everything the engine promises, independently.
void expect_realisation(const NearTriangulation& g, const ListAssignment& L, int k, const FullColouring& f,
                        ColourPair end, const PairSet* l2, const PairSet* l3) {
  const int l = g.boundary_len();
  ASSERT_TRUE(oracle::proper(g, f, k));
  for (int i = 0; i < l; ++i) EXPECT_TRUE(L.lists[i] & colour_bit(f[i])) << "vertex " << i + 1;
  EXPECT_EQ(f[0], end.first);
  EXPECT_EQ(f[l - 1], end.second);
  if (l2) EXPECT_TRUE(contains(*l2, {f[L.p - 1], f[L.p]}));
  if (l3) EXPECT_TRUE(contains(*l3, {f[L.q - 1], f[L.q]}));
}

void expect_feasible(const NearTriangulation& g, const ListAssignment& L, int k, const FeasibleResult& r,
                     const PairSet* l2, const PairSet* l3) {
  EXPECT_EQ(r.label_l1.family, LabelFamily::kL12);
  EXPECT_TRUE(identify(r.label_l1.pairs, LabelFamily::kL12, k));
  EXPECT_TRUE(within(r.label_l1.pairs, L.lists[0], L.lists.back()));
  for (auto pr : r.label_l1.pairs) expect_realisation(g, L, k, r.realize(pr), pr, l2, l3);
}

NearTriangulation triangle() { return near_triangulation_from_faces(3, 0, {{0, 1, 2}}); }

std::mt19937 rng(20261018);

ColourSet random_list(int type, int k) {
  if (rng() % 2) return type_list(type);
  auto s = set_members(s_set(type, k));
  return colour_bit(s[rng() % s.size()]);
}

std::optional<PairSet> random_member(LabelFamily f, int k, ColourSet a, ColourSet b) {
  std::vector<PairSet> fit;
  for (const auto& m : family_members(f, k))
    if (within(m.pairs, a, b)) fit.push_back(m.pairs);
  if (fit.empty()) return std::nullopt;
  return fit[rng() % fit.size()];
}

// No edge joins two vertices holding the same singleton list.
bool consistent(const NearTriangulation& g, const ListAssignment& L) {
  const int l = g.boundary_len();
  for (const auto& e : g.edges()) {
    if (e[0] >= l || e[1] >= l) continue;
    ColourSet a = L.lists[e[0]], b = L.lists[e[1]];
    if (a == b && set_size(a) == 1) return false;
  }
  return true;
}

}  // namespace

TEST(AllT1Extension, TriangleOfSingletons) {
  ListAssignment L{{one(1), one(5), one(6)}, 3, 3};
  auto f = lemma_one_extend(triangle(), L, 6, 1, 6);
  EXPECT_EQ(f, (FullColouring{1, 5, 6}));
}

TEST(AllT1Extension, WheelWithFullLists) {
  auto g = oracle::wheel(6);
  ListAssignment L{std::vector<ColourSet>(6, type_list(1)), 6, 6};
  auto f = lemma_one_extend(g, L, 5, 2, 3);
  expect_realisation(g, L, 5, f, {2, 3}, nullptr, nullptr);
  EXPECT_TRUE(f[6] == 1 || f[6] == 5);
}

TEST(AllT1Extension, SingletonKept) {
  ListAssignment L{{type_list(1), one(1), type_list(1)}, 3, 3};
  auto f = lemma_one_extend(triangle(), L, 5, 2, 3);
  EXPECT_EQ(f[1], 1);
}

TEST(AllT1Extension, Preconditions) {
  ListAssignment L{{type_list(1), one(1), type_list(1)}, 3, 3};
  EXPECT_THROW(lemma_one_extend(triangle(), L, 5, 2, 2), PreconditionError);
  EXPECT_THROW(lemma_one_extend(triangle(), L, 5, 1, 3), PreconditionError);
  ListAssignment clash{{one(1), one(1), type_list(1)}, 3, 3};
  EXPECT_THROW(lemma_one_extend(triangle(), clash, 5, 1, 3), PreconditionError);
  EXPECT_THROW(lemma_one_extend(triangle(), L, 4, 2, 3), PreconditionError);
}

TEST(FeasiblePair, TriangleShapeFourIsKept) {
  ListAssignment L{{type_list(1), type_list(1), type_list(2)}, 2, 2};
  PairSet l2 = make_pairs({{2, 3}, {4, 3}});
  auto r = lemma_two_feasible(triangle(), L, 5, l2);
  EXPECT_EQ(r.label_l1.pairs, l2);
  expect_feasible(triangle(), L, 5, r, &l2, nullptr);
}

TEST(FeasiblePair, TriangleShapeFive) {
  ListAssignment L{{type_list(1), type_list(1), type_list(2)}, 2, 2};
  PairSet l2 = make_pairs({{3, 1}, {3, 4}});
  auto r = lemma_two_feasible(triangle(), L, 5, l2);
  EXPECT_EQ(r.label_l1.pairs, make_pairs({{4, 1}, {2, 4}}));
  expect_feasible(triangle(), L, 5, r, &l2, nullptr);
}

TEST(FeasiblePair, SquareWithHubEveryAdmissibleLabel) {
  auto g = oracle::wheel(4);
  ListAssignment L{{type_list(1), type_list(1), type_list(2), type_list(2)}, 2, 2};
  int tried = 0;
  for (const auto& m : family_members(LabelFamily::kL12, 5)) {
    if (!within(m.pairs, L.lists[1], L.lists[2])) continue;
    ++tried;
    expect_feasible(g, L, 5, lemma_two_feasible(g, L, 5, m.pairs), &m.pairs, nullptr);
  }
  EXPECT_GT(tried, 0);
}

TEST(FeasiblePair, RejectsLabelOutsideFamily) {
  ListAssignment L{{type_list(1), type_list(1), type_list(2)}, 2, 2};
  EXPECT_THROW(lemma_two_feasible(triangle(), L, 5, make_pairs({{3, 1}})), PreconditionError);
}

TEST(FeasibleTriple, TriangleOfSingletons) {
  ListAssignment L{{one(5), one(6), one(2)}, 1, 2};
  PairSet l2 = make_pairs({{5, 6}}), l3 = make_pairs({{6, 2}});
  auto r = lemma_three_feasible(triangle(), L, 6, l2, l3);
  EXPECT_EQ(r.label_l1.pairs, make_pairs({{5, 2}}));
  expect_feasible(triangle(), L, 6, r, &l2, &l3);
}

TEST(FeasibleTriple, TriangleForcedThroughC4) {
  ListAssignment L{{one(5), type_list(3), type_list(2)}, 1, 2};
  PairSet l2 = make_pairs({{5, 2}, {5, 4}}), l3 = make_pairs({{2, 1}, {2, 4}, {1, 4}, {4, 1}});
  auto r = lemma_three_feasible(triangle(), L, 5, l2, l3);
  EXPECT_EQ(r.label_l1.pairs, make_pairs({{5, 4}}));
  auto f = r.realize({5, 4});
  EXPECT_EQ(f, (FullColouring{5, 2, 4}));
  expect_feasible(triangle(), L, 5, r, &l2, &l3);
}

TEST(FeasibleTriple, SquareHubWithoutC1Pairs) {
  auto g = oracle::wheel(4);
  ListAssignment L{{type_list(1), type_list(3), type_list(3), type_list(2)}, 1, 3};
  PairSet l2 = make_pairs({{3, 2}, {3, 4}, {2, 4}, {4, 2}});
  PairSet l3 = make_pairs({{1, 3}, {4, 3}, {1, 4}, {4, 1}});
  auto r = lemma_three_feasible(g, L, 5, l2, l3);
  EXPECT_EQ(r.label_l1.pairs, make_pairs({{3, 1}, {2, 3}}));
  expect_feasible(g, L, 5, r, &l2, &l3);
}

TEST(FeasibleTriple, Preconditions) {
  ListAssignment L{{one(5), one(6), one(2)}, 1, 2};
  PairSet l2 = make_pairs({{5, 6}}), l3 = make_pairs({{6, 2}});
  // Label pairs outside the lists.
  EXPECT_THROW(lemma_three_feasible(triangle(), L, 6, make_pairs({{1, 6}}), l3), PreconditionError);
  // Segments out of order.
  ListAssignment bad{{one(5), one(6), one(2)}, 2, 1};
  EXPECT_THROW(lemma_three_feasible(triangle(), bad, 6, l2, l3), PreconditionError);
}

// Random list assignments and labels over every small graph, chords included.
TEST(Engines, RandomInstancesRealiseEveryPair) {
  long checked = 0;
  for (int k : {5, 6}) {
    for (int l = 3; l <= 6; ++l) {
      for (int n = 0; n <= 2; ++n) {
        for (const auto& g : enumerate_disk_triangulations(l, n, false)) {
          for (int trial = 0; trial < 3; ++trial) {
            const bool three = rng() % 2;
            ListAssignment L;
            if (three) {
              L.p = 1 + static_cast<int>(rng() % (l - 2));
              L.q = L.p + 1 + static_cast<int>(rng() % (l - 1 - L.p));
            } else {
              L.p = L.q = 1 + static_cast<int>(rng() % (l - 1));
            }
            for (int i = 0; i < l; ++i) L.lists.push_back(random_list(i < L.p ? 1 : i < L.q ? 3 : 2, k));
            if (!consistent(g, L)) continue;
            if (three) {
              auto l2 = random_member(LabelFamily::kL13, k, L.lists[L.p - 1], L.lists[L.p]);
              auto l3 = random_member(LabelFamily::kL32, k, L.lists[L.q - 1], L.lists[L.q]);
              if (!l2 || !l3) continue;
              expect_feasible(g, L, k, lemma_three_feasible(g, L, k, *l2, *l3), &*l2, &*l3);
            } else {
              auto l2 = random_member(LabelFamily::kL12, k, L.lists[L.p - 1], L.lists[L.p]);
              if (!l2) continue;
              expect_feasible(g, L, k, lemma_two_feasible(g, L, k, *l2), &*l2, nullptr);
            }
            ++checked;
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 1000);
}

// Lists and labels are symmetric in c3 and c4, so swapping them must leave a solvable
// instance; the engine's answer on the swapped input is validated on its own terms.
TEST(Engines, SwappingC3C4KeepsFeasiblePairSolvable) {
  for (int l = 3; l <= 6; ++l) {
    for (int n = 0; n <= 2; ++n) {
      for (const auto& g : enumerate_disk_triangulations(l, n, true)) {
        ListAssignment L;
        L.p = L.q = 1 + static_cast<int>(rng() % (l - 1));
        for (int i = 0; i < l; ++i) L.lists.push_back(random_list(i < L.p ? 1 : 2, 5));
        if (!consistent(g, L)) continue;
        auto l2 = random_member(LabelFamily::kL12, 5, L.lists[L.p - 1], L.lists[L.p]);
        if (!l2) continue;
        expect_feasible(g, L, 5, lemma_two_feasible(g, L, 5, *l2), &*l2, nullptr);
        ListAssignment S = L;
        for (auto& s : S.lists) {
          ColourSet b3 = s & colour_bit(3), b4 = s & colour_bit(4);
          s = (s & ~(colour_bit(3) | colour_bit(4))) | (b3 ? colour_bit(4) : 0) | (b4 ? colour_bit(3) : 0);
        }
        PairSet s2 = swap_colours(*l2, 3, 4);
        expect_feasible(g, S, 5, lemma_two_feasible(g, S, 5, s2), &s2, nullptr);
      }
    }
  }
}

TEST(Setup, PermutationMapsWitnessIntoTypes) {
  for (int l = 3; l <= 7; ++l) {
    for_each_colouring(l, 6, true, [&](const CycleColouring& c) {
      auto w = is_good(c);
      if (!w) return;
      ColourSetup s = colour_permutation_setup(c, *w);
      // perm is a bijection of 1..k.
      std::vector<Colour> sorted(s.perm.begin() + 1, s.perm.end());
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < 6; ++i) EXPECT_EQ(sorted[i], i + 1);
      // Lists are the relabelled colours of the rotated cycle, each of its segment's type.
      for (int i = 0; i < l; ++i) {
        Colour orig = c[i + s.rotation];
        EXPECT_EQ(s.lists.lists[i], colour_bit(s.perm[orig]));
        int type = i < s.lists.p ? 1 : i < s.lists.q ? 3 : 2;
        EXPECT_TRUE(has_type(s.lists.lists[i], type, 6));
      }
      // Un-permuting recovers the original.
      std::vector<Colour> inv(7);
      for (int x = 1; x <= 6; ++x) inv[s.perm[x]] = x;
      for (int i = 0; i < l; ++i) EXPECT_EQ(inv[set_members(s.lists.lists[i])[0]], c[i + s.rotation]);
    });
  }
}

TEST(GoodExtension, AlternatingHexagonOnWheel) {
  CycleColouring c(5, {1, 2, 1, 2, 1, 2});
  auto f = theorem_main_extend(c, oracle::wheel(6));
  EXPECT_TRUE(oracle::proper(oracle::wheel(6), f, 5));
  EXPECT_TRUE(f[6] >= 3 && f[6] <= 5);
}

TEST(GoodExtension, StellatedTriangle) {
  CycleColouring c(5, {1, 2, 3});
  auto f = theorem_main_extend(c, oracle::wheel(3));
  EXPECT_TRUE(f[3] == 4 || f[3] == 5);
}

TEST(GoodExtension, RefusesBadColouringsAndChords) {
  EXPECT_THROW(theorem_main_extend(CycleColouring(5, {1, 2, 3, 1, 2, 4}), oracle::wheel(6)), PreconditionError);
  EXPECT_THROW(theorem_main_extend(CycleColouring(5, {1, 2, 1, 2, 1, 2}), oracle::fan(6)), PreconditionError);
  EXPECT_THROW(theorem_main_extend(CycleColouring(5, {1, 2, 1, 2}), oracle::wheel(6)), PreconditionError);
}

// Every good colouring on every small chordless graph, checked against the cartesian
// oracle's propriety test.
TEST(GoodExtension, GoodColouringsExtendEverywhere) {
  for (int k = 5; k <= 7; ++k) {
    for (int l = 3; l <= 6; ++l) {
      std::vector<NearTriangulation> graphs;
      for (int n = 0; n <= (k == 5 ? 3 : 2); ++n)
        for (const auto& g : enumerate_disk_triangulations(l, n, true)) graphs.push_back(g);
      for_each_colouring(l, k, true, [&](const CycleColouring& c) {
        if (!is_good(c)) return;
        for (const auto& g : graphs) {
          auto f = theorem_main_extend(c, g);
          ASSERT_TRUE(oracle::proper(g, f, k));
          for (int i = 0; i < l; ++i) ASSERT_EQ(f[i], c[i]);
        }
      });
    }
  }
}
