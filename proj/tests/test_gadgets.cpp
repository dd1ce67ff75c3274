#include <gtest/gtest.h>

#include "oracles.hpp"
#include "safecol/classify.hpp"
#include "safecol/errors.hpp"
#include "safecol/gadgets.hpp"

using namespace safecol;

namespace {

std::vector<int> vec(const CycleColouring& c) { return {c.colours().begin(), c.colours().end()}; }

void expect_blocking(const CycleColouring& c, const Gadget& g) {
  NearTriangulation checked = validate_near_triangulation(g.graph.raw());
  EXPECT_EQ(checked.boundary_len(), c.size());
  EXPECT_TRUE(is_chordless(checked));
  EXPECT_EQ(oracle::count_extensions(checked, vec(c), c.k()), 0);
}

}  // namespace

TEST(Wheel, AllColoursOnTheRim) {
  for (auto c : {CycleColouring(4, {1, 2, 3, 1, 4}), CycleColouring(5, {1, 2, 3, 4, 5})}) {
    Gadget g = wheel_gadget(c, {1, {}});
    EXPECT_EQ(g.kind, GadgetKind::kWheel);
    EXPECT_EQ(g.graph.internal_count(), 1);
    EXPECT_EQ(g.graph.triangles().size(), 5u);
    expect_blocking(c, g);
  }
}

TEST(TwoApex, LengthTwoKMinusFourExample) {
  CycleColouring c(5, {1, 2, 3, 1, 2, 4});
  Gadget g = gadget_for(c, *is_bad(c));
  EXPECT_EQ(g.kind, GadgetKind::kTwoApex);
  EXPECT_EQ(g.graph.internal_count(), 2);
  EXPECT_EQ(g.graph.triangles().size(), 8u);
  expect_blocking(c, g);
}

TEST(TwoApex, FourColours) {
  CycleColouring c(4, {1, 2, 3, 2});
  auto w = is_bad(c);
  ASSERT_TRUE(w);
  ASSERT_EQ(w->condition, 2);
  expect_blocking(c, two_apex_gadget(c, *w));
}

TEST(TriangleApex, AlternatingSquare) {
  CycleColouring c(4, {1, 2, 1, 2});
  Gadget g = triangle_apex_gadget(c, {3, {1, 2, 3}});
  EXPECT_EQ(g.kind, GadgetKind::kTriangleApex);
  EXPECT_EQ(g.graph.internal_count(), 3);
  EXPECT_EQ(g.graph.triangles().size(), 8u);
  expect_blocking(c, g);
}

TEST(Gadgets, WitnessMismatchIsRejected) {
  CycleColouring c(5, {1, 2, 1, 2, 1, 2});
  EXPECT_THROW(wheel_gadget(c, {1, {}}), PreconditionError);
  EXPECT_THROW(two_apex_gadget(c, {2, {1, 4}}), PreconditionError);
  EXPECT_THROW(triangle_apex_gadget(c, {3, {1, 2, 3}}), PreconditionError);
  EXPECT_THROW(wheel_gadget(CycleColouring(4, {1, 2, 3, 4}), {2, {1, 3}}), PreconditionError);
}

// Every bad colouring's first witness gives a graph the colouring cannot extend to,
// checked by trying every assignment of the internal vertices.
TEST(Gadgets, EveryBadColouringIsBlocked) {
  for (int k = 4; k <= 5; ++k) {
    for (int l = 3; l <= 7; ++l) {
      for_each_colouring(l, k, true, [&](const CycleColouring& c) {
        auto w = is_bad(c);
        if (!w) return;
        Gadget g = gadget_for(c, *w);
        EXPECT_EQ(g.source, *w);
        EXPECT_EQ(g.graph.internal_count(), w->condition);
        expect_blocking(c, g);
      });
    }
  }
}

// Every witness of every condition, not just the first one found.
TEST(Gadgets, AllWitnessesOfSmallColourings) {
  for (int l = 3; l <= 6; ++l) {
    for_each_colouring(l, 5, true, [&](const CycleColouring& c) {
      for (int p = 1; p <= l; ++p) {
        for (int q = p + 1; q <= l; ++q) {
          BadWitness w2{2, {p, q}};
          if (check_bad_witness(c, w2)) expect_blocking(c, two_apex_gadget(c, w2));
          for (int r = q + 1; r <= l; ++r) {
            BadWitness w3{3, {p, q, r}};
            if (check_bad_witness(c, w3)) expect_blocking(c, triangle_apex_gadget(c, w3));
          }
        }
      }
    });
  }
}
