#include <gtest/gtest.h>

#include "safecol/labels.hpp"

using namespace safecol;

TEST(Lists, TypesAndSSets) {
  EXPECT_EQ(s_set(1, 5), colour_bit(1) | colour_bit(5));
  EXPECT_EQ(s_set(3, 7), colour_bit(3) | colour_bit(5) | colour_bit(6) | colour_bit(7));
  EXPECT_EQ(type_list(2), colour_bit(1) | colour_bit(3) | colour_bit(4));
  EXPECT_TRUE(has_type(type_list(1), 1, 5));
  EXPECT_TRUE(has_type(colour_bit(5), 2, 5));
  EXPECT_TRUE(has_type(colour_bit(2), 2, 5));
  EXPECT_FALSE(has_type(colour_bit(2), 1, 5));
  EXPECT_FALSE(has_type(colour_bit(1) | colour_bit(5), 1, 5));
}

TEST(Pairs, SetOperations) {
  PairSet s = make_pairs({{3, 1}, {2, 3}, {3, 1}});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(contains(s, {2, 3}));
  EXPECT_TRUE(contains_all(s, {{3, 1}, {2, 3}}));
  EXPECT_EQ(close_34(s), make_pairs({{3, 1}, {2, 3}, {4, 1}, {2, 4}}));
  EXPECT_EQ(swap_colours(s, 1, 2), make_pairs({{3, 2}, {1, 3}}));
  EXPECT_TRUE(within(s, colour_bit(2) | colour_bit(3), colour_bit(1) | colour_bit(3)));
  EXPECT_FALSE(within(s, colour_bit(3), colour_bit(1) | colour_bit(3)));
}

TEST(Families, L12ShapeFourAndFive) {
  // {(c2,x),(y,x)} and {(x,c1),(x,y)} with x=c3, y=c4.
  auto iv = identify(make_pairs({{2, 3}, {4, 3}}), LabelFamily::kL12, 5);
  ASSERT_TRUE(iv);
  EXPECT_EQ(iv->shape, 4);
  auto v = identify(make_pairs({{3, 1}, {3, 4}}), LabelFamily::kL12, 5);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->shape, 5);
  EXPECT_FALSE(identify(make_pairs({{3, 1}}), LabelFamily::kL12, 5));
}

TEST(Families, EqualColourPairsNeverAppear) {
  for (int k = 5; k <= 7; ++k)
    for (auto f : {LabelFamily::kL12, LabelFamily::kL13, LabelFamily::kL32})
      for (const auto& m : family_members(f, k))
        for (auto p : m.pairs) EXPECT_NE(p.first, p.second);
}

// L13 = swap(c2,c3) of the c3/c4 closure of L12; L32 likewise with swap(c1,c3).
TEST(Families, DerivedFamiliesFollowFromL12) {
  for (int k = 5; k <= 7; ++k) {
    const auto& l12 = family_members(LabelFamily::kL12, k);
    for (const auto& m : l12) {
      auto a = to_l13(m), b = to_l32(m);
      EXPECT_EQ(a.pairs, swap_colours(close_34(m.pairs), 2, 3));
      EXPECT_EQ(b.pairs, swap_colours(close_34(m.pairs), 1, 3));
      EXPECT_TRUE(identify(a.pairs, LabelFamily::kL13, k));
      EXPECT_TRUE(identify(b.pairs, LabelFamily::kL32, k));
      auto back = l12_for_l13(a.pairs, k);
      ASSERT_TRUE(back);
      EXPECT_EQ(to_l13(*back).pairs, a.pairs);
    }
  }
}

// Members of each family are drawn from the product of the matching list types.
TEST(Families, PairsLieInTypeProducts) {
  const int k = 6;
  auto t = [&](int i) { return type_list(i) | s_set(i, k); };
  for (const auto& m : family_members(LabelFamily::kL12, k)) EXPECT_TRUE(within(m.pairs, t(1), t(2)));
  for (const auto& m : family_members(LabelFamily::kL13, k)) EXPECT_TRUE(within(m.pairs, t(1), t(3)));
  for (const auto& m : family_members(LabelFamily::kL32, k)) EXPECT_TRUE(within(m.pairs, t(3), t(2)));
}
