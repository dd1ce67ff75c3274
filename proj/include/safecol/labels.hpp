#pragma once

// List types T1/T2/T3 and the edge-label families L12, L13 and L32 used by the
// extension engine.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "safecol/core.hpp"

namespace safecol {

/// S_i = {c_i} ∪ {c_5..c_k}, i in {1,2,3}.
ColourSet s_set(int i, int k);

/// {c1,c2,c3,c4} \ {c_i}.
ColourSet type_list(int i);

/// True if `list` is of type T_i for palette size k.
bool has_type(ColourSet list, int i, int k);

struct ColourPair {
  Colour first = 0;
  Colour second = 0;
  friend auto operator<=>(const ColourPair&, const ColourPair&) = default;
};

/// Sorted, duplicate-free set of ordered colour pairs.
using PairSet = std::vector<ColourPair>;

PairSet make_pairs(std::vector<ColourPair> pairs);
bool contains(const PairSet& s, ColourPair p);
bool contains_all(const PairSet& s, std::initializer_list<ColourPair> ps);
/// Every pair lies in first × second.
bool within(const PairSet& s, ColourSet first, ColourSet second);
PairSet swap_colours(const PairSet& s, Colour a, Colour b);
/// Adds the image of every pair under swapping c3 and c4.
PairSet close_34(const PairSet& s);
std::string to_string(const PairSet& s);

enum class LabelFamily { kL12, kL13, kL32 };

const char* to_string(LabelFamily f);

/// Shape (i)..(vi) of a family.
struct EdgeLabel {
  LabelFamily family = LabelFamily::kL12;
  int shape = 0;  // 1..6
  // Shape parameters; zero where the shape has none. For L12: a in S1, b in S2,
  // x in {c3,c4}. For L13: a, and c in S3. For L32: c in S3, b in S2.
  Colour a = 0, b = 0, c = 0, x = 0;
  PairSet pairs;
};

/// Members of L12 for palette size k, in generation order: shapes (i)..(vi), with x = c3
/// before x = c4 and parameters ascending.
const std::vector<EdgeLabel>& family_members(LabelFamily f, int k);

/// The family member with exactly these pairs.
std::optional<EdgeLabel> identify(const PairSet& pairs, LabelFamily f, int k);

/// L13 and L32 labels corresponding to an L12 label.
EdgeLabel to_l13(const EdgeLabel& l12);
EdgeLabel to_l32(const EdgeLabel& l12);

/// First L12 member (generation order) whose L13 image has these pairs.
std::optional<EdgeLabel> l12_for_l13(const PairSet& l13, int k);

}  // namespace safecol
