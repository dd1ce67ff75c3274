#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "safecol/core.hpp"

namespace safecol {

/// A hit of one of the three unsafety conditions. Indices are 1-based, increasing.
struct BadWitness {
  int condition = 0;         // 1, 2 or 3
  std::vector<int> indices;  // (), (p,q) or (p,q,r)
  friend bool operator==(const BadWitness&, const BadWitness&) = default;
};

/// A hit of one clause of the good definition. A holds k-4 colours; unused for clause 1.
struct GoodWitness {
  int condition = 0;
  std::vector<int> indices;
  std::vector<Colour> A;
  friend bool operator==(const GoodWitness&, const GoodWitness&) = default;
};

/// Scan order: condition 1, then condition 2 over p<q, then condition 3 over p<q<r.
/// Requires k >= 4.
std::optional<BadWitness> is_bad(const CycleColouring& c);

/// Scan order: clause 1; then clause 2 with A (ascending subsets) outermost and p<q
/// inside; then clause 3 likewise over p<q<r. Requires k >= 5.
std::optional<GoodWitness> is_good(const CycleColouring& c);

/// Re-checks a witness against the arc-set definitions.
bool check_bad_witness(const CycleColouring& c, const BadWitness& w);
bool check_good_witness(const CycleColouring& c, const GoodWitness& w);

enum class VerdictKind { kBad, kGood, kNeither };

struct Verdict {
  VerdictKind kind = VerdictKind::kNeither;
  std::optional<BadWitness> bad;
  std::optional<GoodWitness> good;
};

/// Bad takes precedence; good is only consulted for k >= 5.
Verdict classify(const CycleColouring& c);

const char* to_string(VerdictKind v);

struct EquivalenceClass {
  CycleColouring canonical;
  std::uint64_t orbit_size;
};

/// Minimum over rotations and reflections of the first-occurrence relabelling.
CycleColouring canonical_colouring(const CycleColouring& c);
EquivalenceClass canonicalize(const CycleColouring& c);

/// Applies rotation by `shift`, optional reversal and colour permutation
/// perm[c] (perm has k+1 entries, perm[0] unused).
CycleColouring transform(const CycleColouring& c, int shift, bool reflect,
                         const std::vector<Colour>& perm);

/// Calls `visit` for every proper k-colouring of C_l, in lexicographic order. With
/// `up_to_equivalence` only canonical representatives are visited.
void for_each_colouring(int l, int k, bool up_to_equivalence,
                        const std::function<void(const CycleColouring&)>& visit);

std::vector<CycleColouring> enumerate_colourings(int l, int k, bool up_to_equivalence);

}  // namespace safecol
