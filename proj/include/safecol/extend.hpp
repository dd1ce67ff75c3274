#pragma once

// Constructive extension of list colourings of the boundary cycle over a
// near-triangulation, and the driver that extends good colourings.

#include <functional>
#include <span>
#include <vector>

#include "safecol/classify.hpp"
#include "safecol/core.hpp"
#include "safecol/labels.hpp"

namespace safecol {

/// Lists for v_1..v_l. Vertices v_1..v_p have type T1, v_{p+1}..v_q type T3 and the rest
/// type T2 (1-based, p <= q <= l).
struct ListAssignment {
  std::vector<ColourSet> lists;
  int p = 0;
  int q = 0;
};

/// Colour of every vertex of the graph, indexed by vertex id.
using FullColouring = std::vector<Colour>;

struct FeasibleResult {
  EdgeLabel label_l1;
  /// Colouring with (v_1, v_l) coloured by the given pair of label_l1. Throws
  /// PreconditionError for a pair outside the label.
  std::function<FullColouring(ColourPair)> realize;
};

/// True if every vertex has a colour in [1, k] and no edge is monochromatic.
bool is_proper_colouring(const NearTriangulation& g, std::span<const Colour> colours, int k);

/// All lists of type T1. Colours v_1 with s and v_l with t.
FullColouring lemma_one_extend(const NearTriangulation& g, const ListAssignment& lists, int k,
                               Colour s, Colour t);

/// Lists T1 on v_1..v_p, T2 after; l2 in L12 on the edge (v_p, v_{p+1}).
FeasibleResult lemma_two_feasible(const NearTriangulation& g, const ListAssignment& lists, int k,
                                  const PairSet& l2);

/// Lists T1 / T3 / T2 split at p and q; l2 in L13 on (v_p, v_{p+1}) and l3 in L32 on
/// (v_q, v_{q+1}).
FeasibleResult lemma_three_feasible(const NearTriangulation& g, const ListAssignment& lists,
                                    int k, const PairSet& l2, const PairSet& l3);

struct ColourSetup {
  /// perm[c] is the new name of colour c; perm[0] is unused.
  std::vector<Colour> perm;
  /// Vertex v_{i+1} of the rotated cycle is v_{i+1+rotation} of the original.
  int rotation = 0;
  int condition = 0;
  /// Lists {perm(f(v))} on the rotated cycle, split as in ListAssignment.
  ListAssignment lists;
};

/// Relabels colours so the witness arcs fall in S1 / S3 / S2 and A becomes {c5..ck},
/// and rotates so the witness starts at v_1.
ColourSetup colour_permutation_setup(const CycleColouring& c, const GoodWitness& w);

/// Extends a good colouring over a chordless near-triangulation bounded by it.
/// Throws PreconditionError if c is not good or g is not chordless.
FullColouring theorem_main_extend(const CycleColouring& c, const NearTriangulation& g);

}  // namespace safecol
