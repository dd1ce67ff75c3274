#pragma once

#include "safecol/classify.hpp"
#include "safecol/core.hpp"

namespace safecol {

enum class GadgetKind { kWheel, kTwoApex, kTriangleApex };

const char* to_string(GadgetKind kind);

/// Chordless near-triangulation on which a bad colouring does not extend.
struct Gadget {
  NearTriangulation graph;
  GadgetKind kind;
  BadWitness source;
};

/// Hub adjacent to every boundary vertex. Needs |F[1,l]| = k.
Gadget wheel_gadget(const CycleColouring& c, const BadWitness& w);

/// Vertex u on the arc [p,q], vertex v on [q,p] and adjacent to u.
Gadget two_apex_gadget(const CycleColouring& c, const BadWitness& w);

/// Triangle u,v,w with u on [p,q], v on [q,r], w on [r,p].
Gadget triangle_apex_gadget(const CycleColouring& c, const BadWitness& w);

/// Dispatches on the witness condition.
Gadget gadget_for(const CycleColouring& c, const BadWitness& w);

}  // namespace safecol
