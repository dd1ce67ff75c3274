#include "safecol/gadgets.hpp"

namespace safecol {

namespace {

void require(const CycleColouring& c, const BadWitness& w, int condition) {
  if (w.condition != condition || !check_bad_witness(c, w)) {
    throw PreconditionError("witness does not match the colouring for condition " +
                            std::to_string(condition));
  }
}

// Faces (v_m, v_{m+1}, apex) for m in [from, to), walking forward modulo l.
void fan(std::vector<Triangle>& faces, int l, int from, int to, int apex) {
  for (int m = from; m != to; m = (m + 1) % l) faces.push_back({m, (m + 1) % l, apex});
}

}  // namespace

const char* to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::kWheel: return "wheel";
    case GadgetKind::kTwoApex: return "two_apex";
    case GadgetKind::kTriangleApex: return "triangle_apex";
  }
  return "wheel";
}

Gadget wheel_gadget(const CycleColouring& c, const BadWitness& w) {
  require(c, w, 1);
  const int l = c.size();
  std::vector<Triangle> faces;
  for (int m = 0; m < l; ++m) faces.push_back({m, (m + 1) % l, l});
  return {near_triangulation_from_faces(l, 1, std::move(faces)), GadgetKind::kWheel, w};
}

Gadget two_apex_gadget(const CycleColouring& c, const BadWitness& w) {
  require(c, w, 2);
  const int l = c.size();
  const int p = w.indices[0] - 1, q = w.indices[1] - 1;
  const int u = l, v = l + 1;
  std::vector<Triangle> faces;
  fan(faces, l, p, q, u);
  fan(faces, l, q, p, v);
  faces.push_back({u, v, p});
  faces.push_back({u, v, q});
  return {near_triangulation_from_faces(l, 2, std::move(faces)), GadgetKind::kTwoApex, w};
}

Gadget triangle_apex_gadget(const CycleColouring& c, const BadWitness& w) {
  require(c, w, 3);
  const int l = c.size();
  const int p = w.indices[0] - 1, q = w.indices[1] - 1, r = w.indices[2] - 1;
  const int u = l, v = l + 1, x = l + 2;
  std::vector<Triangle> faces;
  fan(faces, l, p, q, u);
  fan(faces, l, q, r, v);
  fan(faces, l, r, p, x);
  faces.push_back({u, v, q});
  faces.push_back({v, x, r});
  faces.push_back({x, u, p});
  faces.push_back({u, v, x});
  return {near_triangulation_from_faces(l, 3, std::move(faces)), GadgetKind::kTriangleApex, w};
}

Gadget gadget_for(const CycleColouring& c, const BadWitness& w) {
  switch (w.condition) {
    case 1: return wheel_gadget(c, w);
    case 2: return two_apex_gadget(c, w);
    case 3: return triangle_apex_gadget(c, w);
    default: throw PreconditionError("unknown witness condition");
  }
}

}  // namespace safecol
