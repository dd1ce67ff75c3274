#include "safecol/extend.hpp"

#include <memory>

#include "engine.hpp"

namespace safecol {

namespace {

using detail::Engine;
using detail::Layout;
using detail::Region;

detail::Disk disk_of(const NearTriangulation& g, int rotation = 0) {
  detail::Disk d;
  const int l = g.boundary_len();
  for (int i = 0; i < l; ++i) d.boundary.push_back((i + rotation) % l);
  for (const auto& t : g.triangles()) d.faces.push_back(detail::make_face(t[0], t[1], t[2]));
  return d;
}

void require_palette(int k) {
  if (k < 5 || k > kMaxPalette) {
    throw PreconditionError("list extension needs 5 <= k <= " + std::to_string(kMaxPalette));
  }
}

Region region_of(const NearTriangulation& g, const ListAssignment& a, int k, const Layout& layout) {
  require_palette(k);
  const int l = g.boundary_len();
  if (static_cast<int>(a.lists.size()) != l) {
    throw PreconditionError("expected " + std::to_string(l) + " lists, got " +
                            std::to_string(a.lists.size()));
  }
  for (ColourSet s : a.lists) {
    if (s == 0 || (s & ~palette(k)) != 0) throw PreconditionError("list empty or outside palette");
  }
  Region r{disk_of(g), a.lists};
  if (auto e = detail::layout_problem(r, layout, k)) throw PreconditionError(*e);
  if (auto e = detail::consistency_problem(r)) throw PreconditionError("inconsistent: " + *e);
  return r;
}

void require_label(const PairSet& label, LabelFamily f, ColourSet first, ColourSet second, int k,
                   const char* what) {
  if (auto e = detail::label_problem(label, f, first, second, k)) {
    throw PreconditionError(std::string(what) + ": " + *e);
  }
}

/// Runs engine code, reporting low-level geometry failures as invariant errors too.
template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const InternalInvariantError&) {
    throw;
  } catch (const PreconditionError&) {
    throw;
  } catch (const std::logic_error& e) {
    throw InternalInvariantError(e.what(), {});
  }
}

void check_output(const NearTriangulation& g, const FullColouring& c, int k) {
  if (!is_proper_colouring(g, c, k)) {
    throw InternalInvariantError("engine produced an improper colouring", {});
  }
}

FeasibleResult wrap(const NearTriangulation& g, int k, std::shared_ptr<Engine> engine,
                    detail::Feasible f) {
  FeasibleResult out;
  out.label_l1 = *identify(f.label, LabelFamily::kL12, k);
  out.realize = [g, k, engine, f](ColourPair st) {
    if (!contains(f.label, st)) throw PreconditionError("pair is not in the label L1");
    FullColouring c = guarded([&] { return f.realize(st); });
    check_output(g, c, k);
    return c;
  };
  return out;
}

}  // namespace

bool is_proper_colouring(const NearTriangulation& g, std::span<const Colour> colours, int k) {
  if (static_cast<int>(colours.size()) != g.vertex_count()) return false;
  for (Colour c : colours) {
    if (c < 1 || c > k) return false;
  }
  for (const auto& e : g.edges()) {
    if (colours[e[0]] == colours[e[1]]) return false;
  }
  return true;
}

FullColouring lemma_one_extend(const NearTriangulation& g, const ListAssignment& lists, int k,
                               Colour s, Colour t) {
  const int l = g.boundary_len();
  Region r = region_of(g, lists, k, {l - 1, l - 1});
  if (s == t) throw PreconditionError("s and t must differ");
  if (!(lists.lists.front() & colour_bit(s)) || !(lists.lists.back() & colour_bit(t))) {
    throw PreconditionError("s or t is not on its list");
  }
  Engine engine(k, g.vertex_count());
  FullColouring c = guarded([&] { return engine.extend_all_t1(r, s, t); });
  check_output(g, c, k);
  return c;
}

FeasibleResult lemma_two_feasible(const NearTriangulation& g, const ListAssignment& lists, int k,
                                  const PairSet& l2) {
  const int l = g.boundary_len();
  const int p = lists.p;
  if (p < 1 || p >= l) throw PreconditionError("p must satisfy 1 <= p < l");
  Region r = region_of(g, lists, k, {p - 1, p - 1});
  require_label(l2, LabelFamily::kL12, r.lists[p - 1], r.lists[p], k, "L2");
  auto engine = std::make_shared<Engine>(k, g.vertex_count());
  detail::Feasible f = guarded([&] { return engine->feasible_pair(r, p - 1, l2); });
  return wrap(g, k, engine, std::move(f));
}

FeasibleResult lemma_three_feasible(const NearTriangulation& g, const ListAssignment& lists,
                                    int k, const PairSet& l2, const PairSet& l3) {
  const int l = g.boundary_len();
  const int p = lists.p, q = lists.q;
  if (!(1 <= p && p < q && q < l)) throw PreconditionError("p, q must satisfy 1 <= p < q < l");
  Region r = region_of(g, lists, k, {p - 1, q - 1});
  require_label(l2, LabelFamily::kL13, r.lists[p - 1], r.lists[p], k, "L2");
  require_label(l3, LabelFamily::kL32, r.lists[q - 1], r.lists[q], k, "L3");
  auto engine = std::make_shared<Engine>(k, g.vertex_count());
  detail::Feasible f = guarded([&] { return engine->feasible_triple(r, p - 1, q - 1, l2, l3); });
  return wrap(g, k, engine, std::move(f));
}

ColourSetup colour_permutation_setup(const CycleColouring& c, const GoodWitness& w) {
  if (c.k() < 5 || !check_good_witness(c, w)) {
    throw PreconditionError("witness does not hold for this colouring");
  }
  const int k = c.k(), l = c.size();
  ColourSetup out;
  out.condition = w.condition;
  out.rotation = w.condition == 1 ? 0 : w.indices[0] - 1;

  std::vector<std::pair<Colour, Colour>> fixed;
  if (w.condition == 1) {
    const auto from = set_members(c.used());
    std::vector<Colour> to{1};
    for (Colour x = 5; x <= k; ++x) to.push_back(x);
    for (std::size_t i = 0; i < from.size(); ++i) fixed.emplace_back(from[i], to[i]);
  } else {
    ColourSet a = 0;
    for (std::size_t i = 0; i < w.A.size(); ++i) {
      fixed.emplace_back(w.A[i], static_cast<Colour>(5 + i));
      a |= colour_bit(w.A[i]);
    }
    const std::vector<Colour> targets = w.condition == 2 ? std::vector<Colour>{1, 2}
                                                         : std::vector<Colour>{1, 3, 2};
    const auto& ix = w.indices;
    for (std::size_t arc = 0; arc < ix.size(); ++arc) {
      const int from = ix[arc] - 1, to = ix[(arc + 1) % ix.size()] - 1;
      const auto rest = set_members(arc_colour_set(c, ArcInterval::half_open(from, to)) & ~a);
      if (rest.size() != 1) throw PreconditionError("witness arc does not have one colour outside A");
      fixed.emplace_back(rest.front(), targets[arc]);
    }
  }
  out.perm.assign(k + 1, 0);
  ColourSet used_targets = 0;
  for (auto [from, to] : fixed) {
    out.perm[from] = to;
    used_targets |= colour_bit(to);
  }
  Colour next = 1;
  for (Colour x = 1; x <= k; ++x) {
    if (out.perm[x] != 0) continue;
    while (used_targets & colour_bit(next)) ++next;
    out.perm[x] = next++;
  }

  for (int i = 0; i < l; ++i) {
    out.lists.lists.push_back(colour_bit(out.perm[c[i + out.rotation]]));
  }
  if (w.condition == 1) {
    out.lists.p = out.lists.q = l;
  } else {
    out.lists.p = w.indices[1] - w.indices[0];
    out.lists.q = w.condition == 2 ? out.lists.p : w.indices[2] - w.indices[0];
  }
  return out;
}

FullColouring theorem_main_extend(const CycleColouring& c, const NearTriangulation& g) {
  const int k = c.k(), l = c.size();
  if (k < 5) throw PreconditionError("extension of good colourings needs k >= 5");
  if (g.boundary_len() != l) throw PreconditionError("graph boundary length differs from the cycle");
  const auto w = is_good(c);
  if (!w) throw PreconditionError("colouring is not good");
  if (!is_chordless(g)) throw PreconditionError("graph has a chord");

  const ColourSetup setup = colour_permutation_setup(c, *w);
  const auto& lists = setup.lists.lists;
  auto only = [&](int pos) { return set_members(lists[pos]).front(); };
  Region r{disk_of(g, setup.rotation), lists};
  Engine engine(k, g.vertex_count());
  const ColourPair ends{only(0), only(l - 1)};

  FullColouring col = guarded([&]() -> FullColouring {
    if (setup.condition == 1) return engine.extend_all_t1(r, ends.first, ends.second);
    const int p = setup.lists.p - 1;
    const PairSet l2{{only(p), only(p + 1)}};
    if (setup.condition == 2) return engine.feasible_pair(r, p, l2).realize(ends);
    const int q = setup.lists.q - 1;
    const PairSet l3{{only(q), only(q + 1)}};
    return engine.feasible_triple(r, p, q, l2, l3).realize(ends);
  });

  std::vector<Colour> inverse(k + 1, 0);
  for (Colour x = 1; x <= k; ++x) inverse[setup.perm[x]] = x;
  for (auto& x : col) x = inverse.at(x);
  check_output(g, col, k);
  for (int i = 0; i < l; ++i) {
    if (col[i] != c[i]) throw InternalInvariantError("boundary colour changed at v" + std::to_string(i + 1), {});
  }
  return col;
}

}  // namespace safecol
