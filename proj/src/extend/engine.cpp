#include "engine.hpp"

#include <algorithm>
#include <map>

#include "safecol/errors.hpp"

namespace safecol::detail {

namespace {

std::string pos_name(int pos) { return "v" + std::to_string(pos + 1); }

Region restrict_to(const Region& r, Disk d) {
  std::map<int, ColourSet> list_of;
  for (int i = 0; i < r.disk.length(); ++i) list_of[r.disk.boundary[i]] = r.lists[i];
  Region out;
  for (int v : d.boundary) out.lists.push_back(list_of.at(v));
  out.disk = std::move(d);
  return out;
}

/// Starts the boundary at `start` and walks forwards, or backwards when `reverse` is set.
Region reoriented(const Region& r, int start, bool reverse) {
  const int l = r.disk.length();
  Region out;
  out.disk.faces = r.disk.faces;
  for (int i = 0; i < l; ++i) {
    int pos = reverse ? start - i : start + i;
    pos = ((pos % l) + l) % l;
    out.disk.boundary.push_back(r.disk.boundary[pos]);
    out.lists.push_back(r.lists[pos]);
  }
  return out;
}

ColourSet bits(std::initializer_list<Colour> cs) {
  ColourSet s = 0;
  for (Colour c : cs) s |= colour_bit(c);
  return s;
}

const ColourSet kT1 = type_list(1);
const ColourSet kT2 = type_list(2);
const ColourSet kT3 = type_list(3);

/// Colour bijection taking each listed source to its target and the rest in ascending order.
Perm sending(const std::vector<std::pair<Colour, Colour>>& fixed) {
  Perm p;
  std::array<bool, kMaxPalette + 1> src_used{}, dst_used{};
  for (auto [from, to] : fixed) {
    p.to[from] = to;
    src_used[from] = dst_used[to] = true;
  }
  Colour next = 1;
  for (Colour c = 1; c <= kMaxPalette; ++c) {
    if (src_used[c]) continue;
    while (dst_used[next]) ++next;
    p.to[c] = next++;
  }
  return p;
}

}  // namespace

Perm Perm::identity() {
  Perm p;
  for (Colour c = 0; c <= kMaxPalette; ++c) p.to[c] = c;
  return p;
}

Perm Perm::swap(Colour a, Colour b) {
  Perm p = identity();
  std::swap(p.to[a], p.to[b]);
  return p;
}

Perm Perm::inverse() const {
  Perm p;
  for (Colour c = 1; c <= kMaxPalette; ++c) p.to[to[c]] = c;
  return p;
}

ColourSet Perm::apply_set(ColourSet s) const {
  ColourSet out = 0;
  for (Colour c : set_members(s)) out |= colour_bit(apply(c));
  return out;
}

PairSet Perm::apply_pairs(const PairSet& s) const {
  std::vector<ColourPair> out;
  for (auto p : s) out.push_back(apply_pair(p));
  return make_pairs(std::move(out));
}

Colouring Perm::apply_colouring(Colouring c) const {
  for (auto& x : c) x = apply(x);
  return c;
}

Region Perm::apply_region(Region r) const {
  for (auto& l : r.lists) l = apply_set(l);
  return r;
}

Region mirror_region(const Region& r) {
  return Perm::swap(1, 2).apply_region(reoriented(r, r.disk.length() - 1, true));
}

ColourPair mirror_pair(ColourPair p) {
  const Perm s = Perm::swap(1, 2);
  return {s.apply(p.second), s.apply(p.first)};
}

PairSet mirror_pairs(const PairSet& s) {
  std::vector<ColourPair> out;
  for (auto p : s) out.push_back(mirror_pair(p));
  return make_pairs(std::move(out));
}

std::optional<std::string> layout_problem(const Region& r, const Layout& layout, int k) {
  const int l = r.disk.length();
  if (static_cast<int>(r.lists.size()) != l) return "list count differs from boundary length";
  for (int i = 0; i < l; ++i) {
    const int t = layout.type_at(i);
    if (!has_type(r.lists[i], t, k)) {
      return "list at " + pos_name(i) + " is not of type T" + std::to_string(t);
    }
  }
  return std::nullopt;
}

std::optional<std::string> consistency_problem(const Region& r) {
  std::map<int, int> pos_of;
  for (int i = 0; i < r.disk.length(); ++i) pos_of[r.disk.boundary[i]] = i;
  FaceIndex index(r.disk);
  for (auto [u, v] : index.edges()) {
    auto iu = pos_of.find(u), iv = pos_of.find(v);
    if (iu == pos_of.end() || iv == pos_of.end()) continue;
    const ColourSet a = r.lists[iu->second], b = r.lists[iv->second];
    if (a == b && set_size(a) == 1) {
      return "boundary vertices " + pos_name(iu->second) + " and " + pos_name(iv->second) +
             " are adjacent with the same singleton list";
    }
  }
  return std::nullopt;
}

std::optional<std::string> label_problem(const PairSet& label, LabelFamily f, ColourSet first,
                                         ColourSet second, int k) {
  if (!identify(label, f, k)) {
    return to_string(label) + " is not a member of " + to_string(f);
  }
  if (!within(label, first, second)) {
    return to_string(label) + " is not contained in the product of the endpoint lists";
  }
  return std::nullopt;
}

void Engine::fail(const std::string& what) const { throw InternalInvariantError(what, trace_); }

void Engine::merge_into(Colouring& into, const Colouring& from) const {
  for (std::size_t v = 0; v < from.size(); ++v) {
    if (from[v] == 0) continue;
    if (into[v] != 0 && into[v] != from[v]) {
      fail("pieces disagree on the colour of vertex " + std::to_string(v + 1));
    }
    into[v] = from[v];
  }
}

void Engine::shrinks(const Disk& parent, const Disk& child) const {
  if (edge_count(child) >= edge_count(parent)) {
    fail("recursive instance has " + std::to_string(edge_count(child)) + " edges, parent " +
         std::to_string(edge_count(parent)));
  }
}

void Engine::check_entry(const Region& r, const Layout& layout) const {
  if (auto e = layout_problem(r, layout, k_)) fail(*e);
  if (auto e = consistency_problem(r)) fail(*e);
}

void Engine::check_label(const PairSet& label, LabelFamily f, ColourSet first, ColourSet second,
                         const char* what) const {
  if (auto e = label_problem(label, f, first, second, k_)) fail(std::string(what) + ": " + *e);
}

void Engine::verify(const Region& r, const Colouring& c) const {
  const Disk& d = r.disk;
  for (int i = 0; i < d.length(); ++i) {
    const Colour x = c[d.boundary[i]];
    if (x == 0 || !(r.lists[i] & colour_bit(x))) fail("colour at " + pos_name(i) + " is off its list");
  }
  for (const Face& f : d.faces) {
    for (int a = 0; a < 3; ++a) {
      const Colour x = c[f[a]], y = c[f[(a + 1) % 3]];
      if (x < 1 || x > k_) fail("vertex " + std::to_string(f[a] + 1) + " left uncoloured");
      if (x == y) {
        fail("edge " + std::to_string(f[a] + 1) + "-" + std::to_string(f[(a + 1) % 3] + 1) +
             " is monochromatic");
      }
    }
  }
}

void Engine::verify_pair(const Region& r, const Colouring& c, int pos, const PairSet& label,
                         const char* what) const {
  const ColourPair got{c[r.disk.at(pos)], c[r.disk.at(pos + 1)]};
  if (!contains(label, got)) fail(std::string(what) + " edge coloured outside its label");
}

ColourSet Engine::neighbour_colours(const Disk& d, int v, const Colouring& c) const {
  ColourSet s = 0;
  for (const Face& f : d.faces) {
    if (f[0] != v && f[1] != v && f[2] != v) continue;
    for (int u : f) {
      if (u != v && c[u] != 0) s |= colour_bit(c[u]);
    }
  }
  return s;
}

Colour Engine::pick(ColourSet candidates, ColourSet forbidden, const char* what) const {
  const ColourSet free = candidates & ~forbidden;
  if (free == 0) fail(std::string("no colour left for ") + what);
  return set_members(free).front();
}

Colouring Engine::extend_all_t1(const Region& r, Colour s, Colour t) {
  const Disk& d = r.disk;
  const int l = d.length();
  Frame frame(*this, "extend_all_t1 l=" + std::to_string(l) + " faces=" + std::to_string(d.faces.size()));
  check_entry(r, {l - 1, l - 1});
  if (s == t || !(r.lists[0] & colour_bit(s)) || !(r.lists[l - 1] & colour_bit(t))) {
    fail("pinned end colours are equal or off their lists");
  }

  if (auto chord = find_chord(d)) {
    auto [i, j] = *chord;
    frame.note("chord " + pos_name(i) + pos_name(j));
    auto [outer, inner] = split_chord(d, i, j);
    Region r1 = restrict_to(r, std::move(outer));
    Region r2 = restrict_to(r, std::move(inner));
    shrinks(d, r1.disk);
    shrinks(d, r2.disk);
    Colouring c = extend_all_t1(r1, s, t);
    merge_into(c, extend_all_t1(r2, c[d.boundary[i]], c[d.boundary[j]]));
    verify(r, c);
    return c;
  }

  if (auto sep = find_separating_triangle(d)) {
    frame.note("separating triangle");
    auto [outer, inner] = cut_separating_triangle(d, *sep);
    Region r1{std::move(outer), r.lists};
    shrinks(d, r1.disk);
    shrinks(d, inner);
    Colouring c = extend_all_t1(r1, s, t);
    merge_into(c, fill_triangle(inner, c));
    verify(r, c);
    return c;
  }

  Colouring c = blank();
  if (l == 3 && d.faces.size() == 1) {
    frame.note("triangle");
    c[d.boundary[0]] = s;
    c[d.boundary[2]] = t;
    c[d.boundary[1]] = pick(r.lists[1], bits({s, t}), "v2 of a triangle");
    verify(r, c);
    return c;
  }

  for (int i = 0; i + 1 < l; ++i) {
    if (r.lists[i] & r.lists[i + 1]) continue;
    frame.note("delete edge " + pos_name(i) + pos_name(i + 1));
    Region r1{delete_boundary_edge(d, i), r.lists};
    r1.lists.insert(r1.lists.begin() + i + 1, kT1);
    shrinks(d, r1.disk);
    c = extend_all_t1(r1, s, t);
    verify(r, c);
    return c;
  }

  frame.note("delete v2");
  for (int i = 0; i < l; ++i) {
    if (r.lists[i] != kT1) fail("expected every list to be {c2,c3,c4}");
  }
  const std::vector<int> fan = boundary_fan(d, 1);
  Region r1{delete_boundary_vertex(d, 1), {r.lists[0]}};
  for (std::size_t idx = 1; idx + 1 < fan.size(); ++idx) {
    // fan[idx] is u_{idx+1}: odd u-index gets c1, even gets c5
    r1.lists.push_back((idx + 1) % 2 == 1 ? colour_bit(1) : colour_bit(5));
  }
  r1.lists.insert(r1.lists.end(), r.lists.begin() + 2, r.lists.end());
  shrinks(d, r1.disk);
  c = extend_all_t1(r1, s, t);
  c[d.boundary[1]] = pick(kT1, neighbour_colours(d, d.boundary[1], c), "v2");
  verify(r, c);
  return c;
}

Colouring Engine::fill_triangle(const Disk& inner, const Colouring& outside) {
  if (inner.faces.size() <= 1) return blank();
  Frame frame(*this, "fill triangle");
  const int u = inner.boundary[0], v = inner.boundary[1], w = inner.boundary[2];
  const Perm sigma = sending({{outside[u], 2}, {outside[v], 3}, {outside[w], 4}});
  Region tri{Disk{{u, w, v}, inner.faces}, {kT1, kT1, kT1}};
  Colouring c = sigma.inverse().apply_colouring(extend_all_t1(tri, 2, 3));
  if (c[u] != outside[u] || c[v] != outside[v] || c[w] != outside[w]) {
    fail("triangle filling changed the triangle's colours");
  }
  return c;
}

Colouring Engine::extend_all_t1_pinned(const Region& r, int pos_a, Colour a, int pos_b, Colour b) {
  const int l = r.disk.length();
  const bool forward_neighbour = (pos_a + 1) % l == pos_b;
  if (!forward_neighbour && (pos_b + 1) % l != pos_a) fail("pinned vertices are not adjacent");
  return extend_all_t1(reoriented(r, pos_a, forward_neighbour), a, b);
}


Feasible Engine::finish(const Region& r, int p, int q, const PairSet& l2, const PairSet& l3,
                        PairSet l1, std::function<Colouring(ColourPair)> realize,
                        std::string name) {
  const int l = r.disk.length();
  check_label(l1, LabelFamily::kL12, r.lists[0], r.lists[l - 1], "derived L1");
  auto checked = [this, r, p, q, l2, l3, l1, realize = std::move(realize),
                  name = std::move(name)](ColourPair st) {
    Frame frame(*this, "realize (c" + std::to_string(st.first) + ",c" +
                           std::to_string(st.second) + ") for " + name);
    if (!contains(l1, st)) fail("requested pair is not in L1 " + to_string(l1));
    Colouring c = realize(st);
    verify(r, c);
    if (c[r.disk.boundary.front()] != st.first || c[r.disk.boundary.back()] != st.second) {
      fail("end pair not honoured");
    }
    verify_pair(r, c, p, l2, "L2");
    if (q >= 0) verify_pair(r, c, q, l3, "L3");
    return c;
  };
  return {std::move(l1), std::move(checked)};
}

Colouring Engine::realize_triangle(const Region& r, ColourPair st, const PairSet* first,
                                   const PairSet* second) {
  const auto& b = r.disk.boundary;
  for (Colour x : set_members(r.lists[1])) {
    if (x == st.first || x == st.second) continue;
    if (first && !contains(*first, {st.first, x})) continue;
    if (second && !contains(*second, {x, st.second})) continue;
    Colouring c = blank();
    c[b[0]] = st.first;
    c[b[1]] = x;
    c[b[2]] = st.second;
    merge_into(c, fill_triangle(r.disk, c));
    return c;
  }
  fail("no colour for v2 realizes the requested pair");
}

Feasible Engine::mirror4(const Region& r, int p, const PairSet& l2, int chain) {
  const int l = r.disk.length();
  Frame frame(*this, "mirror");
  Feasible f = feasible_pair(mirror_region(r), l - 2 - p, mirror_pairs(l2), chain + 1);
  const Perm sw = Perm::swap(1, 2);
  return finish(
      r, p, -1, l2, {}, mirror_pairs(f.label),
      [f, sw](ColourPair st) { return sw.apply_colouring(f.realize(mirror_pair(st))); },
      "mirrored feasible_pair");
}

Feasible Engine::feasible_pair_triangle(const Region& r, const PairSet& l2) {
  const auto lab = identify(l2, LabelFamily::kL12, k_);
  const bool single = set_size(r.lists[0]) == 1;
  const Colour a = single ? set_members(r.lists[0]).front() : 0;
  const Colour x = lab->x, y = 7 - lab->x;
  std::vector<ColourPair> l1;
  switch (lab->shape) {
    case 1: l1 = {{single ? a : 3, lab->b}}; break;
    case 2:
      if (single) l1 = {{a, x}};
      else l1 = {{2, x}, {y, x}};
      break;
    case 3: l1 = {{single ? a : y, lab->b}}; break;
    case 4:
      if (single) l1 = {{a, x}};
      else l1 = l2;
      break;
    case 5:
      if (single) l1 = {{a, y}};
      else l1 = {{y, 1}, {2, y}};
      break;
    case 6:
      if (single) l1 = {{a, x}};
      else l1 = {{y, x}, {y, 1}};
      break;
    default: fail("unknown label shape");
  }
  return finish(
      r, 1, -1, l2, {}, make_pairs(std::move(l1)),
      [this, r, l2](ColourPair st) { return realize_triangle(r, st, nullptr, &l2); },
      "feasible_pair triangle");
}

Feasible Engine::feasible_pair(const Region& r, int p, const PairSet& l2, int chain) {
  const Disk& d = r.disk;
  const int l = d.length();
  const std::string name = "feasible_pair l=" + std::to_string(l) + " p=" + std::to_string(p + 1) +
                           " faces=" + std::to_string(d.faces.size());
  Frame frame(*this, name);
  if (p < 0 || p > l - 2) fail("labelled edge out of range");
  if (chain > 3) fail("too many transformations without progress");
  check_entry(r, {p, p});
  check_label(l2, LabelFamily::kL12, r.lists[p], r.lists[p + 1], "L2");

  if (auto chord = find_chord(d)) {
    auto [i, j] = *chord;
    frame.note("chord " + pos_name(i) + pos_name(j));
    auto [outer, inner] = split_chord(d, i, j);
    Region r1 = restrict_to(r, std::move(outer));
    Region r2 = restrict_to(r, std::move(inner));
    shrinks(d, r1.disk);
    shrinks(d, r2.disk);
    const int vi = d.boundary[i], vj = d.boundary[j];
    if (j <= p || i > p) {
      Feasible f1 = feasible_pair(r1, j <= p ? p - (j - i - 1) : p, l2);
      const Perm sw = j <= p ? Perm::identity() : Perm::swap(1, 2);
      return finish(
          r, p, -1, l2, {}, f1.label,
          [this, f1, r2, sw, vi, vj](ColourPair st) {
            Colouring c = f1.realize(st);
            merge_into(c, sw.apply_colouring(extend_all_t1(sw.apply_region(r2), sw.apply(c[vi]),
                                                    sw.apply(c[vj]))));
            return c;
          },
          name);
    }
    Feasible f2 = feasible_pair(r2, p - i, l2);
    Feasible f1 = feasible_pair(r1, i, f2.label);
    return finish(
        r, p, -1, l2, {}, f1.label,
        [this, f1, f2, vi, vj](ColourPair st) {
          Colouring c = f1.realize(st);
          merge_into(c, f2.realize({c[vi], c[vj]}));
          return c;
        },
        name);
  }

  if (auto sep = find_separating_triangle(d)) {
    frame.note("separating triangle");
    auto [outer, inner] = cut_separating_triangle(d, *sep);
    Region r1{std::move(outer), r.lists};
    shrinks(d, r1.disk);
    shrinks(d, inner);
    Feasible f1 = feasible_pair(r1, p, l2);
    return finish(
        r, p, -1, l2, {}, f1.label,
        [this, f1, inner](ColourPair st) {
          Colouring c = f1.realize(st);
          merge_into(c, fill_triangle(inner, c));
          return c;
        },
        name);
  }

  if (l == 3) {
    frame.note("triangle");
    if (p == 0) return mirror4(r, p, l2, chain);
    return feasible_pair_triangle(r, l2);
  }

  for (int i = 0; i + 1 < l; ++i) {
    if (i == p || (r.lists[i] & r.lists[i + 1])) continue;
    frame.note("delete edge " + pos_name(i) + pos_name(i + 1));
    Region r1{delete_boundary_edge(d, i), r.lists};
    r1.lists.insert(r1.lists.begin() + i + 1, i < p ? kT1 : kT2);
    shrinks(d, r1.disk);
    Feasible f = feasible_pair(r1, i < p ? p + 1 : p, l2);
    return finish(r, p, -1, l2, {}, f.label, f.realize, name);
  }

  auto single = [&](int i) { return set_size(r.lists[i]) == 1; };
  if (single(0)) {
    frame.note("singleton v1");
    if (p != 0) fail("v1 has a singleton list but the label is not on v1v2");
    const auto lab = identify(l2, LabelFamily::kL12, k_);
    PairSet l2n;
    if (lab->shape == 1) {
      l2n = {{3, lab->b}};
    } else if (lab->shape == 2) {
      l2n = make_pairs({{2, lab->x}, {7 - lab->x, lab->x}});
    } else {
      fail("unexpected label shape at a singleton v1");
    }
    Region r1{delete_boundary_edge(d, 0), r.lists};
    r1.lists.insert(r1.lists.begin() + 1, kT1);
    shrinks(d, r1.disk);
    Feasible f = feasible_pair(r1, 1, l2n);
    return finish(r, p, -1, l2, {}, f.label, f.realize, name);
  }
  if (single(l - 1)) {
    frame.note("singleton vl");
    return mirror4(r, p, l2, chain);
  }
  for (int i = 1; i + 1 < l; ++i) {
    if (single(i)) fail("singleton list at " + pos_name(i) + " survives edge deletion");
  }

  if (p >= 2) {
    frame.note("delete v2");
    const int v2 = d.boundary[1];
    const std::vector<int> fan = boundary_fan(d, 1);
    const int fr = static_cast<int>(fan.size());
    Region r1{delete_boundary_vertex(d, 1), {r.lists[0]}};
    for (int idx = 1; idx + 1 < fr; ++idx) {
      r1.lists.push_back((idx + 1) % 2 == 1 ? colour_bit(1) : colour_bit(5));
    }
    r1.lists.insert(r1.lists.end(), r.lists.begin() + 2, r.lists.end());
    shrinks(d, r1.disk);
    Feasible f = feasible_pair(r1, p + fr - 3, l2);
    return finish(
        r, p, -1, l2, {}, f.label,
        [this, f, d, v2](ColourPair st) {
          Colouring c = f.realize(st);
          c[v2] = pick(kT1, neighbour_colours(d, v2, c), "v2");
          return c;
        },
        name);
  }
  if (p < l - 3) {
    frame.note("p small");
    return mirror4(r, p, l2, chain);
  }
  if (l != 4 || p != 1) fail("no case applies");

  const auto lab = identify(l2, LabelFamily::kL12, k_);
  const Colour x = lab->x;
  if (!contains(l2, {x, 1})) {
    frame.note("square, (x,c1) absent");
    return mirror4(r, p, l2, chain);
  }
  frame.note("square, delete v2");
  const int v2 = d.boundary[1];
  const std::vector<int> fan = boundary_fan(d, 1);
  const int fr = static_cast<int>(fan.size());
  std::vector<ColourSet> ul(fr, 0);
  ul[fr - 1] = colour_bit(1);
  for (int idx = fr - 2; idx >= 1; --idx) ul[idx] = bits({1, 5}) & ~ul[idx + 1];
  Region r1{delete_boundary_vertex(d, 1), {r.lists[0]}};
  r1.lists.insert(r1.lists.end(), ul.begin() + 1, ul.end());
  r1.lists.push_back(r.lists[3]);
  shrinks(d, r1.disk);
  Feasible f = feasible_pair(r1, fr - 1, {{1, x}});
  return finish(
      r, p, -1, l2, {}, f.label,
      [f, v2, x](ColourPair st) {
        Colouring c = f.realize(st);
        c[v2] = x;
        return c;
      },
      name);
}


Feasible Engine::mirror5(const Region& r, int p, int q, const PairSet& l2, const PairSet& l3,
                         int chain) {
  const int l = r.disk.length();
  Frame frame(*this, "mirror");
  Feasible f = feasible_triple(mirror_region(r), l - 2 - q, l - 2 - p, mirror_pairs(l3),
                      mirror_pairs(l2), chain + 1);
  const Perm sw = Perm::swap(1, 2);
  return finish(
      r, p, q, l2, l3, mirror_pairs(f.label),
      [f, sw](ColourPair st) { return sw.apply_colouring(f.realize(mirror_pair(st))); },
      "mirrored feasible_triple");
}

Feasible Engine::feasible_triple_triangle(const Region& r, const PairSet& l2, const PairSet& l3,
                                 int chain) {
  Frame frame(*this, "feasible_triple triangle");
  auto single = [&](int i) { return set_size(r.lists[i]) == 1; };
  std::vector<ColourPair> l1;
  if (single(0)) {
    const Colour a = set_members(r.lists[0]).front();
    const auto lab2 = identify(l2, LabelFamily::kL13, k_);
    const auto lab3 = identify(l3, LabelFamily::kL32, k_);
    if (lab2->shape == 1) {
      if (lab3->shape == 1) l1 = {{a, lab3->b}};
      else if (lab3->shape == 2) l1 = {{a, 4}};
      else fail("L3 does not fit L2 at a singleton v1");
    } else if (lab2->shape == 2) {
      if (lab3->shape == 3) l1 = {{a, lab3->b}};
      else if (contains_all(l3, {{1, 3}, {4, 3}})) l1 = {{a, 3}};
      else l1 = {{a, 4}};
    } else {
      fail("unexpected L2 shape at a singleton v1");
    }
  } else if (single(2)) {
    return mirror5(r, 0, 1, l2, l3, chain);
  } else if (single(1)) {
    l1 = {{2, 4}, {4, 1}};
  } else {
    const bool a = contains_all(l2, {{2, 1}, {4, 1}});
    const bool b = contains_all(l3, {{1, 3}, {4, 3}});
    const bool a_rev = contains_all(l3, {{2, 1}, {2, 4}});
    const bool b_rev = contains_all(l2, {{3, 2}, {3, 4}});
    if (a && b) {
      l1 = {{2, 3}, {4, 3}};
    } else if (a_rev && b_rev) {
      return mirror5(r, 0, 1, l2, l3, chain);
    } else if (a) {
      l1 = {{2, 4}, {4, 1}};
    } else if (a_rev) {
      return mirror5(r, 0, 1, l2, l3, chain);
    } else {
      l1 = {{2, 3}, {3, 1}};
    }
  }
  return finish(
      r, 0, 1, l2, l3, make_pairs(std::move(l1)),
      [this, r, l2, l3](ColourPair st) { return realize_triangle(r, st, &l2, &l3); },
      "feasible_triple triangle");
}

Colouring Engine::square_without_v1(const Region& r, bool singleton_at_v2, Colour v1_colour,
                                    int pos_a, Colour a, int pos_b, Colour b) {
  Frame frame(*this, "square without v1");
  const Disk& d = r.disk;
  const std::vector<int> fan = boundary_fan(d, 0);  // v4 = u_1, ..., u_r = v2
  const int fr = static_cast<int>(fan.size());
  std::vector<ColourSet> ul(fr, 0);
  if (singleton_at_v2) {
    ul[fr - 1] = colour_bit(1);
    for (int idx = fr - 2; idx >= 1; --idx) ul[idx] = bits({1, 5}) & ~ul[idx + 1];
  } else {
    ul[0] = colour_bit(1);
    for (int idx = 1; idx + 1 < fr; ++idx) ul[idx] = bits({1, 5}) & ~ul[idx - 1];
  }
  Region r1{delete_boundary_vertex(d, 0), {}};
  r1.lists.insert(r1.lists.end(), ul.begin() + 1, ul.end() - 1);
  r1.lists.push_back(singleton_at_v2 ? colour_bit(1) : kT1);
  r1.lists.push_back(kT1);
  r1.lists.push_back(singleton_at_v2 ? kT1 : colour_bit(1));
  shrinks(d, r1.disk);
  // position j >= 1 of the square sits at j + fr - 3 after removing v1
  Colouring c = extend_all_t1_pinned(r1, pos_a + fr - 3, a, pos_b + fr - 3, b);
  c[d.boundary[0]] = v1_colour;
  return c;
}

Feasible Engine::feasible_triple_square(const Region& r, const PairSet& l2, const PairSet& l3, int chain) {
  Frame frame(*this, "feasible_triple square");
  const bool a = contains_all(l2, {{2, 1}, {4, 1}});
  const bool b = contains_all(l3, {{1, 3}, {4, 3}});
  const bool a_rev = contains_all(l3, {{2, 1}, {2, 4}});
  const bool b_rev = contains_all(l2, {{3, 2}, {3, 4}});
  const Perm sw = Perm::swap(1, 2);
  if (a && b) {
    frame.note("A and B");
    return finish(
        r, 0, 2, l2, l3, {{2, 3}, {4, 3}},
        [this, r](ColourPair st) { return square_without_v1(r, true, st.first, 3, 3, 2, 4); },
        "feasible_triple square");
  }
  if (a_rev && b_rev) return mirror5(r, 0, 2, l2, l3, chain);
  if (a) {
    frame.note("A only");
    const Region m = mirror_region(r);
    return finish(
        r, 0, 2, l2, l3, {{2, 4}, {4, 1}},
        [this, r, m, sw](ColourPair st) {
          const Region& base = st == ColourPair{2, 4} ? r : m;
          Colouring c = square_without_v1(base, true, 2, 3, 4, 2, 2);
          return st == ColourPair{2, 4} ? c : sw.apply_colouring(c);
        },
        "feasible_triple square");
  }
  if (a_rev) return mirror5(r, 0, 2, l2, l3, chain);
  frame.note("neither");
  const Region m = mirror_region(r);
  return finish(
      r, 0, 2, l2, l3, {{2, 3}, {3, 1}},
      [this, r, m, sw](ColourPair st) {
        const Region& base = st == ColourPair{3, 1} ? r : m;
        Colouring c = square_without_v1(base, false, 3, 1, 2, 2, 4);
        return st == ColourPair{3, 1} ? c : sw.apply_colouring(c);
      },
      "feasible_triple square");
}

Feasible Engine::feasible_triple(const Region& r, int p, int q, const PairSet& l2, const PairSet& l3,
                        int chain) {
  const Disk& d = r.disk;
  const int l = d.length();
  const std::string name = "feasible_triple l=" + std::to_string(l) + " p=" + std::to_string(p + 1) +
                           " q=" + std::to_string(q + 1) +
                           " faces=" + std::to_string(d.faces.size());
  Frame frame(*this, name);
  if (!(0 <= p && p < q && q <= l - 2)) fail("labelled edges out of range");
  if (chain > 3) fail("too many transformations without progress");
  const Layout layout{p, q};
  check_entry(r, layout);
  check_label(l2, LabelFamily::kL13, r.lists[p], r.lists[p + 1], "L2");
  check_label(l3, LabelFamily::kL32, r.lists[q], r.lists[q + 1], "L3");

  if (auto chord = find_chord(d)) {
    auto [i, j] = *chord;
    const int ti = layout.type_at(i), tj = layout.type_at(j);
    frame.note("chord " + pos_name(i) + pos_name(j) + " types " + std::to_string(ti) +
               std::to_string(tj));
    if (ti == 3 && tj == 2) return mirror5(r, p, q, l2, l3, chain);
    auto [outer, inner] = split_chord(d, i, j);
    Region r1 = restrict_to(r, std::move(outer));
    Region r2 = restrict_to(r, std::move(inner));
    shrinks(d, r1.disk);
    shrinks(d, r2.disk);
    const int vi = d.boundary[i], vj = d.boundary[j];
    auto shift = [&](int pos) { return pos <= i ? pos : pos - (j - i - 1); };
    if (ti == tj) {
      Feasible f1 = feasible_triple(r1, shift(p), shift(q), l2, l3);
      const Perm sw = ti == 1 ? Perm::identity() : ti == 3 ? Perm::swap(1, 3) : Perm::swap(1, 2);
      return finish(
          r, p, q, l2, l3, f1.label,
          [this, f1, r2, sw, vi, vj](ColourPair st) {
            Colouring c = f1.realize(st);
            merge_into(c, sw.apply_colouring(extend_all_t1(sw.apply_region(r2), sw.apply(c[vi]),
                                                    sw.apply(c[vj]))));
            return c;
          },
          name);
    }
    if (ti == 1 && tj == 2) {
      Feasible f2 = feasible_triple(r2, p - i, q - i, l2, l3);
      Feasible f1 = feasible_pair(r1, i, f2.label);
      return finish(
          r, p, q, l2, l3, f1.label,
          [this, f1, f2, vi, vj](ColourPair st) {
            Colouring c = f1.realize(st);
            merge_into(c, f2.realize({c[vi], c[vj]}));
            return c;
          },
          name);
    }
    // v_i of type T1, v_j of type T3
    const Perm s23 = Perm::swap(2, 3), s34 = Perm::swap(3, 4);
    const auto l2_12 = l12_for_l13(l2, k_);
    if (!l2_12) fail("L2 has no L12 counterpart");
    Feasible f2 = feasible_pair(s23.apply_region(r2), p - i, l2_12->pairs);
    const auto l2_chord12 = identify(f2.label, LabelFamily::kL12, k_);
    if (!l2_chord12) fail("chord label is not in L12");
    Feasible f1 = feasible_triple(r1, i, shift(q), to_l13(*l2_chord12).pairs, l3);
    return finish(
        r, p, q, l2, l3, f1.label,
        [this, f1, f2, s23, s34, vi, vj](ColourPair st) {
          Colouring c = f1.realize(st);
          const ColourPair pi = s23.apply_pair({c[vi], c[vj]});
          Colouring c2 = contains(f2.label, pi)
                             ? f2.realize(pi)
                             : s34.apply_colouring(f2.realize(s34.apply_pair(pi)));
          merge_into(c, s23.apply_colouring(c2));
          return c;
        },
        name);
  }

  if (auto sep = find_separating_triangle(d)) {
    frame.note("separating triangle");
    auto [outer, inner] = cut_separating_triangle(d, *sep);
    Region r1{std::move(outer), r.lists};
    shrinks(d, r1.disk);
    shrinks(d, inner);
    Feasible f1 = feasible_triple(r1, p, q, l2, l3);
    return finish(
        r, p, q, l2, l3, f1.label,
        [this, f1, inner](ColourPair st) {
          Colouring c = f1.realize(st);
          merge_into(c, fill_triangle(inner, c));
          return c;
        },
        name);
  }

  if (l == 3) return feasible_triple_triangle(r, l2, l3, chain);

  for (int i = 0; i + 1 < l; ++i) {
    if (i == p || i == q || (r.lists[i] & r.lists[i + 1])) continue;
    frame.note("delete edge " + pos_name(i) + pos_name(i + 1));
    Region r1{delete_boundary_edge(d, i), r.lists};
    r1.lists.insert(r1.lists.begin() + i + 1, i < p ? kT1 : i < q ? kT3 : kT2);
    shrinks(d, r1.disk);
    Feasible f = feasible_triple(r1, i < p ? p + 1 : p, i < q ? q + 1 : q, l2, l3);
    return finish(r, p, q, l2, l3, f.label, f.realize, name);
  }

  auto single = [&](int i) { return set_size(r.lists[i]) == 1; };
  if (single(0)) {
    frame.note("singleton v1");
    if (p != 0) fail("v1 has a singleton list but L2 is not on v1v2");
    const auto lab = identify(l2, LabelFamily::kL13, k_);
    PairSet l2n;
    if (lab->shape == 1) {
      l2n = make_pairs({{2, lab->c}, {4, lab->c}});
    } else if (lab->shape == 2) {
      l2n = make_pairs({{3, 2}, {3, 4}, {2, 4}, {4, 2}});
    } else {
      fail("unexpected L2 shape at a singleton v1");
    }
    Region r1{delete_boundary_edge(d, 0), r.lists};
    r1.lists.insert(r1.lists.begin() + 1, kT1);
    shrinks(d, r1.disk);
    Feasible f = feasible_triple(r1, 1, q + 1, l2n, l3);
    return finish(r, p, q, l2, l3, f.label, f.realize, name);
  }
  if (single(l - 1)) {
    frame.note("singleton vl");
    return mirror5(r, p, q, l2, l3, chain);
  }
  for (int i = 1; i + 1 < l; ++i) {
    if (!single(i)) continue;
    if (i != p + 1 || single(p)) fail("singleton list at " + pos_name(i) + " survives edge deletion");
    frame.note("singleton after L2");
    const Colour c = set_members(r.lists[i]).front();
    if (l2 != make_pairs({{2, c}, {4, c}})) fail("L2 does not match the singleton after it");
    Region r1{delete_boundary_edge(d, p), r.lists};
    r1.lists.insert(r1.lists.begin() + p + 1, kT3);
    shrinks(d, r1.disk);
    Feasible f = feasible_triple(r1, p, q + 1, make_pairs({{2, 1}, {4, 1}, {2, 4}, {4, 2}}), l3);
    return finish(r, p, q, l2, l3, f.label, f.realize, name);
  }

  if (p >= 1 && contains(l2, {2, 1})) {
    // v_{p+1} becomes a c1 singleton of type T1 once v_p is removed
    frame.note(q > p + 1 ? "delete vp" : "delete vp, q = p+1");
    if (!contains_all(l2, {{2, 1}, {4, 1}})) fail("L2 has (c2,c1) without (c4,c1)");
    const int vp = d.boundary[p];
    const std::vector<int> fan = boundary_fan(d, p);  // v_{p-1} = u_1, ..., u_r = v_{p+1}
    const int fr = static_cast<int>(fan.size());
    std::vector<ColourSet> ul(fr, 0);
    ul[fr - 1] = colour_bit(1);
    for (int idx = fr - 2; idx >= 1; --idx) ul[idx] = bits({1, 5}) & ~ul[idx + 1];
    Region r1{delete_boundary_vertex(d, p), {}};
    r1.lists.assign(r.lists.begin(), r.lists.begin() + p);
    r1.lists.insert(r1.lists.end(), ul.begin() + 1, ul.end());
    r1.lists.insert(r1.lists.end(), r.lists.begin() + p + 2, r.lists.end());
    shrinks(d, r1.disk);
    const int pn = p + fr - 2;
    Feasible f;
    if (q > p + 1) {
      f = feasible_triple(r1, pn, q + fr - 3, make_pairs({{1, 2}, {1, 4}}), l3);
    } else {
      PairSet l3n;
      if (contains(l3, {1, 3})) l3n = {{1, 3}};
      else if (contains(l3, {1, 4})) l3n = {{1, 4}};
      else fail("L3 has neither (c1,c3) nor (c1,c4)");
      f = feasible_pair(r1, pn, l3n);
    }
    return finish(
        r, p, q, l2, l3, f.label,
        [this, f, d, vp](ColourPair st) {
          Colouring c = f.realize(st);
          c[vp] = pick(bits({2, 4}), neighbour_colours(d, vp, c), "v_p");
          return c;
        },
        name);
  }

  // v_{p+1} is removed; v_p becomes a c3 singleton of type T3. Used when (c2,c1) is not in L2
  // and either q > p+1, or q = p+1 and the far end of L3 is v_l.
  auto delete_after_p = [&](bool relabel_l3) -> Feasible {
    const int vn = d.boundary[p + 1];
    const std::vector<int> fan = boundary_fan(d, p + 1);  // v_p = u_1, ..., u_r = v_{p+2}
    const int fr = static_cast<int>(fan.size());
    std::vector<ColourSet> ul(fr, 0);
    ul[0] = colour_bit(3);
    for (int idx = 1; idx + 1 < fr; ++idx) ul[idx] = bits({3, 5}) & ~ul[idx - 1];
    Region r1{delete_boundary_vertex(d, p + 1), {}};
    r1.lists.assign(r.lists.begin(), r.lists.begin() + p);
    r1.lists.insert(r1.lists.end(), ul.begin(), ul.end() - 1);
    r1.lists.insert(r1.lists.end(), r.lists.begin() + p + 2, r.lists.end());
    shrinks(d, r1.disk);
    PairSet l3n = l3;
    int qn = q + fr - 3;
    if (relabel_l3) {
      const Colour z = set_members(ul[fr - 2]).front();
      l3n = make_pairs({{z, 1}, {z, 4}});
      qn = p + fr - 2;
    }
    Feasible f = feasible_triple(r1, p - 1, qn, make_pairs({{2, 3}, {4, 3}}), l3n);
    return finish(
        r, p, q, l2, l3, f.label,
        [this, f, d, r, vn, p, q, l2, l3](ColourPair st) {
          Colouring c = f.realize(st);
          const ColourSet nb = neighbour_colours(d, vn, c);
          const Colour before = c[r.disk.boundary[p]], after = c[r.disk.boundary[p + 2]];
          for (Colour y : set_members(r.lists[p + 1] & ~nb)) {
            if (!contains(l2, {before, y})) continue;
            if (q == p + 1 && !contains(l3, {y, after})) continue;
            c[vn] = y;
            return c;
          }
          fail("no colour for v_{p+1}");
        },
        name);
  };

  if (p >= 1 && q > p + 1) {
    frame.note("delete v_{p+1}");
    if (!contains_all(l2, {{3, 2}, {3, 4}})) fail("L2 lacks (c3,c2),(c3,c4)");
    return delete_after_p(false);
  }

  if (p >= 1 && q == p + 1) {
    if (contains(l3, {2, 1})) {
      if (q < l - 2) {
        frame.note("(c2,c1) in L3");
        return mirror5(r, p, q, l2, l3, chain);
      }
      frame.note("(c2,c1) in L3, L3 ends at vl: delete v_{p+1}");
      if (!contains_all(l2, {{3, 2}, {3, 4}})) fail("L2 lacks (c3,c2),(c3,c4)");
      return delete_after_p(true);
    }
    frame.note("swap c3,c4 and pin v_{p+1}");
    const Perm s34 = Perm::swap(3, 4);
    Region rs = s34.apply_region(r);
    rs.lists[p + 1] = colour_bit(3);
    std::vector<ColourPair> l2s, l3s;
    for (auto pr : s34.apply_pairs(l2)) {
      if (pr.second == 3) l2s.push_back(pr);
    }
    for (auto pr : s34.apply_pairs(l3)) {
      if (pr.first == 3) l3s.push_back(pr);
    }
    Feasible f = feasible_triple(rs, p, q, make_pairs(l2s), make_pairs(l3s), chain + 1);
    return finish(
        r, p, q, l2, l3, s34.apply_pairs(f.label),
        [f, s34](ColourPair st) { return s34.apply_colouring(f.realize(s34.apply_pair(st))); },
        name);
  }

  if (q < l - 2) {
    frame.note("q small");
    return mirror5(r, p, q, l2, l3, chain);
  }
  if (p != 0) fail("no case applies");
  if (l == 4) return feasible_triple_square(r, l2, l3, chain);

  frame.note("delete v3");
  const int v3 = d.boundary[2];
  const std::vector<int> fan = boundary_fan(d, 2);
  const int fr = static_cast<int>(fan.size());
  Region r1{delete_boundary_vertex(d, 2), {r.lists[0], r.lists[1]}};
  for (int idx = 1; idx + 1 < fr; ++idx) {
    r1.lists.push_back((idx + 1) % 2 == 1 ? colour_bit(3) : colour_bit(5));
  }
  r1.lists.insert(r1.lists.end(), r.lists.begin() + 3, r.lists.end());
  shrinks(d, r1.disk);
  Feasible f = feasible_triple(r1, 0, q + fr - 3, l2, l3);
  return finish(
      r, p, q, l2, l3, f.label,
      [this, f, d, v3](ColourPair st) {
        Colouring c = f.realize(st);
        c[v3] = pick(bits({1, 2, 4}), neighbour_colours(d, v3, c), "v3");
        return c;
      },
      name);
}

}  // namespace safecol::detail
