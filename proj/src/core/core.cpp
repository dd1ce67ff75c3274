#include "safecol/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "safecol/detail/disk.hpp"

namespace safecol {

const char* to_string(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::kMalformed: return "malformed";
    case GraphErrorKind::kMissingBoundaryEdge: return "missing-boundary-edge";
    case GraphErrorKind::kFaceCount: return "face-count";
    case GraphErrorKind::kEdgeCount: return "edge-count";
    case GraphErrorKind::kEdgeFaceIncidence: return "edge-face-incidence";
    case GraphErrorKind::kFan: return "fan";
    case GraphErrorKind::kDisconnected: return "disconnected";
  }
  return "unknown";
}

std::vector<Colour> set_members(ColourSet s) {
  std::vector<Colour> out;
  for (Colour c = 0; s != 0; ++c, s >>= 1) {
    if (s & 1) out.push_back(c);
  }
  return out;
}

ColourSet palette(int k) {
  ColourSet s = 0;
  for (Colour c = 1; c <= k; ++c) s |= colour_bit(c);
  return s;
}

CycleColouring::CycleColouring(int k, std::vector<Colour> colours)
    : k_(k), colours_(std::move(colours)) {
  if (k < 1 || k > kMaxPalette) throw PreconditionError("palette size out of range");
  if (colours_.size() < 3) throw PreconditionError("cycle length must be at least 3");
  const int l = size();
  for (int i = 0; i < l; ++i) {
    if (colours_[i] < 1 || colours_[i] > k) {
      throw PreconditionError("colour " + std::to_string(colours_[i]) + " outside palette");
    }
    if (colours_[i] == colours_[(i + 1) % l]) {
      throw PreconditionError("colouring is not proper at positions " + std::to_string(i + 1) +
                              " and " + std::to_string((i + 1) % l + 1));
    }
  }
}

Colour CycleColouring::operator[](int i) const {
  const int l = size();
  return colours_[((i % l) + l) % l];
}

ColourSet CycleColouring::used() const {
  ColourSet s = 0;
  for (Colour c : colours_) s |= colour_bit(c);
  return s;
}

std::vector<int> arc_positions(int l, const ArcInterval& arc) {
  if (l < 1 || arc.from < 0 || arc.from >= l || arc.to < 0 || arc.to >= l) {
    throw PreconditionError("arc index out of range");
  }
  std::vector<int> walk;
  for (int i = arc.from;; i = (i + 1) % l) {
    walk.push_back(i);
    if (i == arc.to) break;
  }
  const bool drop_first = arc.closure == Closure::kHalfOpenLeft || arc.closure == Closure::kOpen;
  const bool drop_last = arc.closure == Closure::kHalfOpenRight || arc.closure == Closure::kOpen;
  // [i,i) is empty and (i,i) likewise: the single position is both endpoints.
  if (walk.size() == 1) {
    if (drop_first || drop_last) walk.clear();
    return walk;
  }
  if (drop_last) walk.pop_back();
  if (drop_first) walk.erase(walk.begin());
  return walk;
}

ColourSet arc_colour_set(const CycleColouring& c, const ArcInterval& arc) {
  ColourSet s = 0;
  for (int i : arc_positions(c.size(), arc)) s |= colour_bit(c[i]);
  return s;
}

namespace {

Edge norm(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

[[noreturn]] void fail(GraphErrorKind kind, const std::string& what) { throw GraphError(kind, what); }

std::string vid(int v) { return std::to_string(v + 1); }

// Link of v: the edges opposite v in its incident triangles. Checks that they form
// one closed cycle (internal) or one path between v's boundary neighbours.
void check_fan(int v, int l, const std::vector<Edge>& link) {
  if (link.empty()) fail(GraphErrorKind::kFan, "vertex " + vid(v) + " lies on no triangle");
  std::map<int, std::vector<int>> adj;
  for (auto [a, b] : link) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int start = adj.begin()->first;
  if (v < l) {
    const int prev = (v + l - 1) % l, next = (v + 1) % l;
    for (const auto& [x, ns] : adj) {
      const std::size_t want = (x == prev || x == next) ? 1 : 2;
      if (ns.size() != want) {
        fail(GraphErrorKind::kFan, "boundary vertex " + vid(v) + " is not a single open fan");
      }
    }
    if (!adj.count(prev) || !adj.count(next)) {
      fail(GraphErrorKind::kFan, "boundary vertex " + vid(v) + " fan misses a boundary neighbour");
    }
    start = prev;
  } else {
    for (const auto& [x, ns] : adj) {
      if (ns.size() != 2) {
        fail(GraphErrorKind::kFan, "internal vertex " + vid(v) + " is not a single closed wheel");
      }
    }
  }
  // Connected link.
  std::map<int, bool> seen;
  std::vector<int> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  if (seen.size() != adj.size()) {
    fail(GraphErrorKind::kFan, "vertex " + vid(v) + " has more than one fan");
  }
}

detail::Disk to_disk(const NearTriangulation& g) {
  detail::Disk d;
  d.boundary.resize(g.boundary_len());
  std::iota(d.boundary.begin(), d.boundary.end(), 0);
  for (const auto& t : g.triangles()) d.faces.push_back(t);
  return d;
}

// Relabels a sub-disk so its boundary becomes 0..l'-1 and internal vertices follow in
// ascending original id.
std::pair<NearTriangulation, std::vector<int>> relabel(const detail::Disk& d,
                                                       const NearTriangulation& g) {
  std::map<int, int> to_new;
  std::vector<int> to_old;
  for (int v : d.boundary) {
    to_new[v] = static_cast<int>(to_old.size());
    to_old.push_back(v);
  }
  std::vector<int> internal;
  for (const auto& f : d.faces) {
    for (int x : f) {
      if (!to_new.count(x)) internal.push_back(x);
    }
  }
  std::sort(internal.begin(), internal.end());
  internal.erase(std::unique(internal.begin(), internal.end()), internal.end());
  for (int v : internal) {
    to_new[v] = static_cast<int>(to_old.size());
    to_old.push_back(v);
  }
  std::vector<Triangle> tris;
  for (const auto& f : d.faces) tris.push_back({to_new[f[0]], to_new[f[1]], to_new[f[2]]});
  (void)g;
  return {near_triangulation_from_faces(d.length(), static_cast<int>(internal.size()),
                                        std::move(tris)),
          std::move(to_old)};
}

}  // namespace

bool NearTriangulation::has_edge(int u, int v) const {
  return std::binary_search(edges_.begin(), edges_.end(), norm(u, v));
}

bool NearTriangulation::is_face(int a, int b, int c) const {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return std::binary_search(triangles_.begin(), triangles_.end(), t);
}

NearTriangulation validate_near_triangulation(const RawGraph& g) {
  const int l = g.boundary_len, n = g.internal_count;
  if (l < 3) fail(GraphErrorKind::kMalformed, "boundary length must be at least 3");
  if (n < 0) fail(GraphErrorKind::kMalformed, "negative internal vertex count");
  const int nv = l + n;
  auto in_range = [nv](int v) { return v >= 0 && v < nv; };

  std::vector<Edge> edges;
  for (auto [u, v] : g.edges) {
    if (!in_range(u) || !in_range(v)) fail(GraphErrorKind::kMalformed, "edge endpoint out of range");
    if (u == v) fail(GraphErrorKind::kMalformed, "loop at vertex " + vid(u));
    edges.push_back(norm(u, v));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    fail(GraphErrorKind::kMalformed, "repeated edge");
  }
  auto has = [&edges](int u, int v) {
    return std::binary_search(edges.begin(), edges.end(), norm(u, v));
  };

  std::vector<Triangle> tris;
  for (auto t : g.triangles) {
    for (int x : t) {
      if (!in_range(x)) fail(GraphErrorKind::kMalformed, "triangle vertex out of range");
    }
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) fail(GraphErrorKind::kMalformed, "degenerate triangle");
    if (!has(t[0], t[1]) || !has(t[1], t[2]) || !has(t[0], t[2])) {
      fail(GraphErrorKind::kMalformed, "triangle uses a missing edge");
    }
    tris.push_back(t);
  }
  std::sort(tris.begin(), tris.end());
  if (std::adjacent_find(tris.begin(), tris.end()) != tris.end()) {
    fail(GraphErrorKind::kMalformed, "repeated triangle");
  }

  for (int i = 0; i < l; ++i) {
    if (!has(i, (i + 1) % l)) {
      fail(GraphErrorKind::kMissingBoundaryEdge,
           "boundary edge " + vid(i) + "-" + vid((i + 1) % l) + " is missing");
    }
  }
  if (static_cast<int>(tris.size()) != l + 2 * n - 2) {
    fail(GraphErrorKind::kFaceCount, "expected " + std::to_string(l + 2 * n - 2) +
                                         " triangles, found " + std::to_string(tris.size()));
  }
  if (static_cast<int>(edges.size()) != 2 * l + 3 * n - 3) {
    fail(GraphErrorKind::kEdgeCount, "expected " + std::to_string(2 * l + 3 * n - 3) +
                                         " edges, found " + std::to_string(edges.size()));
  }

  std::map<Edge, int> incidence;
  for (const auto& t : tris) {
    ++incidence[{t[0], t[1]}];
    ++incidence[{t[1], t[2]}];
    ++incidence[{t[0], t[2]}];
  }
  for (const auto& e : edges) {
    const bool boundary = e[0] < l && e[1] < l && (e[1] - e[0] == 1 || (e[0] == 0 && e[1] == l - 1));
    const int want = boundary ? 1 : 2;
    if (incidence[e] != want) {
      fail(GraphErrorKind::kEdgeFaceIncidence,
           "edge " + vid(e[0]) + "-" + vid(e[1]) + " lies on " + std::to_string(incidence[e]) +
               " triangles, expected " + std::to_string(want));
    }
  }

  std::vector<std::vector<Edge>> links(nv);
  for (const auto& t : tris) {
    links[t[0]].push_back({t[1], t[2]});
    links[t[1]].push_back({t[0], t[2]});
    links[t[2]].push_back({t[0], t[1]});
  }
  for (int v = 0; v < nv; ++v) check_fan(v, l, links[v]);

  std::vector<std::vector<int>> adj(nv);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(nv, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != nv) fail(GraphErrorKind::kDisconnected, "graph is not connected");

  NearTriangulation out;
  out.l_ = l;
  out.n_ = n;
  out.edges_ = std::move(edges);
  out.triangles_ = std::move(tris);
  for (auto& ns : adj) std::sort(ns.begin(), ns.end());
  out.adj_ = std::move(adj);
  return out;
}

NearTriangulation near_triangulation_from_faces(int boundary_len, int internal_count,
                                                std::vector<Triangle> triangles) {
  RawGraph raw{boundary_len, internal_count, {}, std::move(triangles)};
  std::vector<Edge> edges;
  for (const auto& t : raw.triangles) {
    edges.push_back(norm(t[0], t[1]));
    edges.push_back(norm(t[1], t[2]));
    edges.push_back(norm(t[0], t[2]));
  }
  for (int i = 0; i < boundary_len; ++i) edges.push_back(norm(i, (i + 1) % boundary_len));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  raw.edges = std::move(edges);
  return validate_near_triangulation(raw);
}

std::optional<std::pair<int, int>> find_chord(const NearTriangulation& g) {
  const int l = g.boundary_len();
  for (const auto& [u, v] : g.edges()) {
    // edges() is sorted, so the first hit is the lexicographically smallest chord.
    if (u < l && v < l && v - u >= 2 && !(u == 0 && v == l - 1)) return std::pair{u, v};
  }
  return std::nullopt;
}

std::optional<Triangle> find_separating_triangle(const NearTriangulation& g) {
  auto found = detail::find_separating_triangle(to_disk(g));
  if (!found) return std::nullopt;
  return found->triangle;
}

ChordSplit split_at_chord(const NearTriangulation& g, std::pair<int, int> chord) {
  auto [i, j] = chord;
  if (i > j) std::swap(i, j);
  const int l = g.boundary_len();
  if (i < 0 || j >= l || j - i < 2 || (i == 0 && j == l - 1) || !g.has_edge(i, j)) {
    throw PreconditionError("(" + vid(i) + "," + vid(j) + ") is not a chord");
  }
  auto [outer, inner] = detail::split_chord(to_disk(g), i, j);
  auto [og, omap] = relabel(outer, g);
  auto [ig, imap] = relabel(inner, g);
  return {std::move(og), std::move(ig), std::move(omap), std::move(imap)};
}

namespace {

// Canonical relabelling: orient faces consistently with the boundary direction,
// then breadth-first from boundary vertex 0, visiting neighbours in rotation order.
std::vector<int> canonical_labels(const NearTriangulation& g) {
  const int l = g.boundary_len(), nv = g.vertex_count();
  const auto& tris = g.triangles();
  const int nf = static_cast<int>(tris.size());
  std::map<Edge, std::vector<int>> faces_of;
  for (int f = 0; f < nf; ++f) {
    const auto& t = tris[f];
    faces_of[{t[0], t[1]}].push_back(f);
    faces_of[{t[1], t[2]}].push_back(f);
    faces_of[{t[0], t[2]}].push_back(f);
  }
  std::vector<std::array<int, 3>> oriented(nf);
  std::vector<char> done(nf, 0);
  auto third = [](const Triangle& t, int a, int b) {
    for (int x : t) {
      if (x != a && x != b) return x;
    }
    return -1;
  };
  {
    int f0 = faces_of[{0, 1}].front();
    oriented[f0] = {0, 1, third(tris[f0], 0, 1)};
    done[f0] = 1;
    std::queue<int> todo;
    todo.push(f0);
    while (!todo.empty()) {
      int f = todo.front();
      todo.pop();
      const auto& o = oriented[f];
      for (int s = 0; s < 3; ++s) {
        int a = o[s], b = o[(s + 1) % 3];
        for (int h : faces_of[norm(a, b)]) {
          if (done[h]) continue;
          oriented[h] = {b, a, third(tris[h], a, b)};
          done[h] = 1;
          todo.push(h);
        }
      }
    }
  }
  // succ[x][y] = z for oriented face (x, y, z): around x, y is followed by z.
  std::vector<std::map<int, int>> succ(nv);
  for (const auto& o : oriented) {
    succ[o[0]][o[1]] = o[2];
    succ[o[1]][o[2]] = o[0];
    succ[o[2]][o[0]] = o[1];
  }
  std::vector<int> label(nv, -1);
  std::vector<int> parent(nv, -1);
  std::queue<int> todo;
  for (int i = 0; i < l; ++i) {
    label[i] = i;
    todo.push(i);
  }
  int next = l;
  while (!todo.empty()) {
    int v = todo.front();
    todo.pop();
    int start = v < l ? (v + 1) % l : parent[v];
    int cur = start;
    for (std::size_t steps = 0; steps <= succ[v].size(); ++steps) {
      if (label[cur] < 0) {
        label[cur] = next++;
        parent[cur] = v;
        todo.push(cur);
      }
      auto it = succ[v].find(cur);
      if (it == succ[v].end()) break;
      cur = it->second;
      if (cur == start) break;
    }
  }
  return label;
}

}  // namespace

std::vector<std::int32_t> canonical_code(const NearTriangulation& g) {
  const NearTriangulation c = canonical_form(g);
  std::vector<std::int32_t> code{c.boundary_len(), c.internal_count()};
  for (const auto& t : c.triangles()) code.insert(code.end(), t.begin(), t.end());
  return code;
}

NearTriangulation canonical_form(const NearTriangulation& g) {
  const std::vector<int> label = canonical_labels(g);
  std::vector<Triangle> tris;
  for (const auto& t : g.triangles()) tris.push_back({label[t[0]], label[t[1]], label[t[2]]});
  return near_triangulation_from_faces(g.boundary_len(), g.internal_count(), std::move(tris));
}

}  // namespace safecol
