#include "safecol/detail/disk.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace safecol::detail {

namespace {

std::pair<int, int> key(int u, int v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }

bool contains(const Face& f, int v) { return f[0] == v || f[1] == v || f[2] == v; }

int third(const Face& f, int u, int v) {
  for (int x : f) {
    if (x != u && x != v) return x;
  }
  throw std::logic_error("degenerate face");
}

const std::vector<int> kNoFaces;

}  // namespace

Face make_face(int a, int b, int c) {
  Face f{a, b, c};
  std::sort(f.begin(), f.end());
  return f;
}

int Disk::at(int pos) const {
  const int l = length();
  return boundary[((pos % l) + l) % l];
}

FaceIndex::FaceIndex(const Disk& d) : disk_(&d), sorted_faces_(d.faces) {
  std::sort(sorted_faces_.begin(), sorted_faces_.end());
  for (int f = 0; f < static_cast<int>(d.faces.size()); ++f) {
    const Face& t = d.faces[f];
    edge_faces_[key(t[0], t[1])].push_back(f);
    edge_faces_[key(t[1], t[2])].push_back(f);
    edge_faces_[key(t[0], t[2])].push_back(f);
  }
  for (int i = 0; i < d.length(); ++i) edge_faces_.try_emplace(key(d.at(i), d.at(i + 1)));
  for (const auto& [e, fs] : edge_faces_) {
    adj_[e.first].push_back(e.second);
    adj_[e.second].push_back(e.first);
  }
  for (auto& [v, ns] : adj_) std::sort(ns.begin(), ns.end());
}

const std::vector<int>& FaceIndex::faces_of(int u, int v) const {
  auto it = edge_faces_.find(key(u, v));
  return it == edge_faces_.end() ? kNoFaces : it->second;
}

bool FaceIndex::has_edge(int u, int v) const { return edge_faces_.count(key(u, v)) > 0; }

bool FaceIndex::is_face(int a, int b, int c) const {
  return std::binary_search(sorted_faces_.begin(), sorted_faces_.end(), make_face(a, b, c));
}

const std::vector<int>& FaceIndex::neighbours(int v) const {
  auto it = adj_.find(v);
  return it == adj_.end() ? kNoFaces : it->second;
}

std::vector<std::pair<int, int>> FaceIndex::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_faces_.size());
  for (const auto& [e, fs] : edge_faces_) out.push_back(e);
  return out;
}

int edge_count(const Disk& d) {
  // Every edge lies on a face; boundary edges on one, the others on two.
  return (3 * static_cast<int>(d.faces.size()) + d.length()) / 2;
}

std::optional<std::pair<int, int>> find_chord(const Disk& d) {
  const int l = d.length();
  std::map<int, int> pos;
  for (int i = 0; i < l; ++i) pos[d.boundary[i]] = i;
  FaceIndex index(d);
  std::optional<std::pair<int, int>> best;
  for (const auto& [u, v] : index.edges()) {
    auto iu = pos.find(u);
    auto iv = pos.find(v);
    if (iu == pos.end() || iv == pos.end()) continue;
    int a = std::min(iu->second, iv->second);
    int b = std::max(iu->second, iv->second);
    if (b - a < 2 || (a == 0 && b == l - 1)) continue;
    if (!best || std::pair{a, b} < *best) best = std::pair{a, b};
  }
  return best;
}

std::vector<int> flood_faces(const Disk& d, const FaceIndex& index, int start,
                             const std::vector<std::pair<int, int>>& blocked) {
  std::set<std::pair<int, int>> wall;
  for (auto [u, v] : blocked) wall.insert(key(u, v));
  std::vector<char> seen(d.faces.size(), 0);
  std::vector<int> out;
  std::queue<int> todo;
  todo.push(start);
  seen[start] = 1;
  while (!todo.empty()) {
    int f = todo.front();
    todo.pop();
    out.push_back(f);
    const Face& t = d.faces[f];
    const std::pair<int, int> sides[3] = {key(t[0], t[1]), key(t[1], t[2]), key(t[0], t[2])};
    for (auto e : sides) {
      if (wall.count(e)) continue;
      for (int g : index.faces_of(e.first, e.second)) {
        if (!seen[g]) {
          seen[g] = 1;
          todo.push(g);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Disk, Disk> split_chord(const Disk& d, int i, int j) {
  const int l = d.length();
  FaceIndex index(d);
  const auto& start = index.faces_of(d.boundary[i], d.boundary[i + 1]);
  if (start.size() != 1) throw std::logic_error("split_chord: boundary edge without a face");
  std::vector<int> inside =
      flood_faces(d, index, start.front(), {{d.boundary[i], d.boundary[j]}});
  std::vector<char> in(d.faces.size(), 0);
  for (int f : inside) in[f] = 1;

  Disk outer, inner;
  for (int p = 0; p <= i; ++p) outer.boundary.push_back(d.boundary[p]);
  for (int p = j; p < l; ++p) outer.boundary.push_back(d.boundary[p]);
  for (int p = i; p <= j; ++p) inner.boundary.push_back(d.boundary[p]);
  for (int f = 0; f < static_cast<int>(d.faces.size()); ++f) {
    (in[f] ? inner : outer).faces.push_back(d.faces[f]);
  }
  return {std::move(outer), std::move(inner)};
}

std::optional<SeparatingTriangle> find_separating_triangle(const Disk& d) {
  FaceIndex index(d);
  std::set<int> on_boundary(d.boundary.begin(), d.boundary.end());
  for (const auto& [u, v] : index.edges()) {
    const auto& nu = index.neighbours(u);
    const auto& nv = index.neighbours(v);
    std::vector<int> common;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
    for (int w : common) {
      if (w <= v) continue;
      if (index.is_face(u, v, w)) continue;
      if (d.length() == 3 && on_boundary.count(u) && on_boundary.count(v) && on_boundary.count(w)) {
        continue;
      }
      const std::vector<std::pair<int, int>> walls = {{u, v}, {v, w}, {u, w}};
      std::vector<char> assigned(d.faces.size(), 0);
      SeparatingTriangle found{make_face(u, v, w), {}, {}};
      std::set<int> interior;
      for (auto [a, b] : walls) {
        for (int f : index.faces_of(a, b)) {
          if (assigned[f]) continue;
          std::vector<int> comp = flood_faces(d, index, f, walls);
          std::set<int> verts;
          for (int g : comp) {
            assigned[g] = 1;
            for (int x : d.faces[g]) {
              if (x != u && x != v && x != w) verts.insert(x);
            }
          }
          bool touches_boundary = false;
          for (int x : verts) touches_boundary |= on_boundary.count(x) > 0;
          if (touches_boundary) continue;
          found.inside_faces.insert(found.inside_faces.end(), comp.begin(), comp.end());
          interior.insert(verts.begin(), verts.end());
        }
      }
      if (interior.empty()) continue;
      std::sort(found.inside_faces.begin(), found.inside_faces.end());
      found.interior.assign(interior.begin(), interior.end());
      return found;
    }
  }
  return std::nullopt;
}

std::pair<Disk, Disk> cut_separating_triangle(const Disk& d, const SeparatingTriangle& t) {
  std::vector<char> in(d.faces.size(), 0);
  for (int f : t.inside_faces) in[f] = 1;
  Disk outer, inner;
  outer.boundary = d.boundary;
  inner.boundary = {t.triangle[0], t.triangle[1], t.triangle[2]};
  for (int f = 0; f < static_cast<int>(d.faces.size()); ++f) {
    (in[f] ? inner : outer).faces.push_back(d.faces[f]);
  }
  outer.faces.push_back(t.triangle);
  return {std::move(outer), std::move(inner)};
}

int apex_of_boundary_edge(const Disk& d, int pos) {
  FaceIndex index(d);
  int a = d.at(pos), b = d.at(pos + 1);
  const auto& fs = index.faces_of(a, b);
  if (fs.size() != 1) throw std::logic_error("boundary edge must lie on exactly one face");
  return third(d.faces[fs.front()], a, b);
}

Disk delete_boundary_edge(const Disk& d, int pos) {
  FaceIndex index(d);
  int a = d.at(pos), b = d.at(pos + 1);
  const auto& fs = index.faces_of(a, b);
  if (fs.size() != 1) throw std::logic_error("boundary edge must lie on exactly one face");
  const int f = fs.front();
  const int apex = third(d.faces[f], a, b);
  Disk out;
  out.boundary = d.boundary;
  out.boundary.insert(out.boundary.begin() + pos + 1, apex);
  for (int g = 0; g < static_cast<int>(d.faces.size()); ++g) {
    if (g != f) out.faces.push_back(d.faces[g]);
  }
  return out;
}

std::vector<int> boundary_fan(const Disk& d, int pos) {
  FaceIndex index(d);
  const int v = d.at(pos), prev = d.at(pos - 1), next = d.at(pos + 1);
  std::vector<int> fan{prev};
  int cur = prev;
  int last_face = -1;
  for (std::size_t guard = 0; guard <= d.faces.size(); ++guard) {
    int face = -1;
    for (int f : index.faces_of(v, cur)) {
      if (f != last_face) face = f;
    }
    if (face < 0) throw std::logic_error("boundary_fan: open fan does not reach the next vertex");
    int x = third(d.faces[face], v, cur);
    fan.push_back(x);
    if (x == next) return fan;
    cur = x;
    last_face = face;
  }
  throw std::logic_error("boundary_fan: fan does not terminate");
}

Disk delete_boundary_vertex(const Disk& d, int pos) {
  const int l = d.length();
  const int p = ((pos % l) + l) % l;
  const int v = d.boundary[p];
  std::vector<int> fan = boundary_fan(d, p);
  Disk out;
  for (int i = 0; i < p; ++i) out.boundary.push_back(d.boundary[i]);
  for (std::size_t i = 1; i + 1 < fan.size(); ++i) out.boundary.push_back(fan[i]);
  for (int i = p + 1; i < l; ++i) out.boundary.push_back(d.boundary[i]);
  for (const Face& f : d.faces) {
    if (!contains(f, v)) out.faces.push_back(f);
  }
  return out;
}

}  // namespace safecol::detail
