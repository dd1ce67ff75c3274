#include <algorithm>
#include <map>
#include <set>

#include "safecol/enumerate.hpp"

namespace safecol {

namespace {

// Fills polygonal regions face by face. The face on the first edge (a, b) of a region
// has as third vertex either another vertex of the region, which splits it in two, or
// a fresh internal vertex.
class Filler {
 public:
  Filler(int l, int n, bool chordless_only,
         const std::function<void(const NearTriangulation&)>& visit)
      : l_(l), n_(n), chordless_only_(chordless_only), visit_(visit) {
    for (int i = 0; i < l; ++i) add_edge(i, (i + 1) % l);
  }

  void run() {
    std::vector<int> outer(l_);
    for (int i = 0; i < l_; ++i) outer[i] = i;
    pending_.push_back({outer, n_});
    next_region();
  }

 private:
  struct Task {
    std::vector<int> polygon;
    int budget;
  };

  static std::pair<int, int> key(int u, int v) { return {std::min(u, v), std::max(u, v)}; }
  bool has_edge(int u, int v) const { return edges_.count(key(u, v)) > 0; }
  void add_edge(int u, int v) { edges_.insert(key(u, v)); }
  void remove_edge(int u, int v) { edges_.erase(key(u, v)); }
  bool is_chord(int u, int v) const {
    if (u >= l_ || v >= l_) return false;
    const int d = std::abs(u - v);
    return d != 1 && d != l_ - 1;
  }

  void next_region() {
    if (pending_.empty()) {
      std::vector<Triangle> tris(faces_.begin(), faces_.end());
      visit_(near_triangulation_from_faces(l_, n_, std::move(tris)));
      return;
    }
    Task t = std::move(pending_.back());
    pending_.pop_back();
    fill(t.polygon, t.budget);
    pending_.push_back(std::move(t));
  }

  void push_face(int a, int b, int c) {
    Triangle t{a, b, c};
    std::sort(t.begin(), t.end());
    faces_.push_back(t);
  }

  void fill(const std::vector<int>& poly, int budget) {
    const int len = static_cast<int>(poly.size());
    if (len == 2) {
      if (budget == 0) next_region();
      return;
    }
    const int a = poly[0], b = poly[1];

    for (int j = 2; j < len; ++j) {
      const int c = poly[j];
      const bool new_bc = j != 2, new_ca = j != len - 1;
      if (new_bc && (has_edge(b, c) || (chordless_only_ && is_chord(b, c)))) continue;
      if (new_ca && (has_edge(c, a) || (chordless_only_ && is_chord(c, a)))) continue;
      if (new_bc) add_edge(b, c);
      if (new_ca) add_edge(c, a);
      push_face(a, b, c);
      std::vector<int> first(poly.begin() + 1, poly.begin() + j + 1);
      std::vector<int> second(poly.begin() + j, poly.end());
      second.push_back(a);
      for (int m1 = 0; m1 <= budget; ++m1) {
        if ((first.size() == 2 && m1 > 0) || (second.size() == 2 && budget - m1 > 0)) continue;
        pending_.push_back({second, budget - m1});
        fill(first, m1);
        pending_.pop_back();
      }
      faces_.pop_back();
      if (new_bc) remove_edge(b, c);
      if (new_ca) remove_edge(c, a);
    }

    if (budget > 0) {
      const int x = next_id_++;
      add_edge(a, x);
      add_edge(b, x);
      push_face(a, b, x);
      std::vector<int> rest{a, x};
      rest.insert(rest.end(), poly.begin() + 1, poly.end());
      fill(rest, budget - 1);
      faces_.pop_back();
      remove_edge(a, x);
      remove_edge(b, x);
      --next_id_;
    }
  }

  int l_, n_;
  bool chordless_only_;
  const std::function<void(const NearTriangulation&)>& visit_;
  int next_id_ = l_;
  std::set<std::pair<int, int>> edges_;
  std::vector<Triangle> faces_;
  std::vector<Task> pending_;
};

}  // namespace

void for_each_disk_triangulation(int l, int n, bool chordless_only,
                                 const std::function<void(const NearTriangulation&)>& visit) {
  if (l < 3 || n < 0) throw PreconditionError("need l >= 3 and n >= 0");
  Filler(l, n, chordless_only, visit).run();
}

std::vector<NearTriangulation> enumerate_disk_triangulations(int l, int n, bool chordless_only) {
  std::map<std::vector<std::int32_t>, NearTriangulation> by_code;
  for_each_disk_triangulation(l, n, chordless_only, [&](const NearTriangulation& g) {
    NearTriangulation canon = canonical_form(g);
    auto code = canonical_code(canon);
    by_code.emplace(std::move(code), std::move(canon));
  });
  std::vector<NearTriangulation> out;
  out.reserve(by_code.size());
  for (auto& [code, g] : by_code) out.push_back(std::move(g));
  return out;
}

}  // namespace safecol
