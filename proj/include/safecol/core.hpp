#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "safecol/errors.hpp"

namespace safecol {

/// Colour c_i is the integer i, 1 <= i <= k.
using Colour = int;

/// Set of colours as a bitmask; bit i is colour c_i. Palettes up to 30 colours.
using ColourSet = std::uint32_t;

constexpr int kMaxPalette = 30;

constexpr ColourSet colour_bit(Colour c) { return ColourSet{1} << c; }
inline int set_size(ColourSet s) { return __builtin_popcount(s); }
std::vector<Colour> set_members(ColourSet s);
ColourSet palette(int k);

/// A proper k-colouring of the cycle v_1..v_l. Storage is 0-based: entry i holds f(v_{i+1}).
class CycleColouring {
 public:
  /// Throws PreconditionError unless l >= 3, every entry is in [1, k] and the colouring is proper.
  CycleColouring(int k, std::vector<Colour> colours);

  int k() const { return k_; }
  int size() const { return static_cast<int>(colours_.size()); }
  /// Cyclic access; any integer index is reduced modulo l.
  Colour operator[](int i) const;
  std::span<const Colour> colours() const { return colours_; }
  ColourSet used() const;

  friend bool operator==(const CycleColouring&, const CycleColouring&) = default;
  friend auto operator<=>(const CycleColouring& a, const CycleColouring& b) {
    return a.colours_ <=> b.colours_;
  }

 private:
  int k_;
  std::vector<Colour> colours_;
};

enum class Closure { kClosed, kHalfOpenRight, kHalfOpenLeft, kOpen };

/// A cyclic arc of boundary positions, [from,to], [from,to), (from,to] or (from,to).
/// Indices are 0-based. Walking starts at `from` and moves forward modulo l.
struct ArcInterval {
  int from;
  int to;
  Closure closure = Closure::kClosed;

  static ArcInterval closed(int i, int j) { return {i, j, Closure::kClosed}; }
  static ArcInterval half_open(int i, int j) { return {i, j, Closure::kHalfOpenRight}; }
};

/// Positions covered by the arc, in walking order.
std::vector<int> arc_positions(int l, const ArcInterval& arc);

/// F over the arc: the colours that occur on it.
ColourSet arc_colour_set(const CycleColouring& c, const ArcInterval& arc);

using Edge = std::array<int, 2>;
using Triangle = std::array<int, 3>;

/// Unvalidated graph data. Vertex ids are 0-based: 0..l-1 boundary in cyclic order, then internal.
struct RawGraph {
  int boundary_len = 0;
  int internal_count = 0;
  std::vector<Edge> edges;
  std::vector<Triangle> triangles;
};

/// A triangulated disk whose outer face is bounded by the cycle 0,1,...,l-1.
/// Only obtainable through validate_near_triangulation, so every instance satisfies the
/// Euler counts, edge-face incidence and the fan condition at every vertex.
class NearTriangulation {
 public:
  int boundary_len() const { return l_; }
  int internal_count() const { return n_; }
  int vertex_count() const { return l_ + n_; }
  /// Sorted, each edge stored as (min, max).
  const std::vector<Edge>& edges() const { return edges_; }
  /// Sorted, each triangle stored with ascending ids.
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;
  bool is_face(int a, int b, int c) const;
  bool is_boundary(int v) const { return v < l_; }

  RawGraph raw() const { return {l_, n_, edges_, triangles_}; }

  friend bool operator==(const NearTriangulation& a, const NearTriangulation& b) {
    return a.l_ == b.l_ && a.n_ == b.n_ && a.triangles_ == b.triangles_;
  }

 private:
  friend NearTriangulation validate_near_triangulation(const RawGraph& g);
  int l_ = 0;
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;
  std::vector<std::vector<int>> adj_;
};

/// Throws GraphError naming the first violated invariant.
NearTriangulation validate_near_triangulation(const RawGraph& g);

/// Builds a validated graph from triangles alone; the edge set is derived from them.
NearTriangulation near_triangulation_from_faces(int boundary_len, int internal_count,
                                                std::vector<Triangle> triangles);

/// Chord between boundary positions (i, j), i < j, not consecutive on the cycle.
/// Returns the lexicographically smallest such pair.
std::optional<std::pair<int, int>> find_chord(const NearTriangulation& g);

inline bool is_chordless(const NearTriangulation& g) { return !find_chord(g).has_value(); }

/// A 3-cycle that is not a face and strictly encloses at least one vertex.
/// Returns the lexicographically smallest sorted triple.
std::optional<Triangle> find_separating_triangle(const NearTriangulation& g);

struct ChordSplit {
  /// Bounded by v_1..v_i, v_j..v_l.
  NearTriangulation outer;
  /// Bounded by v_i..v_j.
  NearTriangulation inner;
  /// New vertex id -> vertex id in the original graph.
  std::vector<int> outer_to_original;
  std::vector<int> inner_to_original;
};

/// Throws PreconditionError unless (i, j) is a chord.
ChordSplit split_at_chord(const NearTriangulation& g, std::pair<int, int> chord);

/// Boundary-labelled canonical code: invariant under relabelling internal vertices,
/// distinct for graphs that differ by anything other than internal labels.
std::vector<std::int32_t> canonical_code(const NearTriangulation& g);

/// Relabels internal vertices into the canonical order used by canonical_code.
NearTriangulation canonical_form(const NearTriangulation& g);

}  // namespace safecol
