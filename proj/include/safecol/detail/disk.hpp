#pragma once

// Face-list view of a triangulated disk with arbitrary vertex ids. Shared by the
// core graph operations and the extension engine, which works on sub-disks that
// keep the vertex ids of the graph being coloured.

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace safecol::detail {

using Face = std::array<int, 3>;

Face make_face(int a, int b, int c);

struct Disk {
  std::vector<int> boundary;  // cyclic order
  std::vector<Face> faces;    // sorted triples

  int length() const { return static_cast<int>(boundary.size()); }
  int at(int pos) const;  // cyclic
};

/// Edge -> indices of the faces containing it.
class FaceIndex {
 public:
  explicit FaceIndex(const Disk& d);
  const std::vector<int>& faces_of(int u, int v) const;
  bool has_edge(int u, int v) const;
  bool is_face(int a, int b, int c) const;
  const std::vector<int>& neighbours(int v) const;
  int edge_count() const { return static_cast<int>(edge_faces_.size()); }
  std::vector<std::pair<int, int>> edges() const;

 private:
  const Disk* disk_;
  std::map<std::pair<int, int>, std::vector<int>> edge_faces_;
  std::map<int, std::vector<int>> adj_;
  std::vector<Face> sorted_faces_;
};

int edge_count(const Disk& d);

/// Lexicographically smallest chord (i, j) of boundary positions, i < j.
std::optional<std::pair<int, int>> find_chord(const Disk& d);

/// Outer disk bounded by positions 0..i, j..l-1 and inner disk bounded by i..j.
std::pair<Disk, Disk> split_chord(const Disk& d, int i, int j);

struct SeparatingTriangle {
  Face triangle;
  std::vector<int> inside_faces;  // indices into the disk's face list
  std::vector<int> interior;      // vertices strictly inside
};

std::optional<SeparatingTriangle> find_separating_triangle(const Disk& d);

/// Outer disk with the triangle as a face, and the disk bounded by the triangle.
std::pair<Disk, Disk> cut_separating_triangle(const Disk& d, const SeparatingTriangle& t);

/// Third vertex of the face on boundary edge (pos, pos+1).
int apex_of_boundary_edge(const Disk& d, int pos);

/// Removes boundary edge (pos, pos+1); its face's apex joins the boundary at pos+1.
Disk delete_boundary_edge(const Disk& d, int pos);

/// Neighbours of the boundary vertex at pos in face order, from the vertex at pos-1
/// to the vertex at pos+1 (both included).
std::vector<int> boundary_fan(const Disk& d, int pos);

/// Removes the boundary vertex at pos; its inner fan neighbours take its place.
Disk delete_boundary_vertex(const Disk& d, int pos);

/// Faces reachable from `start` across edges not in `blocked`.
std::vector<int> flood_faces(const Disk& d, const FaceIndex& index, int start,
                             const std::vector<std::pair<int, int>>& blocked);

}  // namespace safecol::detail
