#pragma once

// Recursive extension engine. Works on sub-disks that keep the vertex ids of the
// graph being coloured, so partial colourings from different pieces merge directly.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "safecol/detail/disk.hpp"
#include "safecol/labels.hpp"

namespace safecol::detail {

/// Indexed by global vertex id; 0 means uncoloured.
using Colouring = std::vector<Colour>;

struct Region {
  Disk disk;
  std::vector<ColourSet> lists;  // per boundary position
};

struct Feasible {
  PairSet label;
  std::function<Colouring(ColourPair)> realize;
};

/// Colour bijection on 1..kMaxPalette.
struct Perm {
  std::array<Colour, kMaxPalette + 1> to{};

  static Perm identity();
  static Perm swap(Colour a, Colour b);
  Perm inverse() const;
  Colour apply(Colour c) const { return c == 0 ? 0 : to[c]; }
  ColourSet apply_set(ColourSet s) const;
  PairSet apply_pairs(const PairSet& s) const;
  ColourPair apply_pair(ColourPair p) const { return {apply(p.first), apply(p.second)}; }
  Colouring apply_colouring(Colouring c) const;
  Region apply_region(Region r) const;
};

/// Boundary positions 0..p are T1, p+1..q are T3, the rest T2.
struct Layout {
  int p;
  int q;
  int type_at(int pos) const { return pos <= p ? 1 : pos <= q ? 3 : 2; }
};

/// Describes the first way the region violates the list-assignment rules, if any.
std::optional<std::string> layout_problem(const Region& r, const Layout& layout, int k);
std::optional<std::string> consistency_problem(const Region& r);
std::optional<std::string> label_problem(const PairSet& label, LabelFamily f, ColourSet first,
                                         ColourSet second, int k);

class Engine {
 public:
  Engine(int k, int vertex_count) : k_(k), vertex_count_(vertex_count) {}

  /// All lists T1; colours v_1 with s and v_l with t.
  Colouring extend_all_t1(const Region& r, Colour s, Colour t);
  /// T1 on 0..p, T2 after; l2 in L12 on edge (p, p+1).
  Feasible feasible_pair(const Region& r, int p, const PairSet& l2, int chain = 0);
  /// T1 on 0..p, T3 on p+1..q, T2 after; l2 in L13 on (p, p+1), l3 in L32 on (q, q+1).
  Feasible feasible_triple(const Region& r, int p, int q, const PairSet& l2, const PairSet& l3,
                  int chain = 0);

  /// Extends the colours already on the triangle u,v,w (the boundary of `inner`) inside it.
  Colouring fill_triangle(const Disk& inner, const Colouring& outside);

  [[noreturn]] void fail(const std::string& what) const;

 private:
  class Frame {
   public:
    Frame(Engine& e, std::string name) : e_(e) { e_.trace_.push_back(std::move(name)); }
    ~Frame() { e_.trace_.pop_back(); }
    void note(const std::string& s) { e_.trace_.back() += " " + s; }

   private:
    Engine& e_;
  };

  Colouring blank() const { return Colouring(vertex_count_, 0); }
  void merge_into(Colouring& into, const Colouring& from) const;
  void shrinks(const Disk& parent, const Disk& child) const;
  void check_entry(const Region& r, const Layout& layout) const;
  void check_label(const PairSet& label, LabelFamily f, ColourSet first, ColourSet second,
                   const char* what) const;
  void verify(const Region& r, const Colouring& c) const;
  void verify_pair(const Region& r, const Colouring& c, int pos, const PairSet& label,
                   const char* what) const;
  ColourSet neighbour_colours(const Disk& d, int v, const Colouring& c) const;
  Colour pick(ColourSet candidates, ColourSet forbidden, const char* what) const;

  Colouring extend_all_t1_pinned(const Region& r, int pos_a, Colour a, int pos_b, Colour b);
  Feasible finish(const Region& r, int p, int q, const PairSet& l2, const PairSet& l3,
                  PairSet l1, std::function<Colouring(ColourPair)> realize, std::string name);
  Feasible mirror4(const Region& r, int p, const PairSet& l2, int chain);
  Feasible mirror5(const Region& r, int p, int q, const PairSet& l2, const PairSet& l3,
                   int chain);
  Colouring realize_triangle(const Region& r, ColourPair st, const PairSet* l2,
                             const PairSet* l3);
  Feasible feasible_pair_triangle(const Region& r, const PairSet& l2);
  Feasible feasible_triple_triangle(const Region& r, const PairSet& l2, const PairSet& l3, int chain);
  Feasible feasible_triple_square(const Region& r, const PairSet& l2, const PairSet& l3, int chain);
  Colouring square_without_v1(const Region& r, bool singleton_at_v2, Colour v1_colour, int pos_a,
                              Colour a, int pos_b, Colour b);

  int k_;
  int vertex_count_;
  std::vector<std::string> trace_;
};

Region mirror_region(const Region& r);
ColourPair mirror_pair(ColourPair p);
PairSet mirror_pairs(const PairSet& s);

}  // namespace safecol::detail
