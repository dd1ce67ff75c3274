#pragma once

// Exhaustive generation of triangulated disks with a labelled boundary, a brute-force
// extension oracle, and the safety probe built on both.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "safecol/classify.hpp"
#include "safecol/core.hpp"
#include "safecol/extend.hpp"

namespace safecol {

/// Calls `visit` once for every triangulated disk bounded by v_1..v_l with exactly n
/// internal vertices (internal labels in generation order). With `chordless_only`
/// graphs with a chord are skipped.
void for_each_disk_triangulation(int l, int n, bool chordless_only,
                                 const std::function<void(const NearTriangulation&)>& visit);

/// The same graphs in canonical form, sorted by canonical code, duplicates removed.
std::vector<NearTriangulation> enumerate_disk_triangulations(int l, int n, bool chordless_only);

/// Backtracking over internal vertices in id order, colours ascending. Returns the first
/// extension found, or nothing if c does not extend to g.
std::optional<FullColouring> brute_force_extend(const CycleColouring& c, const NearTriangulation& g);

struct ProbeVerdict {
  CycleColouring colouring;
  int n_max = 0;
  /// First non-extendable graph in (n, canonical code) order.
  std::optional<NearTriangulation> counterexample;
  /// Graphs scanned per n; stops at the n holding the counterexample.
  std::vector<std::uint64_t> scanned;
};

/// Scans chordless disk triangulations with n = 0..n_max internal vertices.
ProbeVerdict safety_probe(const CycleColouring& c, int n_max);

/// OpenMP version of safety_probe; gives the same verdict for any thread count.
/// jobs <= 0 uses the OpenMP default.
ProbeVerdict safety_probe_parallel(const CycleColouring& c, int n_max, int jobs);

struct ExplorerEntry {
  CycleColouring canonical;
  ProbeVerdict probe;
};

/// Every equivalence class of proper k-colourings of C_l whose verdict is "neither",
/// each with its probe verdict.
std::vector<ExplorerEntry> conjecture_explorer(int k, int l, int n_max, int jobs);

}  // namespace safecol
