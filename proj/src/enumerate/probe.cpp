#include <omp.h>

#include <algorithm>
#include <limits>

#include "safecol/enumerate.hpp"

namespace safecol {

std::optional<FullColouring> brute_force_extend(const CycleColouring& c, const NearTriangulation& g) {
  const int l = g.boundary_len(), k = c.k();
  if (c.size() != l) throw PreconditionError("graph boundary length differs from the cycle");
  FullColouring col(g.vertex_count(), 0);
  for (int i = 0; i < l; ++i) col[i] = c[i];
  for (int i = 0; i < l; ++i) {
    for (int u : g.neighbours(i)) {
      if (u < l && col[u] == col[i]) return std::nullopt;  // monochromatic chord
    }
  }
  const int n = g.vertex_count();
  // Iterative backtracking: col[v] holds the colour under trial, 0 before the first one.
  int v = l;
  while (v >= l) {
    if (v == n) return col;
    bool placed = false;
    for (Colour x = col[v] + 1; x <= k && !placed; ++x) {
      bool ok = true;
      for (int u : g.neighbours(v)) {
        if ((u < v) && col[u] == x) {
          ok = false;
          break;
        }
      }
      if (ok) {
        col[v] = x;
        placed = true;
      }
    }
    if (placed) {
      ++v;
    } else {
      col[v] = 0;
      --v;
    }
  }
  return std::nullopt;
}

ProbeVerdict safety_probe(const CycleColouring& c, int n_max) {
  ProbeVerdict out{c, n_max, std::nullopt, {}};
  for (int n = 0; n <= n_max; ++n) {
    const auto graphs = enumerate_disk_triangulations(c.size(), n, true);
    std::uint64_t scanned = 0;
    for (const auto& g : graphs) {
      ++scanned;
      if (!brute_force_extend(c, g)) {
        out.counterexample = g;
        break;
      }
    }
    out.scanned.push_back(scanned);
    if (out.counterexample) break;
  }
  return out;
}

// Extendability does not depend on how internal vertices are numbered, so the workers
// check graphs straight from the generator and only a level holding a failure is
// canonicalised, to report the same graph and scan count as the serial scan.
ProbeVerdict safety_probe_parallel(const CycleColouring& c, int n_max, int jobs) {
  ProbeVerdict out{c, n_max, std::nullopt, {}};
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  for (int n = 0; n <= n_max; ++n) {
    std::vector<NearTriangulation> graphs;
    for_each_disk_triangulation(c.size(), n, true,
                                [&](const NearTriangulation& g) { graphs.push_back(g); });
    const long count = static_cast<long>(graphs.size());
    std::vector<char> fails(graphs.size(), 0);
    long any = 0;
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads) reduction(+ : any)
    for (long i = 0; i < count; ++i) {
      if (!brute_force_extend(c, graphs[i])) {
        fails[i] = 1;
        ++any;
      }
    }
    if (any == 0) {
      out.scanned.push_back(static_cast<std::uint64_t>(count));
      continue;
    }
    std::vector<std::vector<std::int32_t>> codes(graphs.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (long i = 0; i < count; ++i) codes[i] = canonical_code(graphs[i]);
    long first = -1;
    for (long i = 0; i < count; ++i) {
      if (fails[i] && (first < 0 || codes[i] < codes[first])) first = i;
    }
    const auto rank = std::count_if(codes.begin(), codes.end(), [&](const auto& x) { return x <= codes[first]; });
    out.scanned.push_back(static_cast<std::uint64_t>(rank));
    out.counterexample = canonical_form(graphs[first]);
    break;
  }
  return out;
}

std::vector<ExplorerEntry> conjecture_explorer(int k, int l, int n_max, int jobs) {
  std::vector<ExplorerEntry> out;
  for_each_colouring(l, k, true, [&](const CycleColouring& c) {
    if (classify(c).kind != VerdictKind::kNeither) return;
    out.push_back({c, safety_probe_parallel(c, n_max, jobs)});
  });
  return out;
}

}  // namespace safecol
