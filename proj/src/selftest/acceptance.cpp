#include "safecol/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "safecol/classify.hpp"
#include "safecol/enumerate.hpp"
#include "safecol/errors.hpp"
#include "safecol/extend.hpp"
#include "safecol/gadgets.hpp"

namespace safecol {

namespace {

// Propriety checked straight from the edge list, independent of is_proper_colouring.
bool extends_properly(const CycleColouring& c, const NearTriangulation& g, const FullColouring& f) {
  if (static_cast<int>(f.size()) != g.vertex_count()) return false;
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (f[i] < 1 || f[i] > c.k()) return false;
    if (i < g.boundary_len() && f[i] != c.colours()[i]) return false;
  }
  for (const auto& e : g.edges()) {
    if (f[e[0]] == f[e[1]]) return false;
  }
  return true;
}

int distinct_colours(const CycleColouring& c) {
  std::set<Colour> s(c.colours().begin(), c.colours().end());
  return static_cast<int>(s.size());
}

std::string show(const CycleColouring& c) {
  std::ostringstream out;
  out << "k=" << c.k() << " (";
  for (std::size_t i = 0; i < c.colours().size(); ++i) out << (i ? "," : "") << c.colours()[i];
  out << ")";
  return out.str();
}

// Catalan numbers by the convolution recurrence.
std::vector<std::uint64_t> catalan_upto(int m) {
  std::vector<std::uint64_t> c(m + 1, 0);
  c[0] = 1;
  for (int i = 1; i <= m; ++i)
    for (int j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
  return c;
}

// Brown's count of triangulated disks with l = m + 3 boundary and n internal vertices:
// 2 (2m+3)! (4n+2m+1)! / ((m+2)! m! n! (3n+2m+3)!).
std::uint64_t brown_count(int l, int n) {
  using U = unsigned __int128;
  auto fact = [](int x) {
    U r = 1;
    for (int i = 2; i <= x; ++i) r *= static_cast<U>(i);
    return r;
  };
  const int m = l - 3;
  U num = 2 * fact(2 * m + 3) * fact(4 * n + 2 * m + 1);
  // Divide step by step to stay inside 128 bits.
  num /= fact(3 * n + 2 * m + 3);
  num /= fact(m + 2);
  num /= fact(m);
  num /= fact(n);
  return static_cast<std::uint64_t>(num);
}

class Check {
 public:
  Check() : start_(std::chrono::steady_clock::now()) {}

  void fail(const std::string& what) {
    if (failures_++ == 0) first_ = what;
  }

  CriterionResult done(const std::string& summary) {
    r_.pass = failures_ == 0;
    r_.detail = summary;
    if (failures_) r_.detail += "; " + std::to_string(failures_) + " failures, first: " + first_;
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return r_;
  }

 private:
  CriterionResult r_;
  std::chrono::steady_clock::time_point start_;
  long failures_ = 0;
  std::string first_;
};

CriterionResult bad_iff_not_good() {
  Check chk;
  long classes = 0;
  for (int l = 3; l <= 8; ++l) {
    for_each_colouring(l, 5, true, [&](const CycleColouring& c) {
      ++classes;
      if (is_bad(c).has_value() == is_good(c).has_value()) chk.fail(show(c));
    });
  }
  return chk.done(std::to_string(classes) + " classes");
}

CriterionResult bad_gadgets() {
  Check chk;
  long bad = 0;
  for (int k = 4; k <= 5; ++k) {
    for (int l = 3; l <= 7; ++l) {
      for_each_colouring(l, k, true, [&](const CycleColouring& c) {
        auto w = is_bad(c);
        if (!w) return;
        ++bad;
        if (!check_bad_witness(c, *w)) chk.fail("witness rejected for " + show(c));
        try {
          Gadget g = gadget_for(c, *w);
          NearTriangulation checked = validate_near_triangulation(g.graph.raw());
          if (checked.boundary_len() != l) chk.fail("gadget boundary mismatch for " + show(c));
          if (brute_force_extend(c, checked)) chk.fail("gadget extends for " + show(c));
        } catch (const std::exception& e) {
          chk.fail(show(c) + ": " + e.what());
        }
      });
    }
  }
  return chk.done(std::to_string(bad) + " bad classes");
}

CriterionResult good_extends() {
  Check chk;
  long runs = 0;
  for (int l = 3; l <= 6; ++l) {
    std::vector<NearTriangulation> graphs;
    for (int n = 0; n <= 3; ++n) {
      auto part = enumerate_disk_triangulations(l, n, true);
      graphs.insert(graphs.end(), part.begin(), part.end());
    }
    for_each_colouring(l, 5, true, [&](const CycleColouring& c) {
      if (classify(c).kind != VerdictKind::kGood) return;
      for (const auto& g : graphs) {
        ++runs;
        try {
          FullColouring f = theorem_main_extend(c, g);
          if (!extends_properly(c, g, f)) chk.fail("improper output for " + show(c));
        } catch (const std::exception& e) {
          chk.fail(show(c) + ": " + e.what());
        }
        if (!brute_force_extend(c, g)) chk.fail("oracle finds no extension for " + show(c));
      }
    });
  }
  return chk.done(std::to_string(runs) + " (colouring, graph) pairs");
}

CriterionResult short_cycles_good() {
  Check chk;
  long checked = 0;
  for (int k = 5; k <= 7; ++k) {
    for (int l = 3; l <= 2 * k - 5; ++l) {
      for_each_colouring(l, k, true, [&](const CycleColouring& c) {
        if (distinct_colours(c) > k - 1) return;
        ++checked;
        if (classify(c).kind != VerdictKind::kGood) chk.fail("not good: " + show(c));
      });
    }
    std::vector<Colour> f(2 * k - 4);
    for (int i = 1; i <= k - 3; ++i) f[i - 1] = f[k - 2 + i - 1] = i;
    f[k - 3] = k - 2;
    f[2 * k - 5] = k - 1;
    CycleColouring c(k, f);
    Verdict v = classify(c);
    if (v.kind != VerdictKind::kBad || !v.bad || v.bad->condition != 2)
      chk.fail("expected bad by condition 2: " + show(c));
  }
  return chk.done(std::to_string(checked) + " classes");
}

CriterionResult four_colours() {
  Check chk;
  long seen = 0;
  for (int l = 3; l <= 8; ++l) {
    for_each_colouring(l, 4, false, [&](const CycleColouring& c) {
      ++seen;
      bool bad = is_bad(c).has_value();
      if (l == 3 && bad) chk.fail("bad triangle " + show(c));
      if (l > 3 && !bad) chk.fail("not bad " + show(c));
    });
  }
  return chk.done(std::to_string(seen) + " colourings");
}

CriterionResult enumerator_counts() {
  Check chk;
  auto cat = catalan_upto(6);
  long graphs = 0;
  for (int l = 3; l <= 8; ++l) {
    for (int n = 0; n <= 3; ++n) {
      std::uint64_t expect = n == 0 ? cat[l - 2] : brown_count(l, n);
      std::set<std::vector<std::int32_t>> codes;
      std::uint64_t emitted = 0;
      for_each_disk_triangulation(l, n, false, [&](const NearTriangulation& g) {
        ++emitted;
        const int v = g.vertex_count(), e = static_cast<int>(g.edges().size()),
                  t = static_cast<int>(g.triangles().size());
        if (v != l + n || e != 2 * l + 3 * n - 3 || t != l + 2 * n - 2 || v - e + (t + 1) != 2)
          chk.fail("Euler counts off at l=" + std::to_string(l) + " n=" + std::to_string(n));
        try {
          validate_near_triangulation(g.raw());
        } catch (const std::exception& ex) {
          chk.fail(std::string("invalid graph: ") + ex.what());
        }
        codes.insert(canonical_code(g));
      });
      graphs += static_cast<long>(emitted);
      std::string at = " at l=" + std::to_string(l) + " n=" + std::to_string(n);
      if (codes.size() != emitted) chk.fail("duplicate graphs" + at);
      if (emitted != expect)
        chk.fail("count " + std::to_string(emitted) + " != " + std::to_string(expect) + at);
    }
  }
  return chk.done(std::to_string(graphs) + " graphs");
}

CriterionResult neither_probe() {
  Check chk;
  CycleColouring c(6, {1, 2, 3, 4, 1, 2, 3, 4});
  if (classify(c).kind != VerdictKind::kNeither) chk.fail("verdict is not neither");
  ProbeVerdict p = safety_probe(c, 3);
  std::uint64_t scanned = std::accumulate(p.scanned.begin(), p.scanned.end(), std::uint64_t{0});
  std::string outcome = p.counterexample
                            ? "counterexample with n=" + std::to_string(p.counterexample->internal_count())
                            : "no counterexample up to n=3";
  return chk.done(outcome + ", " + std::to_string(scanned) + " graphs scanned");
}

CriterionResult equivalence_invariance() {
  Check chk;
  std::mt19937 rng(20261018);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int sample = 0; sample < 1000; ++sample) {
    const int k = pick(4, 6), l = pick(3, 10);
    std::vector<Colour> f(l);
    do {
      for (int i = 0; i < l; ++i) {
        do f[i] = pick(1, k);
        while (i > 0 && f[i] == f[i - 1]);
      }
    } while (f[l - 1] == f[0]);
    CycleColouring c(k, f);
    Verdict base = classify(c);
    auto condition = [](const Verdict& v) {
      return v.bad ? v.bad->condition : v.good ? v.good->condition : 0;
    };
    for (int t = 0; t < 10; ++t) {
      std::vector<Colour> perm(k + 1, 0);
      std::iota(perm.begin() + 1, perm.end(), 1);
      std::shuffle(perm.begin() + 1, perm.end(), rng);
      CycleColouring d = transform(c, pick(0, l - 1), pick(0, 1) == 1, perm);
      Verdict v = classify(d);
      if (v.kind != base.kind || condition(v) != condition(base))
        chk.fail(show(c) + " vs " + show(d));
    }
  }
  return chk.done("1000 colourings x 10 transforms");
}

}  // namespace

std::vector<Criterion> acceptance_criteria() {
  return {
      {1, "k=5 bad/good dichotomy, l=3..8", bad_iff_not_good},
      {2, "gadgets block extension, k=4,5 l=3..7", bad_gadgets},
      {3, "constructive extension of good colourings, k=5 l=3..6 n<=3", good_extends},
      {4, "short cycles with a spare colour are good; 2k-4 example is bad", short_cycles_good},
      {5, "k=4: all cycles l=4..8 bad, triangles not bad", four_colours},
      {6, "disk triangulation counts, Euler counts, no duplicates", enumerator_counts},
      {7, "k=6 (1,2,3,4,1,2,3,4) is neither; probe to n=3 completes", neither_probe},
      {8, "verdicts invariant under rotation, reflection, colour permutation", equivalence_invariance},
  };
}

std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (const auto& c : acceptance_criteria()) {
    out.push_back(c.run());
    out.back().id = c.id;
    out.back().name = c.name;
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace safecol
