#include "safecol/classify.hpp"

#include <algorithm>

namespace safecol {

namespace {

// closed[i][j] = F[i,j] over 0-based positions.
class ArcTable {
 public:
  explicit ArcTable(const CycleColouring& c) : l_(c.size()), closed_(l_ * l_, 0) {
    for (int i = 0; i < l_; ++i) {
      ColourSet s = 0;
      for (int t = 0; t < l_; ++t) {
        int j = (i + t) % l_;
        s |= colour_bit(c[j]);
        closed_[i * l_ + j] = s;
      }
    }
  }
  ColourSet closed(int i, int j) const { return closed_[i * l_ + j]; }
  // F[i,j); empty when i == j.
  ColourSet half_open(int i, int j) const {
    return i == j ? 0 : closed(i, (j + l_ - 1) % l_);
  }

 private:
  int l_;
  std::vector<ColourSet> closed_;
};

// Ascending (k-4)-subsets of {1..k} as bitmasks, in lexicographic order of their members.
std::vector<ColourSet> discard_sets(int k) {
  const int size = k - 4;
  std::vector<ColourSet> out;
  std::vector<int> pick(size);
  for (int i = 0; i < size; ++i) pick[i] = i + 1;
  while (true) {
    ColourSet s = 0;
    for (int x : pick) s |= colour_bit(x);
    out.push_back(s);
    int i = size - 1;
    while (i >= 0 && pick[i] == k - size + i + 1) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::vector<int> one_based(std::initializer_list<int> xs) {
  std::vector<int> out;
  for (int x : xs) out.push_back(x + 1);
  return out;
}

std::vector<Colour> first_occurrence(std::span<const Colour> seq) {
  std::vector<Colour> map(kMaxPalette + 1, 0);
  std::vector<Colour> out;
  out.reserve(seq.size());
  Colour next = 1;
  for (Colour c : seq) {
    if (!map[c]) map[c] = next++;
    out.push_back(map[c]);
  }
  return out;
}

std::vector<Colour> dihedral(const CycleColouring& c, int shift, bool reflect) {
  const int l = c.size();
  std::vector<Colour> out(l);
  for (int t = 0; t < l; ++t) out[t] = reflect ? c[shift - t] : c[shift + t];
  return out;
}

}  // namespace

std::optional<BadWitness> is_bad(const CycleColouring& c) {
  const int k = c.k(), l = c.size();
  if (k < 4) throw PreconditionError("bad colourings are defined for k >= 4");
  if (set_size(c.used()) == k) return BadWitness{1, {}};
  ArcTable f(c);
  for (int p = 0; p < l; ++p) {
    for (int q = p + 1; q < l; ++q) {
      if (set_size(f.closed(p, q) & f.closed(q, p)) >= k - 1) return BadWitness{2, one_based({p, q})};
    }
  }
  for (int p = 0; p < l; ++p) {
    for (int q = p + 1; q < l; ++q) {
      const ColourSet pq = f.closed(p, q);
      for (int r = q + 1; r < l; ++r) {
        if (set_size(pq & f.closed(q, r) & f.closed(r, p)) >= k - 2) {
          return BadWitness{3, one_based({p, q, r})};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<GoodWitness> is_good(const CycleColouring& c) {
  const int k = c.k(), l = c.size();
  if (k < 5) throw PreconditionError("good colourings are defined for k >= 5");
  const int used = set_size(c.used());
  if (used <= k - 3) return GoodWitness{1, {}, {}};
  if (used > k - 1) return std::nullopt;
  ArcTable f(c);
  for (ColourSet a : discard_sets(k)) {
    const ColourSet keep = ~a;
    if (used == k - 2) {
      for (int p = 0; p < l; ++p) {
        for (int q = p + 1; q < l; ++q) {
          if (set_size(f.half_open(p, q) & keep) == 1 && set_size(f.half_open(q, p) & keep) == 1) {
            return GoodWitness{2, one_based({p, q}), set_members(a)};
          }
        }
      }
    } else {
      for (int p = 0; p < l; ++p) {
        for (int q = p + 1; q < l; ++q) {
          if (set_size(f.half_open(p, q) & keep) != 1) continue;
          for (int r = q + 1; r < l; ++r) {
            if (set_size(f.half_open(q, r) & keep) == 1 && set_size(f.half_open(r, p) & keep) == 1) {
              return GoodWitness{3, one_based({p, q, r}), set_members(a)};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool check_bad_witness(const CycleColouring& c, const BadWitness& w) {
  const int k = c.k(), l = c.size();
  const auto& ix = w.indices;
  for (std::size_t i = 0; i < ix.size(); ++i) {
    if (ix[i] < 1 || ix[i] > l || (i > 0 && ix[i] <= ix[i - 1])) return false;
  }
  auto F = [&](int i, int j) { return arc_colour_set(c, ArcInterval::closed(i - 1, j - 1)); };
  switch (w.condition) {
    case 1:
      return ix.empty() && set_size(c.used()) == k;
    case 2:
      return ix.size() == 2 && set_size(F(ix[0], ix[1]) & F(ix[1], ix[0])) >= k - 1;
    case 3:
      return ix.size() == 3 &&
             set_size(F(ix[0], ix[1]) & F(ix[1], ix[2]) & F(ix[2], ix[0])) >= k - 2;
    default:
      return false;
  }
}

bool check_good_witness(const CycleColouring& c, const GoodWitness& w) {
  const int k = c.k(), l = c.size();
  const int used = set_size(c.used());
  const auto& ix = w.indices;
  for (std::size_t i = 0; i < ix.size(); ++i) {
    if (ix[i] < 1 || ix[i] > l || (i > 0 && ix[i] <= ix[i - 1])) return false;
  }
  if (w.condition == 1) return ix.empty() && used <= k - 3;
  ColourSet a = 0;
  for (Colour x : w.A) {
    if (x < 1 || x > k) return false;
    a |= colour_bit(x);
  }
  if (set_size(a) != k - 4 || static_cast<int>(w.A.size()) != k - 4) return false;
  auto rest = [&](int i, int j) {
    return set_size(arc_colour_set(c, ArcInterval::half_open(i - 1, j - 1)) & ~a);
  };
  if (w.condition == 2) {
    return ix.size() == 2 && used == k - 2 && rest(ix[0], ix[1]) == 1 && rest(ix[1], ix[0]) == 1;
  }
  if (w.condition == 3) {
    return ix.size() == 3 && used == k - 1 && rest(ix[0], ix[1]) == 1 &&
           rest(ix[1], ix[2]) == 1 && rest(ix[2], ix[0]) == 1;
  }
  return false;
}

Verdict classify(const CycleColouring& c) {
  Verdict v;
  v.bad = is_bad(c);
  if (v.bad) {
    v.kind = VerdictKind::kBad;
    return v;
  }
  if (c.k() >= 5) {
    v.good = is_good(c);
    if (v.good) v.kind = VerdictKind::kGood;
  }
  return v;
}

const char* to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::kBad: return "bad";
    case VerdictKind::kGood: return "good";
    case VerdictKind::kNeither: return "neither";
  }
  return "neither";
}

CycleColouring canonical_colouring(const CycleColouring& c) {
  std::vector<Colour> best;
  for (int s = 0; s < c.size(); ++s) {
    for (bool reflect : {false, true}) {
      auto cand = first_occurrence(dihedral(c, s, reflect));
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  return CycleColouring(c.k(), std::move(best));
}

EquivalenceClass canonicalize(const CycleColouring& c) {
  const int l = c.size(), k = c.k();
  const auto pattern = first_occurrence(c.colours());
  std::uint64_t stabilising = 0;
  for (int s = 0; s < l; ++s) {
    for (bool reflect : {false, true}) {
      if (first_occurrence(dihedral(c, s, reflect)) == pattern) ++stabilising;
    }
  }
  // Each stabilising symmetry fixes the used colours and permutes the rest freely, so
  // |orbit| = 2l * k! / (stabilising * (k-m)!) = 2l * k!/(k-m)! / stabilising.
  const int m = set_size(c.used());
  std::uint64_t falling = 1;
  for (int i = 0; i < m; ++i) falling *= static_cast<std::uint64_t>(k - i);
  return {canonical_colouring(c), 2 * static_cast<std::uint64_t>(l) * falling / stabilising};
}

CycleColouring transform(const CycleColouring& c, int shift, bool reflect,
                         const std::vector<Colour>& perm) {
  auto seq = dihedral(c, shift, reflect);
  for (Colour& x : seq) x = perm.at(x);
  return CycleColouring(c.k(), std::move(seq));
}

void for_each_colouring(int l, int k, bool up_to_equivalence,
                        const std::function<void(const CycleColouring&)>& visit) {
  if (l < 3 || k < 1 || k > kMaxPalette) throw PreconditionError("need l >= 3 and 1 <= k <= 30");
  std::vector<Colour> seq(l, 0);
  // Restricted growth keeps only first-occurrence-labelled sequences when deduplicating.
  auto rec = [&](auto&& self, int pos, int max_used) -> void {
    if (pos == l) {
      if (seq[l - 1] == seq[0]) return;
      CycleColouring c(k, seq);
      if (up_to_equivalence && !(canonical_colouring(c) == c)) return;
      visit(c);
      return;
    }
    const int top = up_to_equivalence ? std::min(k, max_used + 1) : k;
    for (Colour x = 1; x <= top; ++x) {
      if (pos > 0 && seq[pos - 1] == x) continue;
      seq[pos] = x;
      self(self, pos + 1, std::max(max_used, x));
    }
  };
  rec(rec, 0, 0);
}

std::vector<CycleColouring> enumerate_colourings(int l, int k, bool up_to_equivalence) {
  std::vector<CycleColouring> out;
  for_each_colouring(l, k, up_to_equivalence, [&](const CycleColouring& c) { out.push_back(c); });
  return out;
}

}  // namespace safecol
