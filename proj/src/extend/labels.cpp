#include "safecol/labels.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace safecol {

ColourSet s_set(int i, int k) {
  ColourSet s = colour_bit(i);
  for (Colour c = 5; c <= k; ++c) s |= colour_bit(c);
  return s;
}

ColourSet type_list(int i) {
  return (colour_bit(1) | colour_bit(2) | colour_bit(3) | colour_bit(4)) & ~colour_bit(i);
}

bool has_type(ColourSet list, int i, int k) {
  if (list == type_list(i)) return true;
  return set_size(list) == 1 && (list & ~s_set(i, k)) == 0;
}

PairSet make_pairs(std::vector<ColourPair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

bool contains(const PairSet& s, ColourPair p) { return std::binary_search(s.begin(), s.end(), p); }

bool contains_all(const PairSet& s, std::initializer_list<ColourPair> ps) {
  return std::all_of(ps.begin(), ps.end(), [&](ColourPair p) { return contains(s, p); });
}

bool within(const PairSet& s, ColourSet first, ColourSet second) {
  return std::all_of(s.begin(), s.end(), [&](ColourPair p) {
    return (first & colour_bit(p.first)) && (second & colour_bit(p.second));
  });
}

namespace {

Colour swap_one(Colour x, Colour a, Colour b) { return x == a ? b : x == b ? a : x; }

}  // namespace

PairSet swap_colours(const PairSet& s, Colour a, Colour b) {
  std::vector<ColourPair> out;
  for (auto p : s) out.push_back({swap_one(p.first, a, b), swap_one(p.second, a, b)});
  return make_pairs(std::move(out));
}

PairSet close_34(const PairSet& s) {
  std::vector<ColourPair> out(s.begin(), s.end());
  for (auto p : s) out.push_back({swap_one(p.first, 3, 4), swap_one(p.second, 3, 4)});
  return make_pairs(std::move(out));
}

std::string to_string(const PairSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += "(c" + std::to_string(s[i].first) + ",c" + std::to_string(s[i].second) + ")";
  }
  return out + "}";
}

const char* to_string(LabelFamily f) {
  switch (f) {
    case LabelFamily::kL12: return "L12";
    case LabelFamily::kL13: return "L13";
    case LabelFamily::kL32: return "L32";
  }
  return "L12";
}

namespace {

std::vector<EdgeLabel> generate_l12(int k) {
  std::vector<EdgeLabel> out;
  const auto s1 = set_members(s_set(1, k));
  const auto s2 = set_members(s_set(2, k));
  auto add = [&](int shape, Colour a, Colour b, Colour x, std::vector<ColourPair> ps) {
    out.push_back({LabelFamily::kL12, shape, a, b, 0, x, make_pairs(std::move(ps))});
  };
  for (Colour a : s1) {
    for (Colour b : s2) {
      if (a != b) add(1, a, b, 0, {{a, b}});
    }
  }
  for (Colour a : s1) {
    for (Colour x : {3, 4}) add(2, a, 0, x, {{a, x}});
  }
  for (Colour x : {3, 4}) {
    for (Colour b : s2) add(3, 0, b, x, {{x, b}});
  }
  for (Colour x : {3, 4}) add(4, 0, 0, x, {{2, x}, {7 - x, x}});
  for (Colour x : {3, 4}) add(5, 0, 0, x, {{x, 1}, {x, 7 - x}});
  for (Colour x : {3, 4}) add(6, 0, 0, x, {{2, x}, {x, 1}});
  return out;
}

std::vector<EdgeLabel> generate_derived(int k, LabelFamily f) {
  std::vector<EdgeLabel> out;
  for (const auto& l : generate_l12(k)) {
    EdgeLabel d = f == LabelFamily::kL13 ? to_l13(l) : to_l32(l);
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const EdgeLabel& e) { return e.pairs == d.pairs; });
    if (!seen) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

EdgeLabel to_l13(const EdgeLabel& l) {
  EdgeLabel out{LabelFamily::kL13, l.shape, 0, 0, 0, 0,
                swap_colours(close_34(l.pairs), 2, 3)};
  if (l.shape == 1 || l.shape == 2) out.a = l.a;
  if (l.shape == 1 || l.shape == 3) out.c = swap_one(l.b, 2, 3);
  return out;
}

EdgeLabel to_l32(const EdgeLabel& l) {
  EdgeLabel out{LabelFamily::kL32, l.shape, 0, 0, 0, 0,
                swap_colours(close_34(l.pairs), 1, 3)};
  if (l.shape == 1 || l.shape == 2) out.c = swap_one(l.a, 1, 3);
  if (l.shape == 1 || l.shape == 3) out.b = l.b;
  return out;
}

const std::vector<EdgeLabel>& family_members(LabelFamily f, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<EdgeLabel>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::pair{static_cast<int>(f), k};
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, f == LabelFamily::kL12 ? generate_l12(k) : generate_derived(k, f))
             .first;
  }
  return it->second;
}

std::optional<EdgeLabel> identify(const PairSet& pairs, LabelFamily f, int k) {
  for (const auto& l : family_members(f, k)) {
    if (l.pairs == pairs) return l;
  }
  return std::nullopt;
}

std::optional<EdgeLabel> l12_for_l13(const PairSet& l13, int k) {
  for (const auto& l : family_members(LabelFamily::kL12, k)) {
    if (to_l13(l).pairs == l13) return l;
  }
  return std::nullopt;
}

}  // namespace safecol
