#include "ooc/sequences.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace ooc {

bool extended_skolem_exists(int v, int k) {
  if (v < 1 || k < 1 || k > 2 * v + 1) return false;
  int r = v % 4;
  return ((r == 0 || r == 1) && k % 2 == 1) || ((r == 2 || r == 3) && k % 2 == 0);
}

bool near_skolem_exists(int v, int m) {
  if (v < 1 || m < 1 || m > v) return false;
  int r = v % 4;
  return ((r == 0 || r == 1) && m % 2 == 1) || ((r == 2 || r == 3) && m % 2 == 0);
}

bool langford_exists(int v, int d) {
  if (v < 1 || d < 1) return false;
  if (v < 2 * d - 1) return false;
  int r = v % 4;
  return ((r == 0 || r == 1) && d % 2 == 1) || ((r == 0 || r == 3) && d % 2 == 0);
}

bool triple_partition_exists(int s, int d) {
  if (s < 1 || d < 1) return false;
  int sr = s % 4, dr = d % 2;
  bool cls = (sr == 2 && dr == 0) || (sr == 2 && dr == 1) || (sr == 1 && dr == 0) ||
             (sr == 3 && dr == 1);
  return cls && (int64_t)s * (s - 2 * d + 1) + 2 >= 0;
}

bool frame_starter_exists(int n, int g) {
  if (g != 2 || n < 4 || n % 2 != 0) return false;
  int r = n % 8;
  return r == 0 || r == 2;
}

namespace {

// Cell-driven backtracking. The smallest free cell is the lower element of
// its pair and the largest free cell is the upper element of its own; branch
// on whichever end admits fewer difference choices (fail-first). The caller
// retries with reshuffled difference orders under a node budget; pair
// systems have plentiful solutions, so some restart lands quickly.
bool place_pairs(std::vector<char>& free_slot, std::vector<int>& diffs_desc, int placed,
                 std::map<int, std::pair<int, int>>& result, int64_t& nodes) {
  if (placed == (int)diffs_desc.size()) return true;
  if (--nodes <= 0) return false;
  int lo = -1, hi = -1;
  for (int x = 1; x < (int)free_slot.size(); ++x)
    if (free_slot[x]) {
      lo = x;
      break;
    }
  for (int x = (int)free_slot.size() - 1; x >= 1; --x)
    if (free_slot[x]) {
      hi = x;
      break;
    }
  if (lo < 0) return false;
  int lo_opts = 0, hi_opts = 0;
  for (int dif : diffs_desc) {
    if (dif == 0) continue;
    if (lo + dif < (int)free_slot.size() && free_slot[lo + dif]) ++lo_opts;
    if (hi - dif >= 1 && free_slot[hi - dif]) ++hi_opts;
  }
  const bool use_lo = lo_opts <= hi_opts;
  const int anchor = use_lo ? lo : hi;
  free_slot[anchor] = 0;
  for (int& dif : diffs_desc) {
    if (dif == 0) continue;  // already used
    int other = use_lo ? anchor + dif : anchor - dif;
    if (other < 1 || other >= (int)free_slot.size() || !free_slot[other]) continue;
    int saved = dif;
    free_slot[other] = 0;
    dif = 0;
    result[saved] = use_lo ? std::pair<int, int>{anchor, other}
                           : std::pair<int, int>{other, anchor};
    if (place_pairs(free_slot, diffs_desc, placed + 1, result, nodes)) return true;
    if (nodes <= 0) {
      result.erase(saved);
      dif = saved;
      free_slot[other] = 1;
      break;
    }
    result.erase(saved);
    dif = saved;
    free_slot[other] = 1;
  }
  free_slot[anchor] = 1;
  return false;
}

SkolemSequence solve_pairs(SkolemFlavor flavor, int order, int param,
                           const std::vector<int>& ground, const std::vector<int>& diffs,
                           const std::map<int, std::pair<int, int>>& pins) {
  int maxv = ground.empty() ? 0 : *std::max_element(ground.begin(), ground.end());
  std::vector<char> free_slot(maxv + 2, 0);
  for (int x : ground) free_slot[x] = 1;
  std::vector<int> rest;
  for (int dif : diffs)
    if (!pins.count(dif)) rest.push_back(dif);
  std::sort(rest.rbegin(), rest.rend());
  bool pins_ok = true;
  for (auto& [dif, ab] : pins) {
    auto [a, b] = ab;
    if (a < 1 || b >= (int)free_slot.size() || !free_slot[a] || !free_slot[b] || b - a != dif)
      pins_ok = false;
  }
  if (!pins_ok) fail(Errc::NotExists, "pinned pair conflicts with the ground set");
  std::map<int, std::pair<int, int>> placed;
  bool solved = false;
  std::mt19937 rng(12345);
  for (int attempt = 0; attempt < 400 && !solved; ++attempt) {
    std::vector<char> cells = free_slot;
    placed.clear();
    for (auto& [dif, ab] : pins) {
      cells[ab.first] = cells[ab.second] = 0;
      placed[dif] = ab;
    }
    std::vector<int> order = rest;
    if (attempt > 0) std::shuffle(order.begin(), order.end(), rng);
    int64_t nodes = attempt == 0 ? 400000 : 150000;
    solved = place_pairs(cells, order, 0, placed, nodes);
  }
  if (!solved) fail(Errc::NotExists, "pair system solver exhausted");
  SkolemSequence s;
  s.flavor = flavor;
  s.order = order;
  s.param = param;
  for (int dif : diffs) s.pairs.push_back(placed.at(dif));
  if (!valid_sequence(s)) fail(Errc::VerifyFailed, "pair system validator rejected output");
  return s;
}

}  // namespace

SkolemSequence extended_skolem(int v, int k) {
  if (!extended_skolem_exists(v, k)) fail(Errc::NotExists, "no extended pair system here");
  std::vector<int> ground, diffs(v);
  for (int x = 1; x <= 2 * v + 1; ++x)
    if (x != k) ground.push_back(x);
  std::iota(diffs.begin(), diffs.end(), 1);
  return solve_pairs(SkolemFlavor::Extended, v, k, ground, diffs, {});
}

SkolemSequence extended_skolem_pinned(int v, int k, std::pair<int, int> pin) {
  if (!extended_skolem_exists(v, k)) fail(Errc::NotExists, "no extended pair system here");
  int dif = pin.second - pin.first;
  if (dif < 1 || dif > v || pin.first == k || pin.second == k)
    fail(Errc::NotExists, "pin incompatible with parameters");
  std::vector<int> ground, diffs(v);
  for (int x = 1; x <= 2 * v + 1; ++x)
    if (x != k) ground.push_back(x);
  std::iota(diffs.begin(), diffs.end(), 1);
  return solve_pairs(SkolemFlavor::Extended, v, k, ground, diffs, {{dif, pin}});
}

SkolemSequence near_skolem(int v, int m) {
  if (!near_skolem_exists(v, m)) fail(Errc::NotExists, "no near pair system here");
  std::vector<int> ground, diffs;
  for (int x = 1; x <= 2 * v - 2; ++x) ground.push_back(x);
  for (int d = 1; d <= v; ++d)
    if (d != m) diffs.push_back(d);
  return solve_pairs(SkolemFlavor::Near, v, m, ground, diffs, {});
}

SkolemSequence langford(int v, int d) {
  if (!langford_exists(v, d)) fail(Errc::NotExists, "no Langford pair system here");
  std::vector<int> ground, diffs;
  for (int x = 1; x <= 2 * v; ++x) ground.push_back(x);
  for (int t = d; t <= d + v - 1; ++t) diffs.push_back(t);
  return solve_pairs(SkolemFlavor::Langford, v, d, ground, diffs, {});
}

namespace {

bool place_triples(std::vector<char>& free_slot, int placed, int target,
                   std::vector<std::array<int, 3>>& out) {
  if (placed == target) return true;
  int a = -1;
  for (int x = 0; x < (int)free_slot.size(); ++x)
    if (free_slot[x]) {
      a = x;
      break;
    }
  if (a < 0) return false;
  free_slot[a] = 0;
  for (int b = a + 1; b < (int)free_slot.size(); ++b) {
    if (!free_slot[b]) continue;
    int c = a + b;
    if (c >= (int)free_slot.size() || !free_slot[c] || c == b) continue;
    free_slot[b] = free_slot[c] = 0;
    out.push_back({a, b, c});
    if (place_triples(free_slot, placed + 1, target, out)) return true;
    out.pop_back();
    free_slot[b] = free_slot[c] = 1;
  }
  free_slot[a] = 1;
  return false;
}

}  // namespace

SkolemSequence triple_partition(int s, int d) {
  if (!triple_partition_exists(s, d)) fail(Errc::NotExists, "no triple partition here");
  std::vector<char> free_slot(d + 3 * s + 1, 0);
  for (int x = d; x <= d + 3 * s; ++x) free_slot[x] = 1;
  free_slot[d + 3 * s - 1] = 0;
  std::vector<std::array<int, 3>> triples;
  if (!place_triples(free_slot, 0, s, triples)) fail(Errc::NotExists, "triple solver exhausted");
  SkolemSequence out;
  out.flavor = SkolemFlavor::TriplePartition;
  out.order = s;
  out.param = d;
  out.triples = triples;
  if (!valid_sequence(out)) fail(Errc::VerifyFailed, "triple validator rejected output");
  return out;
}

namespace {

bool place_starter(int n, std::vector<char>& free_elem, std::vector<char>& free_diff,
                   std::vector<std::pair<int, int>>& out, int remaining) {
  if (remaining == 0) return true;
  int x = -1;
  for (int e = 0; e < n; ++e)
    if (free_elem[e]) {
      x = e;
      break;
    }
  if (x < 0) return false;
  free_elem[x] = 0;
  for (int y = 0; y < n; ++y) {
    if (!free_elem[y]) continue;
    int d1 = (int)imod(x - y, n), d2 = (int)imod(y - x, n);
    if (!free_diff[d1] || !free_diff[d2]) continue;
    free_elem[y] = 0;
    free_diff[d1] = 0;
    if (d2 != d1) free_diff[d2] = 0;
    out.push_back({x, y});
    if (place_starter(n, free_elem, free_diff, out, remaining - 1)) return true;
    out.pop_back();
    free_elem[y] = 1;
    free_diff[d1] = 1;
    free_diff[d2] = 1;
  }
  free_elem[x] = 1;
  return false;
}

}  // namespace

FrameStarter frame_starter(int n, int g) {
  if (g != 2) fail(Errc::UnsupportedParams, "only order-2 subgroups supported");
  if (!frame_starter_exists(n, g)) fail(Errc::NotExists, "no frame starter for this n");
  std::vector<char> free_elem(n, 1), free_diff(n, 1);
  free_elem[0] = free_elem[n / 2] = 0;
  free_diff[0] = free_diff[n / 2] = 0;
  std::vector<std::pair<int, int>> pairs;
  if (!place_starter(n, free_elem, free_diff, pairs, (n - 2) / 2))
    fail(Errc::NotExists, "frame starter solver exhausted");
  FrameStarter f;
  f.n = n;
  f.g = g;
  f.pairs = pairs;
  if (!valid_starter(f)) fail(Errc::VerifyFailed, "frame starter validator rejected output");
  return f;
}

bool valid_sequence(const SkolemSequence& s) {
  auto distinct_cover = [](const std::vector<int>& values, const std::vector<int>& ground) {
    std::multiset<int> a(values.begin(), values.end()), b(ground.begin(), ground.end());
    return a == b;
  };
  switch (s.flavor) {
    case SkolemFlavor::Extended: {
      if ((int)s.pairs.size() != s.order) return false;
      std::vector<int> vals, ground;
      for (int i = 0; i < s.order; ++i) {
        auto [a, b] = s.pairs[i];
        if (b - a != i + 1) return false;
        vals.push_back(a);
        vals.push_back(b);
      }
      for (int x = 1; x <= 2 * s.order + 1; ++x)
        if (x != s.param) ground.push_back(x);
      return distinct_cover(vals, ground);
    }
    case SkolemFlavor::Near: {
      if ((int)s.pairs.size() != s.order - 1) return false;
      std::vector<int> vals, ground, diffs, want;
      for (auto [a, b] : s.pairs) {
        vals.push_back(a);
        vals.push_back(b);
        diffs.push_back(b - a);
      }
      for (int x = 1; x <= 2 * s.order - 2; ++x) ground.push_back(x);
      for (int d = 1; d <= s.order; ++d)
        if (d != s.param) want.push_back(d);
      return distinct_cover(vals, ground) && distinct_cover(diffs, want);
    }
    case SkolemFlavor::Langford: {
      if ((int)s.pairs.size() != s.order) return false;
      std::vector<int> vals, ground, diffs, want;
      for (auto [a, b] : s.pairs) {
        vals.push_back(a);
        vals.push_back(b);
        diffs.push_back(b - a);
      }
      for (int x = 1; x <= 2 * s.order; ++x) ground.push_back(x);
      for (int d = s.param; d <= s.param + s.order - 1; ++d) want.push_back(d);
      return distinct_cover(vals, ground) && distinct_cover(diffs, want);
    }
    case SkolemFlavor::TriplePartition: {
      if ((int)s.triples.size() != s.order) return false;
      std::vector<int> vals, ground;
      for (auto& t : s.triples) {
        if (t[0] + t[1] != t[2]) return false;
        vals.insert(vals.end(), t.begin(), t.end());
      }
      for (int x = s.param; x <= s.param + 3 * s.order; ++x)
        if (x != s.param + 3 * s.order - 1) ground.push_back(x);
      return distinct_cover(vals, ground);
    }
  }
  return false;
}

bool valid_starter(const FrameStarter& f) {
  if ((int)f.pairs.size() != (f.n - 2) / 2) return false;
  std::set<int> elems, diffs;
  for (auto [x, y] : f.pairs) {
    elems.insert(x);
    elems.insert(y);
    diffs.insert((int)imod(x - y, f.n));
    diffs.insert((int)imod(y - x, f.n));
  }
  std::set<int> want;
  for (int e = 0; e < f.n; ++e)
    if (e != 0 && e != f.n / 2) want.insert(e);
  return elems == want && diffs == want;
}

}  // namespace ooc
