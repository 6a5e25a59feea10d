#include "ooc/search.hpp"

#include <algorithm>

#include "ooc/bounds.hpp"
#include "ooc/sequences.hpp"
#include "ooc/verify.hpp"

namespace ooc {

namespace {

struct SlotRef {
  int i, j, d;
};

// Shared backtracking core over ordered difference slots.
struct Engine {
  int rows, n;
  std::vector<Slot> req;     // Forbidden slots are never touched; skips turn slots Forbidden
  std::vector<uint8_t> cov;  // 0/1 per ordered slot
  int64_t remaining_required = 0;
  int64_t free_instances = 0;  // uncovered, not forbidden
  int64_t nodes = 0, budget = 0;
  int64_t target = 0;
  int64_t skip_budget = 0, skipped = 0;
  bool normalize = true;
  std::vector<Codeword> cur;

  // maximize mode
  bool maximize = false;
  int64_t best_size = -1, upper = -1;
  std::vector<Codeword> best;

  size_t idx(int i, int j, int d) const { return ((size_t)i * rows + j) * n + d; }

  void init(const CoverProblem& p) {
    rows = p.rows;
    n = p.modulus;
    req = p.req;
    cov.assign(req.size(), 0);
    budget = p.node_budget;
    normalize = p.normalize_shift;
    target = p.target_blocks;
    remaining_required = 0;
    free_instances = 0;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < rows; ++j)
        for (int d = 0; d < n; ++d) {
          Slot s = req[idx(i, j, d)];
          if (s == Slot::Required) ++remaining_required, ++free_instances;
          if (s == Slot::Optional) ++free_instances;
        }
  }

  // The six ordered differences of a block; false if two coincide or any
  // hits a forbidden/covered slot.
  bool block_slots(const Codeword& b, std::array<size_t, 6>& out) const {
    int t = 0;
    const auto& pts = b.points();
    for (size_t a = 0; a < pts.size(); ++a)
      for (size_t c = 0; c < pts.size(); ++c) {
        if (a == c) continue;
        int d = (int)imod(pts[a].col - pts[c].col, n);
        size_t s = idx(pts[a].row, pts[c].row, d);
        if (req[s] == Slot::Forbidden || cov[s]) return false;
        out[t++] = s;
      }
    std::sort(out.begin(), out.end());
    for (int a = 1; a < 6; ++a)
      if (out[a] == out[a - 1]) return false;
    return true;
  }

  void place(const std::array<size_t, 6>& slots) {
    for (size_t s : slots) {
      cov[s] = 1;
      --free_instances;
      if (req[s] == Slot::Required) --remaining_required;
    }
  }
  void unplace(const std::array<size_t, 6>& slots) {
    for (size_t s : slots) {
      cov[s] = 0;
      ++free_instances;
      if (req[s] == Slot::Required) ++remaining_required;
    }
  }

  bool seed_pins(const std::vector<Codeword>& pins) {
    for (const Codeword& p : pins) {
      std::array<size_t, 6> slots;
      if (!block_slots(p, slots)) return false;
      place(slots);
      cur.push_back(p);
    }
    return true;
  }

  // First uncovered slot with i <= j at or after the hint, Required first
  // pass semantics folded into `want_required`.
  bool find_slot(size_t hint, bool required_only, SlotRef& out, size_t& pos) const {
    size_t total = (size_t)rows * rows * n;
    for (size_t s = hint; s < total; ++s) {
      int d = (int)(s % n);
      int j = (int)((s / n) % rows);
      int i = (int)(s / n / rows);
      if (j < i) continue;
      Slot r = req[s];
      if (r == Slot::Forbidden || cov[s]) continue;
      if (required_only && r != Slot::Required) continue;
      out = {i, j, d};
      pos = s;
      return true;
    }
    return false;
  }

  // Enumerates candidate blocks covering the slot, in lexicographic order.
  template <typename F>
  void candidates(const SlotRef& sl, F&& fn) const {
    for (int c1 = 0; c1 < n; ++c1) {
      int c2 = (int)imod(c1 - sl.d, n);
      Point p1{sl.i, c1}, p2{sl.j, c2};
      if (p1 == p2) continue;
      for (int r3 = 0; r3 < rows; ++r3)
        for (int c3 = 0; c3 < n; ++c3) {
          Point p3{r3, c3};
          if (p3 == p1 || p3 == p2) continue;
          if (normalize && std::min({c1, c2, c3}) != 0) continue;
          fn(Codeword(p1, p2, p3));
        }
    }
  }

  struct Done {};  // thrown on success in maximize early exit

  bool dfs_exact(size_t hint) {
    if ((int64_t)cur.size() == target) return remaining_required == 0;
    if (++nodes > budget) fail(Errc::BudgetExceeded, "cover search node budget exhausted");
    int64_t blocks_left = target - (int64_t)cur.size();
    if (free_instances < 6 * blocks_left) return false;
    if (remaining_required > 6 * blocks_left + (skip_budget - skipped)) return false;
    SlotRef sl;
    size_t pos;
    if (!find_slot(hint, true, sl, pos)) return false;  // blocks left but nothing required
    bool ok = false;
    candidates(sl, [&](const Codeword& b) {
      if (ok) return;
      std::array<size_t, 6> s6;
      if (!block_slots(b, s6)) return;
      place(s6);
      cur.push_back(b);
      if (dfs_exact(pos)) {
        ok = true;
        return;
      }
      cur.pop_back();
      unplace(s6);
    });
    if (ok) return true;
    // skip branch: commit to leaving this slot (and its mirror) uncovered
    if (skipped + 2 <= skip_budget) {
      size_t mir = idx(sl.j, sl.i, (int)imod(-sl.d, n));
      Slot sv1 = req[pos], sv2 = req[mir];
      req[pos] = req[mir] = Slot::Forbidden;
      skipped += 2;
      remaining_required -= (sv1 == Slot::Required) + (sv2 == Slot::Required);
      free_instances -= 2;
      bool r = dfs_exact(pos);
      req[pos] = sv1;
      req[mir] = sv2;
      skipped -= 2;
      remaining_required += (sv1 == Slot::Required) + (sv2 == Slot::Required);
      free_instances += 2;
      if (r) return true;
    }
    return false;
  }

  void dfs_max(size_t hint) {
    if ((int64_t)cur.size() > best_size) {
      best_size = (int64_t)cur.size();
      best = cur;
      if (best_size == upper) throw Done{};
    }
    if (++nodes > budget) fail(Errc::BudgetExceeded, "max search node budget exhausted");
    if ((int64_t)cur.size() + free_instances / 6 <= best_size) return;
    SlotRef sl;
    size_t pos;
    if (!find_slot(hint, false, sl, pos)) return;
    candidates(sl, [&](const Codeword& b) {
      std::array<size_t, 6> s6;
      if (!block_slots(b, s6)) return;
      place(s6);
      cur.push_back(b);
      dfs_max(pos);
      cur.pop_back();
      unplace(s6);
    });
    // skip this slot and its mirror permanently
    size_t mir = idx(sl.j, sl.i, (int)imod(-sl.d, n));
    Slot sv1 = req[pos], sv2 = req[mir];
    req[pos] = req[mir] = Slot::Forbidden;
    free_instances -= (pos == mir) ? 1 : 2;
    dfs_max(pos);
    req[pos] = sv1;
    req[mir] = sv2;
    free_instances += (pos == mir) ? 1 : 2;
  }
};

}  // namespace

std::vector<Codeword> cover_search(const CoverProblem& p) {
  Engine e;
  e.init(p);
  // implicit slack: instances that cannot all be covered by `target` blocks
  e.skip_budget = e.free_instances - 6 * p.target_blocks;
  if (e.skip_budget < 0) fail(Errc::NotExists, "target exceeds difference capacity");
  if (!e.seed_pins(p.pinned)) fail(Errc::NotExists, "pinned blocks conflict");
  if (!e.dfs_exact(0)) fail(Errc::NotExists, "cover search exhausted");
  std::vector<Codeword> out = e.cur;
  std::sort(out.begin(), out.end());
  return out;
}

MaxOocResult max_ooc(int m, int n, int k, int64_t node_budget) {
  if (k != 3) fail(Errc::UnsupportedParams, "exact search supports k = 3 only");
  if ((int64_t)m * n > 24) fail(Errc::BudgetExceeded, "m*n too large for exact search");
  CoverProblem p;
  p.rows = m;
  p.modulus = n;
  p.node_budget = node_budget;
  p.fill(Slot::Optional);
  for (int i = 0; i < m; ++i) {
    p.at(i, i, 0) = Slot::Forbidden;
    if (n % 2 == 0) p.at(i, i, n / 2) = Slot::Forbidden;
  }
  Engine e;
  e.init(p);
  e.maximize = true;
  e.upper = johnson(m, n, 3, 1);
  e.best_size = -1;
  try {
    e.dfs_max(0);
  } catch (Engine::Done&) {
  }
  MaxOocResult res;
  res.size = e.best_size < 0 ? 0 : e.best_size;
  res.nodes = e.nodes;
  res.witness.params = {m, n, 3, 1};
  res.witness.codewords = e.best;
  normalize(res.witness);
  require_verified(res.witness, "max_ooc witness");
  return res;
}

bool schgdd_exists(int m, int w, int t) {
  if (m < 3 || t < 3 || w < 1) return false;
  if (imod((int64_t)(t - 1) * (m - 1) * w, 2) != 0) return false;
  if (imod((int64_t)(t - 1) * m * (m - 1) * w, 6) != 0) return false;
  if (m == 3 && t == 3 && w % 2 == 0) return false;
  if ((m == 5 && w == 1 && t == 4) || (m == 6 && w == 1 && t == 3)) return false;
  if (m == 3 && w % 2 == 1 && t % 2 == 0) return false;
  int m12 = m % 12;
  if ((m12 == 3 || m12 == 7) && w % 2 == 1 && t % 4 == 2) return false;
  if (m12 == 11) {
    int w6 = w % 6;
    if (w6 == 3 && t % 4 == 2) return false;
    if ((w6 == 1 || w6 == 5) && t % 12 == 10) return false;
  }
  return true;
}

bool strict_cyclic_gdd_exists(int64_t g, int64_t u) {
  return imod(g * (u - 1), 6) == 0 && u >= 4 &&
         !(imod(g, 4) == 2 && (imod(u, 4) == 2 || imod(u, 4) == 3));
}

bool ncyclic_gdd_exists(int64_t v, int64_t n, int64_t m) {
  if (m < 3) return false;
  if (m == 3) return n % 2 == 1 || v % 2 == 0;
  if (imod((m - 1) * v * n, 2) != 0) return false;
  if (imod(m * (m - 1) * v * n, 3) != 0) return false;
  if ((imod(m, 4) == 2 || imod(m, 4) == 3) && imod(n, 4) == 2 && v % 2 != 0) return false;
  return true;
}

DesignObject find_design(const DesignSpec& spec, int64_t node_budget) {
  CoverProblem p;
  p.node_budget = node_budget;
  DesignObject d;
  d.kind = spec.kind;
  d.modulus = spec.modulus;
  d.group_type = spec.type;

  switch (spec.kind) {
    case DesignKind::StrictCyclicGdd: {
      if (spec.type.parts.size() != 1) fail(Errc::InvalidParams, "need type g^u");
      int64_t g = spec.type.parts[0].first, u = spec.type.parts[0].second;
      if (!strict_cyclic_gdd_exists(g, u))
        fail(Errc::NotExists, "strictly cyclic existence condition fails");
      d.num_rows = 1;
      d.modulus = (int)(g * u);
      p.rows = 1;
      p.modulus = d.modulus;
      p.fill(Slot::Required);
      for (int res = 0; res < d.modulus; ++res)
        if (res % u == 0) p.at(0, 0, res) = Slot::Forbidden;
      p.target_blocks = g * (u - 1) / 6;
      break;
    }
    case DesignKind::NCyclicGdd:
    case DesignKind::NCyclicGdp: {
      if (spec.kind == DesignKind::NCyclicGdd && spec.type.parts.size() == 1) {
        auto [size, count] = spec.type.parts[0];
        if (!ncyclic_gdd_exists(size / spec.modulus, spec.modulus, count))
          fail(Errc::NotExists, "cyclic GDD existence condition fails");
      }
      int rows = 0;
      std::vector<int> rg;
      int gid = 0;
      for (auto [size, count] : spec.type.parts) {
        if (size % spec.modulus != 0) fail(Errc::InvalidParams, "part size not multiple of modulus");
        int v = (int)(size / spec.modulus);
        for (int c = 0; c < count; ++c, ++gid)
          for (int t = 0; t < v; ++t) rg.push_back(gid), ++rows;
      }
      d.num_rows = rows;
      d.row_group = rg;
      p.rows = rows;
      p.modulus = spec.modulus;
      p.fill(Slot::Required);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j)
          if (rg[i] == rg[j])
            for (int res = 0; res < spec.modulus; ++res) p.at(i, j, res) = Slot::Forbidden;
      int64_t required = 0;
      for (auto s : p.req) required += s == Slot::Required;
      if (spec.kind == DesignKind::NCyclicGdd) {
        if (required % 6 != 0) fail(Errc::NotExists, "difference count not divisible by 6");
        p.target_blocks = required / 6;
      } else {
        if (spec.expected_blocks < 0) fail(Errc::InvalidParams, "GDP needs expected block count");
        p.target_blocks = spec.expected_blocks;
        d.expected_blocks = spec.expected_blocks;
      }
      break;
    }
    case DesignKind::Schgdd:
    case DesignKind::Scihgdd: {
      int m = spec.hgdd_m, r = spec.hgdd_r, w = spec.hgdd_w, t = spec.hgdd_t;
      if (spec.kind == DesignKind::Schgdd) r = 0;
      if (m < 3 || t < 3 || w < 1 || r < 0) fail(Errc::NotExists, "shape out of range");
      if (r <= 1 && !schgdd_exists(m, w, t))
        fail(Errc::NotExists, "semi-cyclic holey GDD existence condition fails");
      d.num_rows = m;
      d.hole_rows = r;
      d.hole_order = w;
      d.modulus = w * t;
      d.group_type = GroupType{{(int64_t)w * t, m}};
      p.rows = m;
      p.modulus = w * t;
      p.fill(Slot::Required);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          bool excluded = (i == j) || (i < r && j < r);
          for (int res = 0; res < p.modulus; ++res)
            if (excluded || res % t == 0) p.at(i, j, res) = Slot::Forbidden;
        }
      p.target_blocks = ((int64_t)m * (m - 1) - (int64_t)r * (r - 1)) * w * (t - 1) / 6;
      break;
    }
    default:
      fail(Errc::UnsupportedParams, "no search for this design kind");
  }

  p.pinned = spec.pinned;
  d.base_blocks = cover_search(p);
  require_verified(d, "searched design");
  return d;
}

}  // namespace ooc
