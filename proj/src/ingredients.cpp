#include "ooc/ingredients.hpp"

#include <algorithm>
#include <set>

#include "ooc/bounds.hpp"
#include "ooc/cache.hpp"
#include "ooc/combinators.hpp"
#include "ooc/sequences.hpp"
#include "ooc/tables.hpp"
#include "ooc/verify.hpp"

namespace ooc {

namespace {

std::string slug_of(const std::string& prefix, const GroupType& t, int modulus) {
  std::string s = prefix + "-" + t.str() + "-m" + std::to_string(modulus);
  for (char& c : s)
    if (c == ' ') c = '_';
    else if (c == '^') c = 'x';
  return s;
}

OocCode make_code(int m, int n, int hole, int g, std::vector<Codeword> cws,
                  const std::string& label) {
  OocCode c;
  c.params = {m, n, 3, 1};
  c.hole_rows = hole;
  c.regular_g = g;
  c.codewords = std::move(cws);
  normalize(c);
  c.prov = {label, {}};
  require_verified(c, label);
  return c;
}

// Canonical relabeling that sends the listed rows to the front (the hole
// prefix) and keeps everything else in order.
std::vector<int> hole_first_perm(int m, const std::vector<int>& hole_rows) {
  std::vector<int> perm(m, -1);
  int next = 0;
  for (int r : hole_rows) perm[r] = next++;
  for (int r = 0; r < m; ++r)
    if (perm[r] < 0) perm[r] = next++;
  return perm;
}

}  // namespace

OocCode regular_6xn(int n) {
  if (n % 4 != 2 || n < 6) fail(Errc::UnsupportedParams, "need n = 2 (mod 4), n >= 6");
  std::vector<Codeword> init;
  for (int i = 0; i <= (n - 6) / 4; ++i) {
    init.push_back(Codeword(std::vector<Point>{{0, 0}, {1, i + 1}, {3, 2 + 2 * i}}));
    init.push_back(Codeword(std::vector<Point>{{0, 0}, {0, 2 * i + 2}, {2, n / 2 + i + 1}}));
    init.push_back(Codeword(std::vector<Point>{{0, 0}, {1, (n + 2) / 4 + i}, {3, 1 + 2 * i}}));
    init.push_back(Codeword(std::vector<Point>{{0, 0}, {0, 2 * i + 1}, {1, (int)imod((3 * n + 2) / 4 + i, n)}}));
  }
  auto cws = develop_rows(init, 1, 6, 6, {});
  return make_code(6, n, 0, 2, std::move(cws), "regular-6xn");
}

OocCode optimal_6xn(int n) {
  if (n % 4 != 2) fail(Errc::UnsupportedParams, "need n = 2 (mod 4)");
  if (n == 2) {
    auto init = instantiate(get_table("seed-6x2"), {.n = 2});
    auto cws = develop_rows(init, 2, 6, 6, {});
    return make_code(6, 2, 0, 0, std::move(cws), "optimal-6x2");
  }
  OocCode out = fill_regular(regular_6xn(n), optimal_6xn(2));
  out.prov = {"optimal-6xn", {out.prov}};
  return out;
}

OocCode regular_21xn(int n) {
  if (!frame_starter_exists(n) || n < 8)
    fail(Errc::UnsupportedParams, "need n = 0,2 (mod 8), n >= 8");
  FrameStarter fs = frame_starter(n);
  std::vector<Codeword> cws;
  for (auto [x, y] : fs.pairs) cws.push_back(Codeword(std::vector<Point>{{0, 0}, {1, x}, {1, y}}));
  // hole is the row producing nothing: row 0 here
  return make_code(2, n, 1, 2, std::move(cws), "regular-21xn");
}

OocCode regular_3xn(int n) {
  if (!frame_starter_exists(n) || n < 8)
    fail(Errc::UnsupportedParams, "need n = 0,2 (mod 8), n >= 8");
  FrameStarter fs = frame_starter(n);
  std::vector<Codeword> cws;
  for (int i = 0; i < 3; ++i)
    for (auto [x, y] : fs.pairs)
      cws.push_back(Codeword(std::vector<Point>{{i, 0}, {(i + 1) % 3, x}, {(i + 1) % 3, y}}));
  return make_code(3, n, 0, 2, std::move(cws), "regular-3xn");
}

OocCode hole_3_0(int n) {
  if (n % 8 != 0 && n % 8 != 6) fail(Errc::UnsupportedParams, "need n = 0,6 (mod 8)");
  int v = (n - 2) / 2;
  SkolemSequence s1 = extended_skolem(v, 2);
  SkolemSequence s2 = extended_skolem(v, n - 4);
  std::vector<Codeword> cws;
  for (int i = 1; i <= v; ++i) {
    int a1 = s1.pairs[i - 1].first, a2 = s2.pairs[i - 1].first;
    cws.push_back(Codeword(std::vector<Point>{{0, 0}, {0, i}, {1, (int)imod(a1 + i, n)}}));
    cws.push_back(Codeword(std::vector<Point>{{1, 0}, {1, i}, {2, (int)imod(a1 + i, n)}}));
    cws.push_back(Codeword(std::vector<Point>{{2, 0}, {2, i}, {0, (int)imod(a2 + i, n)}}));
  }
  cws.push_back(Codeword(std::vector<Point>{{0, 0}, {1, 0}, {2, 0}}));
  cws.push_back(Codeword(std::vector<Point>{{0, 0}, {1, 2}, {2, 4}}));
  OocCode c = make_code(3, n, 0, 0, std::move(cws), "hole-3-0");
  if (c.size() != theta(3, 0, n, 3)) fail(Errc::VerifyFailed, "hole-3-0 size mismatch");
  return c;
}

OocCode hole_5_2(int n) {
  if (n % 8 != 0 && n % 8 != 6) fail(Errc::UnsupportedParams, "need n = 0,6 (mod 8)");
  // rows during assembly: 0,1,2 = I_3, 3 = inf0, 4 = inf1; hole {inf0, inf1}
  DesignObject A = schgdd(4, 2, n / 2);  // on I_3 + inf0 (row 3)
  std::vector<Codeword> cws = A.base_blocks;
  int v = (n - 2) / 2;
  SkolemSequence s0 = extended_skolem(v, 2);
  SkolemSequence s2 = extended_skolem(v, 4);
  for (int i = 1; i <= v; ++i) {
    int a0 = s0.pairs[i - 1].first, a2 = s2.pairs[i - 1].first;
    cws.push_back(Codeword(std::vector<Point>{{0, 0}, {0, i}, {4, (int)imod(a0 + i, n)}}));
    cws.push_back(Codeword(std::vector<Point>{{1, 0}, {1, i}, {4, (int)imod(a0 + i + 2, n)}}));
    cws.push_back(Codeword(std::vector<Point>{{2, 0}, {2, i}, {4, (int)imod(a2 + i, n)}}));
  }
  int h = n / 2;
  cws.push_back(Codeword(std::vector<Point>{{0, 0}, {3, 0}, {1, h}}));
  cws.push_back(Codeword(std::vector<Point>{{0, 0}, {2, h}, {3, h}}));
  cws.push_back(Codeword(std::vector<Point>{{0, 0}, {1, 0}, {4, 2}}));
  cws.push_back(Codeword(std::vector<Point>{{1, 0}, {3, 0}, {2, h}}));
  cws.push_back(Codeword(std::vector<Point>{{0, 0}, {2, 0}, {4, 0}}));
  cws.push_back(Codeword(std::vector<Point>{{1, 0}, {2, 0}, {4, 4}}));
  auto perm = hole_first_perm(5, {3, 4});
  std::vector<Codeword> rel;
  for (const Codeword& cw : cws) rel.push_back(relabel_rows(cw, perm));
  OocCode c = make_code(5, n, 2, 0, std::move(rel), "hole-5-2");
  if (c.size() != theta(5, 2, n, 3)) fail(Errc::VerifyFailed, "hole-5-2 size mismatch");
  return c;
}

OocCode hole_9_3(int n) {
  if (n % 8 != 4 || n < 12) fail(Errc::UnsupportedParams, "need n = 4 (mod 8), n >= 12");
  std::vector<Codeword> cws;
  if (n == 12) {
    const RawTable& t = get_table("hole93-n12");
    auto init = instantiate(t, {.n = 12});
    cws = develop_rows(init, 2, 6, 6, star_flags(t));
    auto perm = hole_first_perm(9, {6, 7, 8});
    std::vector<Codeword> rel;
    for (const Codeword& cw : cws) rel.push_back(relabel_rows(cw, perm));
    OocCode c = make_code(9, 12, 3, 0, std::move(rel), "hole-9-3");
    if (c.size() != 142) fail(Errc::VerifyFailed, "hole-9-3 n=12 size mismatch");
    return c;
  }
  // n >= 20: HGDD (3,(3x4)^{n/4}) + two Skolem families + a fixed part
  DesignObject hgdd = inflate_schgdd(schgdd(3, 4, n / 4), 3);
  cws = hgdd.base_blocks;
  int v = (n - 2) / 2;
  SkolemSequence s = extended_skolem(v, n / 4);
  const int succ[6] = {1, 2, 0, 4, 5, 3};
  for (int row = 0; row < 6; ++row)
    for (int i = 1; i <= v; ++i) {
      int a = s.pairs[i - 1].first;
      cws.push_back(Codeword(std::vector<Point>{{row, 0}, {row, i}, {succ[row], (int)imod(a + i, n)}}));
    }
  for (const Codeword& cw : instantiate(get_table("hole93-cpart"), {.n = n})) cws.push_back(cw);
  auto perm = hole_first_perm(9, {6, 7, 8});
  std::vector<Codeword> rel;
  for (const Codeword& cw : cws) rel.push_back(relabel_rows(cw, perm));
  OocCode c = make_code(9, n, 3, 0, std::move(rel), "hole-9-3");
  if (c.size() != theta(9, 3, n, 3)) fail(Errc::VerifyFailed, "hole-9-3 size mismatch");
  return c;
}

namespace {

// The SCIHGDD of type (6t+r-1, r-1, 2^{n/2}) used by hole_6t_r.
DesignObject scihgdd_for(int t, int r, int n) {
  auto as_scihgdd = [](DesignObject d, int hole) {
    d.kind = DesignKind::Scihgdd;
    d.hole_rows = hole;
    return d;
  };
  if (r == 1 || r == 2) return as_scihgdd(schgdd(6 * t + r - 1, 2, n / 2), r - 1);
  if (t == 1 && r == 4)
    return fill_cyclic_hgdd(inflate_schgdd(schgdd(3, 2, n / 2), 3),
                            as_scihgdd(schgdd(3, 2, n / 2), 0));
  if (t == 1 && r == 5)
    return fill_cyclic_hgdd(inflate_schgdd(schgdd(3, 2, n / 2), 3),
                            as_scihgdd(schgdd(4, 2, n / 2), 1));
  if (t == 2 && r == 4)
    return fill_cyclic_hgdd(inflate_schgdd(schgdd(7, 2, n / 2), 2),
                            as_scihgdd(schgdd(3, 2, n / 2), 1));
  if (t == 2 && r == 5)
    return fill_cyclic_hgdd(inflate_schgdd(schgdd(4, 2, n / 2), 4),
                            as_scihgdd(schgdd(4, 2, n / 2), 0));
  fail(Errc::UnsupportedParams, "no SCIHGDD recipe for these parameters");
}

}  // namespace

OocCode hole_6t_r(int t, int r, int n) {
  if (n % 4 != 0 || n < 8) fail(Errc::UnsupportedParams, "need n = 0 (mod 4), n >= 8");
  if ((t != 1 && t != 2) || (r != 1 && r != 2 && r != 4 && r != 5))
    fail(Errc::UnsupportedParams, "need t in {1,2}, r in {1,2,4,5}");
  const int m = 6 * t + r;
  std::string slug = "hole-" + std::to_string(m) + "-" + std::to_string(r) + "-" +
                     std::to_string(n);
  return cache::code(slug, [&]() {
    // rows 0..6t-1 finite, 6t..6t+r-1 the infinity rows (hole)
    DesignObject sci = scihgdd_for(t, r, n);
    std::vector<int> relabel(sci.num_rows);
    for (int j = 0; j < sci.num_rows; ++j)
      relabel[j] = j < r - 1 ? 6 * t + j : j - (r - 1);
    std::vector<Codeword> cws;
    for (const Codeword& b : sci.base_blocks) cws.push_back(relabel_rows(b, relabel));

    int v = (n - 2) / 2;
    SkolemSequence S = extended_skolem(v, n / 4);
    SkolemSequence T = extended_skolem(v, 3 * n / 4);
    const int inf_last = m - 1;  // infty_{r-1} sits at row 6t + r - 1
    for (int l = 0; l < 3 * t; ++l)
      for (int i = 1; i <= v; ++i)
        cws.push_back(
            Codeword(std::vector<Point>{{l, 0}, {l, i}, {inf_last, (int)imod(S.pairs[i - 1].first + i, n)}}));
    for (int e = 3 * t; e < 6 * t; ++e)
      for (int i = 1; i <= v; ++i)
        cws.push_back(Codeword(std::vector<Point>{{e, 0}, {e, i}, {inf_last, (int)imod(T.pairs[i - 1].first + i + n / 2, n)}}));
    for (int i = 0; i < 3 * t; ++i)
      cws.push_back(Codeword(std::vector<Point>{{2 * i, 0}, {2 * i + 1, 0}, {inf_last, n / 4}}));

    // completion: cover the residual differences exactly
    CoverProblem p;
    p.rows = m;
    p.modulus = n;
    p.fill(Slot::Required);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int d = 0; d < n; ++d) {
          bool hole_pair = i >= 6 * t && j >= 6 * t;
          bool bad_pure = (i == j) && (d == 0 || d == n / 2);
          if (hole_pair || bad_pure) p.at(i, j, d) = Slot::Forbidden;
        }
    for (const Codeword& cw : cws)
      for (const Point& a : cw.points())
        for (const Point& b : cw.points()) {
          if (a == b) continue;
          p.at(a.row, b.row, (int)imod(a.col - b.col, n)) = Slot::Forbidden;
        }
    p.target_blocks = (int64_t)t * (12 * t + 4 * r - 5);
    for (const Codeword& cw : cover_search(p)) cws.push_back(cw);

    std::vector<int> hole_rows;
    for (int j = 0; j < r; ++j) hole_rows.push_back(6 * t + j);
    auto perm = hole_first_perm(m, hole_rows);
    std::vector<Codeword> rel;
    for (const Codeword& cw : cws) rel.push_back(relabel_rows(cw, perm));
    OocCode c = make_code(m, n, r, 0, std::move(rel), slug);
    if (c.size() != theta(m, r, n, 3)) fail(Errc::VerifyFailed, slug + " size mismatch");
    return c;
  });
}

OocCode hole_m_r_n4(int t, int r) {
  if ((t != 1 && t != 2) || r < 1 || r > 5) fail(Errc::UnsupportedParams, "need t in {1,2}, r in 1..5");
  const int m = 6 * t + r;
  std::string slug = "hole-" + std::to_string(m) + "-" + std::to_string(r) + "-4";
  return cache::code(slug, [&]() {
    CoverProblem p;
    p.rows = m;
    p.modulus = 4;
    p.fill(Slot::Required);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int d = 0; d < 4; ++d) {
          bool hole_pair = i >= 6 * t && j >= 6 * t;
          bool bad_pure = (i == j) && (d == 0 || d == 2);
          if (hole_pair || bad_pure) p.at(i, j, d) = Slot::Forbidden;
        }
    p.target_blocks = theta(m, r, 4, 3);
    std::vector<Codeword> cws = cover_search(p);
    std::vector<int> hole_rows;
    for (int j = 0; j < r; ++j) hole_rows.push_back(6 * t + j);
    auto perm = hole_first_perm(m, hole_rows);
    std::vector<Codeword> rel;
    for (const Codeword& cw : cws) rel.push_back(relabel_rows(cw, perm));
    return make_code(m, 4, r, 0, std::move(rel), slug);
  });
}

OocCode ooc_1d(int n) {
  if (n < 1) fail(Errc::InvalidParams, "need n >= 1");
  int64_t target = johnson(1, n, 3, 1) - delta_1d(n);
  if (target == 0) return make_code(1, n, 0, 0, {}, "ooc-1d");
  CoverProblem p;
  p.rows = 1;
  p.modulus = n;
  p.fill(Slot::Required);
  p.at(0, 0, 0) = Slot::Forbidden;
  if (n % 2 == 0) p.at(0, 0, n / 2) = Slot::Forbidden;
  p.target_blocks = target;
  std::vector<Codeword> cws;
  try {
    cws = cover_search(p);
  } catch (const Error& e) {
    fail(Errc::IngredientGap, std::string("1-D builder: ") + e.what());
  }
  OocCode c = make_code(1, n, 0, 0, std::move(cws), "ooc-1d");
  if (c.size() != target) fail(Errc::VerifyFailed, "1-D size mismatch");
  return c;
}

DesignObject cyclic_gdd_q3(int q) {
  if (q % 2 != 1) fail(Errc::UnsupportedParams, "direct q^3 construction needs odd q");
  DesignObject d;
  d.kind = DesignKind::NCyclicGdd;
  d.modulus = q;
  d.num_rows = 3;
  d.row_group = {0, 1, 2};
  d.group_type = GroupType{{q, 3}};
  for (int i = 0; i < q; ++i)
    d.base_blocks.push_back(Codeword(std::vector<Point>{{0, 0}, {1, i}, {2, (2 * i) % q}}));
  d.prov = {"cyclic-gdd-q3", {}};
  require_verified(d, "cyclic q^3 GDD");
  return d;
}

DesignObject gdd_6321() {
  // relabel rows so the paper's groups {i, i+3, i+6} become consecutive
  auto init = instantiate(get_table("gdd-6321"), {.n = 2});
  std::vector<int> perm(10);
  for (int r = 0; r < 9; ++r) perm[r] = 3 * (r % 3) + r / 3;
  perm[9] = 9;
  DesignObject d;
  d.kind = DesignKind::NCyclicGdd;
  d.modulus = 2;
  d.num_rows = 10;
  d.row_group = {0, 0, 0, 1, 1, 1, 2, 2, 2, 3};
  d.group_type = GroupType{{6, 3}, {2, 1}};
  for (const Codeword& cw : init) d.base_blocks.push_back(relabel_rows(cw, perm));
  std::sort(d.base_blocks.begin(), d.base_blocks.end());
  d.prov = {"gdd-6321", {}};
  require_verified(d, "2-cyclic GDD of type 6^3 2^1");
  return d;
}

DesignObject schgdd(int m, int w, int t) {
  if (!schgdd_exists(m, w, t)) fail(Errc::NotExists, "no SCHGDD with this shape");
  std::string slug = "schgdd-" + std::to_string(m) + "-" + std::to_string(w) + "x" +
                     std::to_string(t);
  return cache::design(slug, [&]() {
    DesignSpec spec;
    spec.kind = DesignKind::Schgdd;
    spec.hgdd_m = m;
    spec.hgdd_w = w;
    spec.hgdd_t = t;
    spec.modulus = w * t;
    return find_design(spec);
  });
}

DesignObject ncyclic_gdd_uniform(int v, int n, int m) {
  if (!ncyclic_gdd_exists(v, n, m)) fail(Errc::NotExists, "no cyclic GDD with this type");
  if (m == 3 && v == 1 && n % 2 == 1) return cyclic_gdd_q3(n);
  GroupType type{{(int64_t)v * n, m}};
  return cache::design(slug_of("ngdd", type, n), [&]() {
    DesignSpec spec;
    spec.kind = DesignKind::NCyclicGdd;
    spec.type = type;
    spec.modulus = n;
    return find_design(spec);
  });
}

DesignObject ncyclic_gdp(int v, int n, int m) {
  GroupType type{{(int64_t)v * n, m}};
  int64_t blocks = gdp_block_count(v, n, m);
  return cache::design(slug_of("ngdp", type, n), [&]() {
    DesignSpec spec;
    spec.kind = DesignKind::NCyclicGdp;
    spec.type = type;
    spec.modulus = n;
    spec.expected_blocks = blocks;
    return find_design(spec);
  });
}

DesignObject strict_cyclic_gdd(int g, int u) {
  if (!strict_cyclic_gdd_exists(g, u)) fail(Errc::NotExists, "no strictly cyclic GDD here");
  GroupType type{{g, u}};
  return cache::design(slug_of("scgdd", type, g * u), [&]() {
    DesignSpec spec;
    spec.kind = DesignKind::StrictCyclicGdd;
    spec.type = type;
    return find_design(spec);
  });
}

DesignObject small_design(DesignKind kind, const GroupType& type, int modulus) {
  switch (kind) {
    case DesignKind::NCyclicGdd: {
      if (type == GroupType{{6, 3}, {2, 1}} && modulus == 2) return gdd_6321();
      if (type.parts.size() == 1) {
        auto [size, count] = type.parts[0];
        if (size % modulus != 0) fail(Errc::InvalidParams, "type inconsistent with modulus");
        return ncyclic_gdd_uniform((int)(size / modulus), modulus, count);
      }
      fail(Errc::IngredientGap, "no builder for this GDD type");
    }
    case DesignKind::NCyclicGdp: {
      if (type.parts.size() != 1) fail(Errc::IngredientGap, "GDP builder needs uniform type");
      auto [size, count] = type.parts[0];
      return ncyclic_gdp((int)(size / modulus), modulus, count);
    }
    case DesignKind::StrictCyclicGdd: {
      auto [g, u] = type.parts.at(0);
      return strict_cyclic_gdd((int)g, u);
    }
    case DesignKind::Schgdd: {
      // encoded as m^1 w^t; the m part is the one with count 1 (t >= 3 always)
      if (type.parts.size() != 2) fail(Errc::InvalidParams, "SCHGDD type encoded as m^1 w^t");
      auto mp = type.parts[0].second == 1 ? type.parts[0] : type.parts[1];
      auto wp = type.parts[0].second == 1 ? type.parts[1] : type.parts[0];
      if (mp.second != 1) fail(Errc::InvalidParams, "SCHGDD type encoded as m^1 w^t");
      (void)modulus;
      return schgdd((int)mp.first, (int)wp.first, wp.second);
    }
    default:
      fail(Errc::UnsupportedParams, "no small-design builder for this kind");
  }
}

std::variant<DesignObject, OocCode, std::vector<Codeword>> appendix_load(char table,
                                                                         const std::string& key) {
  switch (table) {
    case 'A': {
      if (key == "t1-r8" || key == "t2-r8") {
        const RawTable& t = get_table("a-" + key);
        int mod = key == "t1-r8" ? 8 : 16;
        DesignObject d;
        d.kind = DesignKind::CosetGdd;
        d.modulus = mod;
        d.num_rows = key == "t1-r8" ? 5 : 4;
        d.hole_rows = key == "t1-r8" ? 2 : 1;
        d.hole_order = 2;
        d.group_type = key == "t1-r8" ? GroupType{{16, 1}, {6, 4}} : GroupType{{16, 1}, {6, 8}};
        d.base_blocks = instantiate(t, {.n = mod});
        std::sort(d.base_blocks.begin(), d.base_blocks.end());
        require_verified(d, "appendix A " + key);
        return d;
      }
      if (key == "t1-r9" || key == "t2-r9") {
        const RawTable& t = get_table("a-" + key);
        int ft = key == "t1-r9" ? 4 : 8;  // finite rows
        // big group (three trailing rows in the data) goes first
        std::vector<int> perm(ft + 3);
        for (int j = 0; j < ft; ++j) perm[j] = 3 + j;
        for (int j = 0; j < 3; ++j) perm[ft + j] = j;
        DesignObject d;
        d.kind = DesignKind::NCyclicGdd;
        d.modulus = 6;
        d.num_rows = ft + 3;
        d.row_group.assign(ft + 3, 0);
        for (int j = 0; j < ft; ++j) d.row_group[3 + j] = 1 + j;
        d.group_type = GroupType{{18, 1}, {6, ft}};
        for (const Codeword& cw : instantiate(t, {.n = 6}))
          d.base_blocks.push_back(relabel_rows(cw, perm));
        std::sort(d.base_blocks.begin(), d.base_blocks.end());
        require_verified(d, "appendix A " + key);
        return d;
      }
      fail(Errc::UnknownKey, "appendix A has no key " + key);
    }
    case 'B': {
      if (key != "t1" && key != "t2") fail(Errc::UnknownKey, "appendix B has no key " + key);
      const RawTable& t = get_table("b-" + key);
      int tt = key == "t1" ? 1 : 2;
      auto init = instantiate(t, {.n = 2});
      auto blocks = develop_rows(init, 4 * tt, 12 * tt, 12 * tt, {});
      std::vector<int> perm(12 * tt + 8);
      for (int j = 0; j < 12 * tt; ++j) perm[j] = 8 + j;
      for (int j = 0; j < 8; ++j) perm[12 * tt + j] = j;
      DesignObject d;
      d.kind = DesignKind::NCyclicGdd;
      d.modulus = 2;
      d.num_rows = 12 * tt + 8;
      d.row_group.assign(d.num_rows, 0);
      for (int j = 0; j < 12 * tt; ++j) d.row_group[8 + j] = 1 + j;
      d.group_type = GroupType{{16, 1}, {2, 12 * tt}};
      for (const Codeword& cw : blocks) d.base_blocks.push_back(relabel_rows(cw, perm));
      std::sort(d.base_blocks.begin(), d.base_blocks.end());
      require_verified(d, "appendix B " + key);
      return d;
    }
    case 'E':
    case 'F': {
      std::string tk = (table == 'E' ? "e-" : "f-") + key;
      return table_code(tk);
    }
    case 'G': {
      if (!has_table("g-" + key)) fail(Errc::UnknownKey, "appendix G has no key " + key);
      int n = std::stoi(key.substr(1));
      return instantiate(get_table("g-" + key), {.n = n});
    }
    default:
      fail(Errc::UnknownKey, std::string("no appendix table ") + table);
  }
}

std::vector<std::string> appendix_keys(char table) {
  switch (table) {
    case 'A': return {"t1-r8", "t2-r8", "t1-r9", "t2-r9"};
    case 'B': return {"t1", "t2"};
    case 'C': return {};  // absent from the source tables
    case 'D': return {};  // absent from the source tables
    case 'E': return {"m7", "m8", "m10", "m11"};
    case 'F': return {"m7", "m10"};
    case 'G': {
      std::vector<std::string> out;
      for (int n : {26, 34, 36, 42, 44, 50, 58, 60, 66, 68, 74, 82, 84, 90, 92, 98})
        out.push_back("n" + std::to_string(n));
      return out;
    }
    default: return {};
  }
}

OocCode table_code(const std::string& key) {
  const RawTable& t = get_table(key);
  int m = std::stoi(t.meta.at("m"));
  int n = std::stoi(t.meta.at("n"));
  auto cws = instantiate(t, {.n = n});
  return make_code(m, n, 0, 0, std::move(cws), "table-" + key);
}

}  // namespace ooc
