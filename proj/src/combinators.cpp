#include "ooc/combinators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "ooc/bounds.hpp"
#include "ooc/verify.hpp"

namespace ooc {

namespace {

void check(bool cond, const std::string& what) {
  if (!cond) fail(Errc::ShapeMismatch, what);
}

OocCode finish(OocCode code, const std::string& label, std::vector<Provenance> kids) {
  normalize(code);
  code.prov = {label, std::move(kids)};
  require_verified(code, label);
  return code;
}

DesignObject finish(DesignObject d, const std::string& label, std::vector<Provenance> kids) {
  std::sort(d.base_blocks.begin(), d.base_blocks.end());
  d.prov = {label, std::move(kids)};
  require_verified(d, label);
  return d;
}

// Idempotent Latin square of order m (m != 2).
std::vector<std::vector<int>> idempotent_ls(int m) {
  check(m != 2, "no idempotent Latin square of order 2");
  std::vector<std::vector<int>> L(m, std::vector<int>(m));
  if (m % 2 == 1) {
    int half = (m + 1) / 2;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) L[i][j] = (int)(((int64_t)(i + j) * half) % m);
    return L;
  }
  // even m: deterministic backtracking with the diagonal pinned
  for (int i = 0; i < m; ++i) std::fill(L[i].begin(), L[i].end(), -1);
  for (int i = 0; i < m; ++i) L[i][i] = i;
  std::vector<std::vector<char>> row_used(m, std::vector<char>(m, 0)),
      col_used(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i) row_used[i][i] = col_used[i][i] = 1;
  std::function<bool(int)> rec = [&](int cell) -> bool {
    while (cell < m * m && L[cell / m][cell % m] >= 0) ++cell;
    if (cell == m * m) return true;
    int i = cell / m, j = cell % m;
    for (int s = 0; s < m; ++s) {
      if (row_used[i][s] || col_used[j][s]) continue;
      L[i][j] = s;
      row_used[i][s] = col_used[j][s] = 1;
      if (rec(cell + 1)) return true;
      L[i][j] = -1;
      row_used[i][s] = col_used[j][s] = 0;
    }
    return false;
  };
  if (!rec(0)) fail(Errc::NotExists, "idempotent Latin square search failed");
  return L;
}

}  // namespace

std::vector<std::array<int, 3>> td3_blocks(int h) {
  std::vector<std::array<int, 3>> out;
  out.reserve((size_t)h * h);
  for (int a = 0; a < h; ++a)
    for (int b = 0; b < h; ++b) out.push_back({a, b, (a + b) % h});
  return out;
}

OocCode fill_hole(const OocCode& outer, const OocCode& inner) {
  check(outer.regular_g == 0 && inner.regular_g == 0, "fill_hole expects plain codes");
  check(outer.hole_rows == inner.params.m, "inner row count must equal outer hole");
  check(outer.params.n == inner.params.n && outer.params.k == inner.params.k,
        "inner and outer live on different grids");
  OocCode out;
  out.params = outer.params;
  out.hole_rows = inner.hole_rows;
  out.codewords = outer.codewords;
  out.codewords.insert(out.codewords.end(), inner.codewords.begin(), inner.codewords.end());
  return finish(std::move(out), "filling-hole", {outer.prov, inner.prov});
}

OocCode fill_regular(const OocCode& outer, const OocCode& inner) {
  check(outer.regular_g > 0, "outer must be regular");
  check(inner.params.n == outer.regular_g, "inner modulus must equal outer subgroup order");
  check(inner.params.m == outer.params.m && inner.hole_rows == outer.hole_rows,
        "inner shape must match outer");
  check(inner.regular_g == 0, "inner must be plain");
  const int scale = outer.params.n / outer.regular_g;
  OocCode out;
  out.params = outer.params;
  out.hole_rows = outer.hole_rows;
  out.codewords = outer.codewords;
  for (const Codeword& cw : inner.codewords) {
    std::vector<Point> pts;
    for (const Point& p : cw.points()) pts.push_back({p.row, p.col * scale});
    out.codewords.push_back(Codeword(std::move(pts)));
  }
  return finish(std::move(out), "filling-regular", {outer.prov, inner.prov});
}

DesignObject weight_gdd(const DesignObject& outer, const DesignObject& inner) {
  check(outer.kind == DesignKind::NCyclicGdd, "outer must be a cyclic GDD");
  check(inner.kind == DesignKind::NCyclicGdd && inner.num_rows == 3,
        "inner must be a cyclic GDD of type h^3");
  const int n = outer.modulus, h = inner.modulus;
  check(std::gcd(n, h) == 1, "moduli must be coprime");
  check(inner.group_type.parts.size() == 1 && inner.group_type.parts[0].first == h,
        "inner type must be h^3");
  // CRT embedding: column c = x (mod n), c = w (mod h)
  std::vector<int> crt((size_t)n * h);
  for (int c = 0; c < n * h; ++c) crt[(size_t)(c % n) * h + (c % h)] = c;
  DesignObject out;
  out.kind = DesignKind::NCyclicGdd;
  out.modulus = n * h;
  out.num_rows = outer.num_rows;
  out.row_group = outer.row_group;
  for (auto [size, count] : outer.group_type.parts)
    out.group_type.parts.push_back({size * h, count});
  out.group_type.canonicalize();
  for (const Codeword& B : outer.base_blocks) {
    const auto& bp = B.points();
    check(bp.size() == 3, "weighting needs block size 3");
    for (const Codeword& A : inner.base_blocks) {
      std::vector<Point> pts;
      for (const Point& q : A.points()) {
        const Point& base = bp[q.row];
        pts.push_back({base.row, crt[(size_t)base.col * h + q.col]});
      }
      out.base_blocks.push_back(Codeword(std::move(pts)));
    }
  }
  return finish(std::move(out), "gdd-weighting", {outer.prov, inner.prov});
}

DesignObject fill_gdd(const DesignObject& outer, const std::map<int, DesignObject>& fillers,
                      int t_rows) {
  check(outer.kind == DesignKind::NCyclicGdd, "outer must be a cyclic GDD");
  const int n = outer.modulus;
  // collect outer groups as row lists
  std::map<int, std::vector<int>> groups;
  for (int r = 0; r < outer.num_rows; ++r) groups[outer.row_group[r]].push_back(r);
  DesignObject out;
  out.kind = DesignKind::NCyclicGdd;
  out.modulus = n;
  out.num_rows = outer.num_rows + t_rows;
  out.base_blocks = outer.base_blocks;
  std::vector<Provenance> kids{outer.prov};
  int h_rows = -1;
  for (auto& [gid, rows] : groups) {
    auto it = fillers.find((int)rows.size());
    check(it != fillers.end(), "missing filler for group size " + std::to_string(rows.size()));
    const DesignObject& f = it->second;
    check(f.kind == DesignKind::NCyclicGdd && f.modulus == n, "filler shape mismatch");
    // locate the filler's t-group (t_rows rows) and its h-groups
    std::map<int, std::vector<int>> fgroups;
    for (int r = 0; r < f.num_rows; ++r) fgroups[f.row_group[r]].push_back(r);
    std::vector<int> relabel(f.num_rows, -1);
    int next_chunk = 0;
    bool t_seen = false;
    for (auto& [fgid, frows] : fgroups) {
      if ((int)frows.size() == t_rows && !t_seen) {
        t_seen = true;
        for (size_t i = 0; i < frows.size(); ++i) relabel[frows[i]] = outer.num_rows + (int)i;
      } else {
        if (h_rows < 0) h_rows = (int)frows.size();
        check((int)frows.size() == h_rows, "filler group sizes inconsistent");
        for (size_t i = 0; i < frows.size(); ++i)
          relabel[frows[i]] = rows[next_chunk * h_rows + (int)i];
        ++next_chunk;
      }
    }
    check(t_seen && next_chunk * h_rows == (int)rows.size(), "filler does not tile the group");
    for (const Codeword& b : f.base_blocks) out.base_blocks.push_back(relabel_rows(b, relabel));
    kids.push_back(f.prov);
  }
  // new groups: chunks of h_rows rows inside old groups + the shared t group
  out.row_group.assign(out.num_rows, -1);
  int gid = 0;
  for (auto& [ogid, rows] : groups)
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i % h_rows == 0) ++gid;
      out.row_group[rows[i]] = gid;
    }
  for (int i = 0; i < t_rows; ++i) out.row_group[outer.num_rows + i] = 0;
  out.group_type = GroupType{{(int64_t)h_rows * n, (outer.num_rows / h_rows)},
                             {(int64_t)t_rows * n, 1}};
  return finish(std::move(out), "gdd-filling", std::move(kids));
}

DesignObject regular_to_hgdd(const OocCode& regular, int m, int e) {
  check(regular.regular_g > 0 && regular.hole_rows == 0, "need a regular code without hole");
  check(m >= 3 && e >= 1, "need m >= 3, e >= 1");
  const int h = regular.params.m, wt = regular.params.n, w = regular.regular_g;
  auto L = idempotent_ls(m);
  auto M = td3_blocks(e);  // (a, b, a+b mod e)
  DesignObject out;
  out.kind = DesignKind::WtCyclicHgdd;
  out.modulus = wt;
  out.hole_order = w;
  out.group_rows = h * e;
  out.num_rows = m * h * e;
  out.group_type = GroupType{{(int64_t)h * e * wt, m}};
  auto row_of = [&](int i, int eps, int a) { return i * h * e + eps * h + a; };
  for (const Codeword& B : regular.codewords) {
    const auto& bp = B.points();
    check(bp.size() == 3, "regular code blocks must have weight 3");
    for (int i = 0; i < m; ++i)
      for (int i2 = 0; i2 < m; ++i2) {
        if (i == i2) continue;
        for (auto [a, b, c] : M) {
          std::vector<Point> pts;
          pts.push_back({row_of(i, a, bp[0].row), bp[0].col});
          pts.push_back({row_of(i2, b, bp[1].row), bp[1].col});
          pts.push_back({row_of(L[i][i2], c, bp[2].row), bp[2].col});
          out.base_blocks.push_back(Codeword(std::move(pts)));
        }
      }
  }
  return finish(std::move(out), "regular-to-hgdd", {regular.prov});
}

DesignObject inflate_schgdd(const DesignObject& s, int h) {
  check(s.kind == DesignKind::Schgdd ||
            (s.kind == DesignKind::Scihgdd && s.hole_rows <= 1),
        "need a semi-cyclic holey GDD");
  DesignObject out;
  out.kind = DesignKind::WtCyclicHgdd;
  out.modulus = s.modulus;
  out.hole_order = s.hole_order;
  out.group_rows = h;
  out.num_rows = s.num_rows * h;
  out.group_type = GroupType{{(int64_t)h * s.modulus, s.num_rows}};
  for (const Codeword& b : s.base_blocks) {
    const auto& bp = b.points();
    check(bp.size() == 3, "inflation needs block size 3");
    for (auto [x, y, z] : td3_blocks(h)) {
      std::vector<Point> pts;
      pts.push_back({bp[0].row * h + x, bp[0].col});
      pts.push_back({bp[1].row * h + y, bp[1].col});
      pts.push_back({bp[2].row * h + z, bp[2].col});
      out.base_blocks.push_back(Codeword(std::move(pts)));
    }
  }
  return finish(std::move(out), "schgdd-inflation", {s.prov});
}

DesignObject fill_cyclic_hgdd(const DesignObject& hgdd, const DesignObject& sci) {
  check(hgdd.kind == DesignKind::WtCyclicHgdd, "first argument must be a wt-cyclic HGDD");
  check(sci.kind == DesignKind::Scihgdd || sci.kind == DesignKind::Schgdd,
        "second argument must be an SCIHGDD");
  const int h = hgdd.group_rows;
  const int delta = sci.num_rows - h;
  check(delta >= 0 && (sci.kind == DesignKind::Schgdd ? 0 : sci.hole_rows) == delta,
        "filler shape (h+d, d, w^t) required");
  check(sci.modulus == hgdd.modulus && sci.hole_order == hgdd.hole_order,
        "filler modulus mismatch");
  const int m = hgdd.num_rows / h;
  DesignObject out;
  out.kind = DesignKind::Scihgdd;
  out.modulus = hgdd.modulus;
  out.hole_order = hgdd.hole_order;
  out.num_rows = m * h + delta;
  out.hole_rows = h + delta;
  out.group_type = GroupType{{(int64_t)hgdd.modulus, out.num_rows}};
  // rows 0..delta-1: new rows; delta..delta+h-1: the unfilled group (group m-1);
  // then groups 0..m-2 in order.
  auto row_of = [&](int group, int a) {
    return group == m - 1 ? delta + a : delta + h + group * h + a;
  };
  std::vector<Provenance> kids{hgdd.prov, sci.prov};
  for (const Codeword& b : hgdd.base_blocks) {
    std::vector<Point> pts;
    for (const Point& p : b.points()) pts.push_back({row_of(p.row / h, p.row % h), p.col});
    out.base_blocks.push_back(Codeword(std::move(pts)));
  }
  for (int g = 0; g < m - 1; ++g) {
    std::vector<int> relabel(sci.num_rows);
    for (int j = 0; j < sci.num_rows; ++j)
      relabel[j] = j < delta ? j : row_of(g, j - delta);
    for (const Codeword& b : sci.base_blocks) out.base_blocks.push_back(relabel_rows(b, relabel));
  }
  return finish(std::move(out), "fill-cyclic-hgdd", std::move(kids));
}

OocCode inflate_regular(const OocCode& regular, int h) {
  check(regular.regular_g > 0, "need a regular code");
  OocCode out;
  out.params = {regular.params.m * h, regular.params.n, 3, 1};
  out.hole_rows = regular.hole_rows * h;
  out.regular_g = regular.regular_g;
  for (const Codeword& cw : regular.codewords) {
    const auto& bp = cw.points();
    check(bp.size() == 3, "inflation needs weight 3");
    for (auto [x, y, z] : td3_blocks(h)) {
      std::vector<Point> pts;
      pts.push_back({bp[0].row * h + x, bp[0].col});
      pts.push_back({bp[1].row * h + y, bp[1].col});
      pts.push_back({bp[2].row * h + z, bp[2].col});
      out.codewords.push_back(Codeword(std::move(pts)));
    }
  }
  return finish(std::move(out), "regular-inflation", {regular.prov});
}

OocCode fill_ihgdd(const DesignObject& sci, const OocCode& plug) {
  check(sci.kind == DesignKind::Scihgdd || sci.kind == DesignKind::Schgdd,
        "first argument must be an SCIHGDD");
  check(plug.params.m == 2 && plug.hole_rows == 1, "plug must be a [2:1] code");
  check(plug.regular_g == sci.hole_order && plug.params.n == sci.modulus,
        "plug regular structure must match the filler subgroup");
  const int r1 = sci.kind == DesignKind::Schgdd ? 0 : sci.hole_rows;  // r - 1
  const int m = sci.num_rows + 1, r = r1 + 1;
  // new layout: rows 0..r1-1 old hole prefix; row r1 = the plug's hole row;
  // rows r..m-1 = old rows r1..m-2
  std::vector<int> relabel(sci.num_rows);
  for (int j = 0; j < sci.num_rows; ++j) relabel[j] = j < r1 ? j : j + 1;
  OocCode out;
  out.params = {m, sci.modulus, 3, 1};
  out.hole_rows = r;
  out.regular_g = sci.hole_order;
  for (const Codeword& b : sci.base_blocks) out.codewords.push_back(relabel_rows(b, relabel));
  for (int x = r; x < m; ++x) {
    std::vector<int> pl = {r - 1, x};  // plug row 0 (its hole) -> shared row r-1
    for (const Codeword& b : plug.codewords) out.codewords.push_back(relabel_rows(b, pl));
  }
  return finish(std::move(out), "fill-ihgdd", {sci.prov, plug.prov});
}

OocCode gdp_expand(const DesignObject& gdp, const GdpExpand& spec) {
  check(gdp.kind == DesignKind::NCyclicGdd || gdp.kind == DesignKind::NCyclicGdp,
        "need a cyclic GDD/GDP");
  const int n = gdp.modulus;
  std::map<int, std::vector<int>> groups;
  for (int r = 0; r < gdp.num_rows; ++r) groups[gdp.row_group[r]].push_back(r);
  int absorb_gid = -1;
  if (spec.absorb_smallest_group) {
    size_t best = SIZE_MAX;
    for (auto& [gid, rows] : groups)
      if (rows.size() < best) best = rows.size(), absorb_gid = gid;
    size_t cnt = 0;
    for (auto& [gid, rows] : groups) cnt += rows.size() == best;
    check(cnt == 1, "absorbed group must be unique");
  }
  const int r_new = spec.new_hole_rows;
  std::vector<int> hole_rows;
  for (int i = 0; i < r_new; ++i) hole_rows.push_back(gdp.num_rows + i);
  if (absorb_gid >= 0)
    for (int row : groups[absorb_gid]) hole_rows.push_back(row);

  OocCode out;
  out.params = {gdp.num_rows + r_new, n, 3, 1};
  out.codewords = gdp.base_blocks;
  std::vector<Provenance> kids{gdp.prov};
  for (auto& [gid, rows] : groups) {
    if (gid == absorb_gid) continue;
    auto it = spec.filler_by_rows.find((int)rows.size());
    check(it != spec.filler_by_rows.end(),
          "missing filler for group of " + std::to_string(rows.size()) + " rows");
    const OocCode& f = it->second;
    check(f.params.m == (int)rows.size() + r_new && f.hole_rows == r_new &&
              f.params.n == n && f.regular_g == 0,
          "filler must be a [v+r:r] x n code");
    std::vector<int> relabel(f.params.m);
    for (int j = 0; j < r_new; ++j) relabel[j] = gdp.num_rows + j;
    for (size_t j = 0; j < rows.size(); ++j) relabel[r_new + j] = rows[j];
    for (const Codeword& cw : f.codewords) out.codewords.push_back(relabel_rows(cw, relabel));
    kids.push_back(f.prov);
  }
  auto perm = [&] {
    std::vector<int> perm(out.params.m, -1);
    int next = 0;
    for (int r : hole_rows) perm[r] = next++;
    for (int r = 0; r < out.params.m; ++r)
      if (perm[r] < 0) perm[r] = next++;
    return perm;
  }();
  std::vector<Codeword> rel;
  for (const Codeword& cw : out.codewords) rel.push_back(relabel_rows(cw, perm));
  out.codewords = std::move(rel);
  out.hole_rows = (int)hole_rows.size();
  return finish(std::move(out), "gdp-expansion", std::move(kids));
}

namespace {

std::vector<Codeword> fold_blocks(const std::vector<Codeword>& blocks, int m, int n, int n1) {
  const int n2 = n / n1;
  std::vector<Codeword> out;
  for (const Codeword& cw : blocks)
    for (int j = 0; j < n1; ++j) {
      std::vector<Point> pts;
      for (const Point& p : cw.points()) {
        int col = (int)imod(p.col + (int64_t)j * n2, n);
        pts.push_back({p.row * n1 + col / n2, col % n2});
      }
      out.push_back(Codeword(std::move(pts)));
    }
  (void)m;
  return out;
}

}  // namespace

OocCode fold(const OocCode& code, int n1) {
  check(n1 >= 1 && code.params.n % n1 == 0, "n1 must divide n");
  check(code.hole_rows == 0 && code.regular_g == 0, "fold expects a plain code");
  if (n1 == 1) return code;
  OocCode out;
  out.params = {code.params.m * n1, code.params.n / n1, code.params.k, 1};
  out.codewords = fold_blocks(code.codewords, code.params.m, code.params.n, n1);
  normalize(out);
  out.prov = {"fold", {code.prov}};
  if ((int64_t)out.codewords.size() != mul_ck(n1, code.size()))
    fail(Errc::FoldFailed, "fold produced colliding codewords");
  auto rep = verify_ooc(out);
  if (!rep.ok) fail(Errc::FoldFailed, "fold output rejected: " + rep.reason);
  return out;
}

DesignObject fold_design(const DesignObject& d, int n1) {
  check(d.kind == DesignKind::NCyclicGdd, "fold_design supports cyclic GDDs");
  check(d.modulus % n1 == 0, "n1 must divide the modulus");
  if (n1 == 1) return d;
  DesignObject out;
  out.kind = DesignKind::NCyclicGdd;
  out.modulus = d.modulus / n1;
  out.num_rows = d.num_rows * n1;
  out.row_group.assign(out.num_rows, 0);
  for (int r = 0; r < d.num_rows; ++r)
    for (int j = 0; j < n1; ++j) out.row_group[r * n1 + j] = d.row_group[r];
  out.group_type = d.group_type;
  out.base_blocks = fold_blocks(d.base_blocks, d.num_rows, d.modulus, n1);
  // group sizes (in points) are preserved, so the type tokens stay valid,
  // but rows-per-group scale by n1; rebuild the row_group ids canonically.
  std::map<int, std::vector<int>> groups;
  for (int r = 0; r < out.num_rows; ++r) groups[out.row_group[r]].push_back(r);
  return finish(std::move(out), "fold-design", {d.prov});
}

}  // namespace ooc
