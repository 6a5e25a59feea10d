#include "ooc/synthesis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <variant>

#include "ooc/bounds.hpp"
#include "ooc/cache.hpp"
#include "ooc/combinators.hpp"
#include "ooc/ingredients.hpp"
#include "ooc/sequences.hpp"
#include "ooc/tables.hpp"
#include "ooc/verify.hpp"

namespace ooc {

namespace {

OocCode arm(OocCode code, const std::string& label) {
  code.prov = {"arm:" + label, {code.prov}};
  return code;
}

OocCode checked_optimal(OocCode code, const std::string& what) {
  int64_t want = johnson(code.params.m, code.params.n, 3, 1) - mu(code.params.m, code.params.n).mu;
  if (code.size() != want)
    fail(Errc::VerifyFailed, what + ": built " + std::to_string(code.size()) + " codewords, want " +
                                 std::to_string(want));
  require_verified(code, what);
  return code;
}

OocCode from_codewords(int m, int n, int hole, int g, std::vector<Codeword> cws,
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

// ---- Lemma-level constructions ---------------------------------------------

// n = 2: the maximum 2-cyclic GDP of type 2^m, read as an (m x 2) code.
OocCode build_n2(int m) {
  int64_t target = j_star(m, 2);
  if (m <= 2 || target == 0) return from_codewords(m, 2, 0, 0, {}, "n2-empty");
  DesignObject gdp = ncyclic_gdp(1, 2, m);
  OocCode c = from_codewords(m, 2, 0, 0, gdp.base_blocks, "gdp-2m");
  c.prov.children.push_back(gdp.prov);
  return c;
}

// m = 2, n = 0 (mod 6) or 10 (mod 12): two pair systems on two rows.
OocCode build_m2_direct(int n) {
  std::vector<Codeword> cws;
  int vA = (n - 2) / 2;
  int vB = (n + (n % 12 == 10 ? 2 : 0)) / 6 - 1;  // ceil(n/6) - 1
  int X = n / 6;                                  // floor
  // choose the smallest admissible parameters
  int d = 0;
  for (int cand = 1; cand <= 2 * vB + 1 || vB == 0; ++cand) {
    if (vB == 0) break;
    if (extended_skolem_exists(vB, cand)) {
      d = cand;
      break;
    }
  }
  int k;
  if (n % 6 == 0) {
    k = d + n / 6;
    if (!extended_skolem_exists(vA, k)) fail(Errc::IngredientGap, "no matching pair systems");
  } else {
    k = extended_skolem_exists(vA, 1) ? 1 : 2;
  }
  SkolemSequence S = extended_skolem(vA, k);
  for (int i = 1; i <= vA; ++i)
    cws.push_back(Codeword(std::vector<Point>{{0, 0}, {0, i}, {1, (int)imod(S.pairs[i - 1].first + i, n)}}));
  if (vB > 0) {
    SkolemSequence T = extended_skolem(vB, d);
    for (int i = 1; i <= vB; ++i)
      cws.push_back(Codeword(std::vector<Point>{{1, 0}, {1, i}, {1, (int)imod(T.pairs[i - 1].first + i + X, n)}}));
  }
  if (n % 6 == 0) cws.push_back(Codeword(std::vector<Point>{{0, 0}, {1, 0}, {1, k}}));
  return from_codewords(2, n, 0, 0, std::move(cws), "m2-pairs");
}

// m = 3, n = 2 or 4 (mod 8): one pair system used on all three rows.
OocCode build_m3_direct(int n) {
  std::vector<Codeword> cws;
  if (n == 2) return from_codewords(3, 2, 0, 0, {Codeword(std::vector<Point>{{0, 0}, {1, 0}, {2, 0}})}, "m3-n2");
  int v = (n - 2) / 2;
  SkolemSequence S = extended_skolem(v, 1);
  for (int l = 0; l < 3; ++l)
    for (int i = 1; i <= v; ++i)
      cws.push_back(
          Codeword(std::vector<Point>{{l, 0}, {l, i}, {(l + 1) % 3, (int)imod(S.pairs[i - 1].first + i, n)}}));
  cws.push_back(Codeword(std::vector<Point>{{0, 0}, {1, 0}, {2, 0}}));
  return from_codewords(3, n, 0, 0, std::move(cws), "m3-pairs");
}

// The shared fourth part of the (m-1 rows + infinity) assemblies: pure
// differences on the infinity row.
std::vector<Codeword> fourth_part(int m, int n, int inf, const std::vector<Codeword>& built_so_far,
                                  int rows) {
  std::vector<Codeword> out;
  if (n == 26) {
    for (const Codeword& cw : instantiate(get_table("g-n26"), {.n = n})) {
      std::vector<Point> pts;
      for (const Point& p : cw.points()) pts.push_back({inf, p.col});
      out.push_back(Codeword(std::move(pts)));
    }
    return out;
  }
  out.push_back(Codeword(std::vector<Point>{{inf, 0}, {inf, 2}, {inf, 6}}));
  int s = (n - 16) / 6;
  if (s <= 0) return out;
  int rm = m % 3 + 6;
  int n24 = n % 24;
  if (n24 == 2 || n24 == 10) {
    if (triple_partition_exists(s, rm)) {
      SkolemSequence T = triple_partition(s, rm);
      for (auto& t : T.triples)
        out.push_back(Codeword(std::vector<Point>{{inf, 0}, {inf, t[0]}, {inf, t[2]}}));
      return out;
    }
  } else {
    if (langford_exists(s, rm)) {
      SkolemSequence L = langford(s, rm);
      for (auto [c, d] : L.pairs)
        out.push_back(Codeword(std::vector<Point>{{inf, 0}, {inf, (int)imod(c + rm + s - 1, n)}, {inf, (int)imod(d + rm + s - 1, n)}}));
      return out;
    }
  }
  if (has_table("g-n" + std::to_string(n))) {
    auto cws = instantiate(get_table("g-n" + std::to_string(n)), {.n = n});
    // the shipped lists start at difference r_m; only reuse when it matches
    bool fits = true;
    for (const Codeword& cw : cws)
      for (const Point& p : cw.points())
        if (p.col != 0 && p.col < rm) fits = false;
    if (fits) {
      for (const Codeword& cw : cws) {
        std::vector<Point> pts;
        for (const Point& p : cw.points()) pts.push_back({inf, p.col});
        out.push_back(Codeword(std::move(pts)));
      }
      return out;
    }
  }
  // residual completion: find s further pure-difference triples on the row
  CoverProblem p;
  p.rows = rows;
  p.modulus = n;
  p.fill(Slot::Forbidden);
  for (int d = 1; d < n; ++d)
    if (d != n / 2) p.at(inf, inf, d) = Slot::Required;
  auto forbid = [&](const Codeword& cw) {
    for (const Point& a : cw.points())
      for (const Point& b : cw.points()) {
        if (a == b || a.row != inf || b.row != inf) continue;
        p.at(inf, inf, (int)imod(a.col - b.col, n)) = Slot::Forbidden;
      }
  };
  for (const Codeword& cw : built_so_far) forbid(cw);
  for (const Codeword& cw : out) forbid(cw);
  p.target_blocks = s;
  for (const Codeword& cw : cover_search(p)) out.push_back(cw);
  return out;
}

// The four-part assembly for m in {5,7,8,10} on (I_{m-1} + infinity) x Z_n.
OocCode four_part(int m, int n) {
  const int inf = m - 1;
  const int em = 3 * ((m - 3) / 3);
  std::vector<Codeword> cws = schgdd(m - 1, 2, n / 2).base_blocks;
  const int v = (n - 2) / 2;
  for (int i = 0; i <= m - 2; ++i) {
    int k = i < em ? n / 2 : 2 * (i - em) + 1;
    SkolemSequence S = extended_skolem(v, k);
    for (int t = 1; t <= v; ++t)
      cws.push_back(
          Codeword(std::vector<Point>{{i, 0}, {i, t}, {inf, (int)imod(S.pairs[t - 1].first + t, n)}}));
  }
  for (int i = em; i <= m - 2; ++i)
    cws.push_back(Codeword(std::vector<Point>{{i, 0}, {inf, 0}, {inf, 2 * (i - em) + 1}}));
  for (const Codeword& cw :
       instantiate(get_table("thirdpart-m" + std::to_string(m)), {.n = n}))
    cws.push_back(cw);
  for (const Codeword& cw : fourth_part(m, n, inf, cws, m)) cws.push_back(cw);
  return from_codewords(m, n, 0, 0, std::move(cws), "four-part");
}

// m = 4 assemblies on (I_3 + infinity) x Z_n.
OocCode m4_assembly(int n) {
  const int inf = 3, v = (n - 2) / 2;
  std::vector<Codeword> cws;
  if (n % 24 == 4) {
    cws = schgdd(3, 4, n / 4).base_blocks;
    const int ks[3] = {n / 2 - 1, n / 2 - 3, n - 1};
    const int beta[3] = {1, 1, 0};
    for (int i = 0; i < 3; ++i) {
      SkolemSequence S = i == 2 ? extended_skolem_pinned(v, n - 1, {n / 2, n - 2})
                                : extended_skolem(v, ks[i]);
      for (int t = 1; t <= v; ++t) {
        if (i == 2 && t == (n - 4) / 2) continue;
        cws.push_back(Codeword(std::vector<Point>{{i, 0}, {i, t}, {inf, (int)imod(S.pairs[t - 1].first + t + beta[i], n)}}));
      }
    }
    for (const Codeword& cw : instantiate(get_table("m4-third-a"), {.n = n})) cws.push_back(cw);
    int s = (n - 4) / 6;
    SkolemSequence N = near_skolem(s + 1, 1);
    for (auto [c, d] : N.pairs)
      cws.push_back(Codeword(std::vector<Point>{{inf, 0}, {inf, c + s + 1}, {inf, d + s + 1}}));
  } else if (n % 24 == 22) {
    cws = schgdd(3, 2, n / 2).base_blocks;
    const int ks[3] = {n - 2, n / 2 - 1, n / 2 - 1};
    const int beta[3] = {0, 0, n / 2};
    for (int i = 0; i < 3; ++i) {
      SkolemSequence S = i == 0 ? extended_skolem_pinned(v, n - 2, {n / 2, n - 1})
                                : extended_skolem(v, ks[i]);
      for (int t = 1; t <= v; ++t) {
        if (i == 0 && t == (n - 2) / 2) continue;
        cws.push_back(Codeword(std::vector<Point>{{i, 0}, {i, t}, {inf, (int)imod(S.pairs[t - 1].first + t + beta[i], n)}}));
      }
    }
    for (const Codeword& cw : instantiate(get_table("m4-third-b"), {.n = n})) cws.push_back(cw);
    int s = (n - 4) / 6;
    SkolemSequence L = langford(s, 2);
    for (auto [c, d] : L.pairs)
      cws.push_back(Codeword(std::vector<Point>{{inf, 0}, {inf, c + s + 1}, {inf, d + s + 1}}));
  } else {
    fail(Errc::UnsupportedParams, "m=4 assembly needs n = 4 or 22 (mod 24)");
  }
  return from_codewords(4, n, 0, 0, std::move(cws), "m4-assembly");
}

// m = 7, n = 22 (mod 24): 30 fixed codewords + a row-developed family.
OocCode m7_n22(int n) {
  std::vector<Codeword> cws = instantiate(get_table("m7n22-first"), {.n = n});
  std::vector<Codeword> init;
  if (n == 22) {
    init = instantiate(get_table("m7n22-n22"), {.n = n});
  } else {
    for (int i = 0; i <= n / 2 - 4; ++i) {
      if (i == (n - 10) / 4) continue;
      init.push_back(Codeword(std::vector<Point>{{0, 0}, {1, 2 + i}, {3, (int)imod(4 + 2 * i, n)}}));
    }
    for (int i = 0; i <= n / 2 - 5; ++i) {
      if (i == (n - 10) / 4) continue;
      init.push_back(Codeword(std::vector<Point>{{0, 0}, {1, n / 2 + 2 + i}, {3, (int)imod(5 + 2 * i, n)}}));
    }
    for (const Codeword& cw : instantiate(get_table("m7n22-p1fix"), {.n = n})) init.push_back(cw);
    if (n == 46) {
      for (const Codeword& cw : instantiate(get_table("m7n22-n46"), {.n = n})) init.push_back(cw);
    } else {
      for (int i = 0; i <= (n - 46) / 12; ++i) {
        if (i != (n - 70) / 24 || (n - 70) % 24 != 0)
          init.push_back(Codeword(std::vector<Point>{{0, 0}, {0, 5 + 2 * i}, {0, (5 * n + 22) / 12 + i}}));
        if (i != (n - 46) / 24 || (n - 46) % 24 != 0)
          init.push_back(Codeword(std::vector<Point>{{0, 0}, {0, 6 + 2 * i}, {0, (n + 14) / 4 + i}}));
      }
      init.push_back(Codeword(std::vector<Point>{{0, 0}, {0, 1}, {0, (5 * n - 14) / 12}}));
      init.push_back(Codeword(std::vector<Point>{{0, 0}, {0, 2}, {0, (n + 10) / 4}}));
      init.push_back(Codeword(std::vector<Point>{{0, 0}, {0, 3}, {0, (n + 26) / 12}}));
      init.push_back(Codeword(std::vector<Point>{{0, 0}, {0, (n + 2) / 6}, {0, (3 * n - 2) / 8}}));
      init.push_back(Codeword(std::vector<Point>{{0, 0}, {0, (n - 4) / 6}, {0, (7 * n + 2) / 12}}));
      init.push_back(Codeword(std::vector<Point>{{0, 0}, {0, (n - 2) / 4}, {0, (13 * n + 26) / 24}}));
    }
  }
  for (const Codeword& cw : develop_rows(init, 1, 7, 7, {})) cws.push_back(cw);
  return from_codewords(7, n, 0, 0, std::move(cws), "m7-n22-family");
}

// m = 11, n = 14 (mod 24): the five-part assembly on (I_10 + infinity) x Z_n.
OocCode m11_fivepart(int n) {
  const int inf = 10, v = (n - 2) / 2;
  const int G[3][3] = {{0, 5, 8}, {1, 3, 7}, {2, 4, 6}};
  std::vector<Codeword> cws;
  // part 1: one SCHGDD (3, 2^{n/2}) per block of a 3-GDD of type 3^3 on I_9
  DesignObject sch = schgdd(3, 2, n / 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::vector<int> rows = {G[0][i], G[1][j], G[2][(i + j) % 3]};
      std::vector<int> relabel(3);
      for (int a = 0; a < 3; ++a) relabel[a] = rows[a];
      for (const Codeword& b : sch.base_blocks) cws.push_back(relabel_rows(b, relabel));
    }
  // part 2: three pinned n-cyclic GDDs of type n^4, minus four blocks
  Codeword t_rows0 = Codeword(std::vector<Point>{{0, 0}, {1, 0}, {2, 0}});
  Codeword t_extra = Codeword(std::vector<Point>{{0, 0}, {1, 2}, {2, 4}});
  auto slug1 = "ngdd-n4-pin1-" + std::to_string(n);
  auto slug2 = "ngdd-n4-pin2-" + std::to_string(n);
  DesignObject g1 = cache::design(slug1, [&] {
    DesignSpec spec;
    spec.kind = DesignKind::NCyclicGdd;
    spec.type = GroupType{{n, 4}};
    spec.modulus = n;
    spec.pinned = {t_rows0};
    return find_design(spec);
  });
  DesignObject g2 = cache::design(slug2, [&] {
    DesignSpec spec;
    spec.kind = DesignKind::NCyclicGdd;
    spec.type = GroupType{{n, 4}};
    spec.modulus = n;
    spec.pinned = {t_rows0, t_extra};
    return find_design(spec);
  });
  for (int gi = 0; gi < 3; ++gi) {
    const DesignObject& src = gi == 2 ? g2 : g1;
    std::vector<int> relabel = {G[gi][0], G[gi][1], G[gi][2], 9};
    std::set<Codeword> skip;
    skip.insert(relabel_rows(t_rows0, relabel));
    if (gi == 2) skip.insert(relabel_rows(t_extra, relabel));
    for (const Codeword& b : src.base_blocks) {
      Codeword r = relabel_rows(b, relabel);
      if (!skip.count(r)) cws.push_back(r);
    }
  }
  // part 3: pair systems with chained offsets
  int ks[10] = {4, 2, 2, 2, n / 2 - 3, 4, 2, 4, 2, n / 2 - 1};
  std::vector<SkolemSequence> S;
  for (int i = 0; i < 10; ++i) S.push_back(extended_skolem(v, ks[i]));
  auto a_of = [&](int i, int t) { return S[i].pairs[t - 1].first; };
  int u = (int)imod(a_of(4, (n - 4) / 2) + (n - 4) / 2, n);
  int vv = (int)imod(a_of(2, 4) + 4 + u + 2, n);
  int w = (int)imod(a_of(6, 2) + 2 + vv + 2, n);
  auto emit = [&](int i, int off, int skip_t) {
    for (int t = 1; t <= v; ++t) {
      if (t == skip_t) continue;
      cws.push_back(Codeword(std::vector<Point>{{i, 0}, {i, t}, {inf, (int)imod(a_of(i, t) + t + off, n)}}));
    }
  };
  emit(4, 0, (n - 4) / 2);
  emit(2, u + 2, 4);
  emit(6, vv + 2, 2);
  int beta[10] = {vv - 4, vv, 0, w, 0, vv - n / 2, 0, w - 2, u + 2, 0};
  for (int i : {0, 1, 3, 5, 7, 8, 9}) emit(i, beta[i], 0);
  // part 4
  int s4 = (n - 8) / 6;
  SkolemSequence T = extended_skolem(s4, (n - 5) / 3);
  for (int t = 1; t <= s4; ++t)
    cws.push_back(Codeword(std::vector<Point>{{inf, 0}, {inf, t}, {inf, (int)imod(T.pairs[t - 1].first + t + s4, n)}}));
  // part 5
  for (const Codeword& cw :
       instantiate(get_table("fivepart-a5"), {.n = n, .u = u, .v = vv, .w = w}))
    cws.push_back(cw);
  return from_codewords(11, n, 0, 0, std::move(cws), "m11-five-part");
}

// The n-cyclic GDD of type (3n)^{(m-r)/3} (rn)^1 for n = 2 (mod 4), built by
// weighting a 2-cyclic GDD of type 6^{4t} (2r)^1 where m = 12t + r.
DesignObject gdd_3n_rn(int m, int r, int n) {
  if (n % 4 != 2) fail(Errc::UnsupportedParams, "need n = 2 (mod 4)");
  if (m < 13 || imod(m - r, 12) != 0) fail(Errc::InvalidParams, "need m = r (mod 12), m >= 13");
  std::function<DesignObject(int)> base = [&](int tt) -> DesignObject {
    if (tt <= 2) {
      if (r == 9) {
        DesignObject six =
            std::get<DesignObject>(appendix_load('A', "t" + std::to_string(tt) + "-r9"));
        return fold_design(six, 3);
      }
      std::string slug =
          "ngdd-6x" + std::to_string(4 * tt) + "_" + std::to_string(2 * r) + "x1-m2";
      return cache::design(slug, [&] {
        DesignSpec spec;
        spec.kind = DesignKind::NCyclicGdd;
        spec.type = GroupType{{6, 4 * tt}, {2 * r, 1}};
        spec.modulus = 2;
        return find_design(spec);
      });
    }
    std::map<int, DesignObject> fillers;
    fillers[12] = base(1);  // each group of 12 rows receives a 6^4 (2r)^1 filler
    return fill_gdd(ncyclic_gdd_uniform(12, 2, tt), fillers, r);
  };
  return weight_gdd(base((m - r) / 12), cyclic_gdd_q3(n / 2));
}

// The 2-cyclic GDD of type 2^{m-r} (2r)^1 ("semi-cyclic incomplete GDD").
DesignObject scigdd_2m(int m, int r) {
  if (r == 8 && (m == 20 || m == 32))
    return std::get<DesignObject>(appendix_load('B', m == 20 ? "t1" : "t2"));
  if (r == 8 && m >= 44 && imod(m - 8, 12) == 0) {
    std::map<int, DesignObject> fillers;
    fillers[12] = scigdd_2m(20, 8);
    return fill_gdd(ncyclic_gdd_uniform(12, 2, (m - 8) / 12), fillers, 8);
  }
  std::string slug = "scigdd-2x" + std::to_string(m - r) + "_" + std::to_string(2 * r) + "x1";
  return cache::design(slug, [&] {
    DesignSpec spec;
    spec.kind = DesignKind::NCyclicGdd;
    spec.type = GroupType{{2, m - r}, {2 * r, 1}};
    spec.modulus = 2;
    return find_design(spec);
  });
}

// SCIHGDD of type (m-1, r-1, 2^{n/2}) for m = r (mod 12), m >= 13,
// n = 0,2 (mod 8).
DesignObject scihgdd2(int m, int r, int n) {
  auto as_scihgdd = [](DesignObject d, int hole) {
    d.kind = DesignKind::Scihgdd;
    d.hole_rows = hole;
    return d;
  };
  auto hgdd_3e = [&](int rows, int e) {
    return regular_to_hgdd(regular_3xn(n), rows, e);
  };
  if (r == 1 || r == 2) return as_scihgdd(schgdd(m - 1, 2, n / 2), r - 1);
  if (r == 4 || r == 5)
    return fill_cyclic_hgdd(hgdd_3e((m - r) / 3 + 1, 1),
                            as_scihgdd(schgdd(r - 1, 2, n / 2), r - 4));
  if (r == 7 || r == 8)
    return fill_cyclic_hgdd(hgdd_3e((m - r) / 6 + 1, 2),
                            as_scihgdd(schgdd(r - 1, 2, n / 2), r - 7));
  if (r == 10 || r == 11) {
    DesignObject inner = fill_cyclic_hgdd(hgdd_3e(3, 1),
                                          as_scihgdd(schgdd(r - 7, 2, n / 2), r - 10));
    return fill_cyclic_hgdd(hgdd_3e((m - r) / 6 + 1, 2), inner);
  }
  fail(Errc::UnsupportedParams, "no SCIHGDD recipe for r = " + std::to_string(r));
}

}  // namespace

// ---- hole and regular builders ----------------------------------------------

OocCode build_hole(int m, int r, int n) {
  if (r < 0 || r > m || n < 1) fail(Errc::InvalidParams, "bad hole parameters");
  if (m == 3 && r == 0 && (n % 8 == 0 || n % 8 == 6)) return arm(hole_3_0(n), "hole-3-0");
  if (m == 5 && r == 2 && (n % 8 == 0 || n % 8 == 6)) return arm(hole_5_2(n), "hole-5-2");
  if (m == 9 && r == 3 && n % 8 == 4 && n >= 12) return arm(hole_9_3(n), "hole-9-3");
  if (m == 4 && r == 1 && (n % 8 == 0 || n % 8 == 2) && n >= 8) {
    // regular [4:1] x n filled with the [4:1] x 2 seed
    DesignObject seed = ncyclic_gdd_uniform(1, 2, 4);
    OocCode seed_code = from_codewords(4, 2, 1, 0, seed.base_blocks, "seed-4-1-2");
    seed_code.prov.children.push_back(seed.prov);
    return arm(fill_regular(build_regular(4, 1, n, 2), seed_code), "hole-4-1");
  }
  if (n == 4 && r >= 1 && r <= 5 && m >= 7 && m % 6 == r) {
    int t = (m - r) / 6;
    if (t <= 2) return arm(hole_m_r_n4(t, r), "hole-mr-n4-direct");
    GdpExpand spec;
    spec.new_hole_rows = r;
    spec.filler_by_rows[6] = build_hole(6 + r, r, 4);
    return arm(gdp_expand(ncyclic_gdd_uniform(6, 4, t), spec), "hole-mr-n4-gdd");
  }
  if (n % 4 == 0 && n >= 8 && r >= 1 && r <= 5 && r != 3 && m >= 7 && m % 6 == r) {
    int t = (m - r) / 6;
    if (t <= 2) return arm(hole_6t_r(t, r, n), "hole-mr-n4t-direct");
    GdpExpand spec;
    spec.new_hole_rows = r;
    spec.filler_by_rows[6] = build_hole(6 + r, r, n);
    return arm(gdp_expand(ncyclic_gdd_uniform(6, n, t), spec), "hole-mr-n4t-gdd");
  }
  if (r == 3 && m % 6 == 3 && m >= 21 && m != 15 && n % 8 == 4 && n >= 12) {
    GdpExpand spec;
    spec.new_hole_rows = 3;
    spec.filler_by_rows[6] = build_hole(9, 3, n);
    return arm(gdp_expand(ncyclic_gdd_uniform(6, n, (m - 3) / 6), spec), "hole-m3-gdd");
  }
  if (m == 10 && r == 1 && n % 8 == 6) {
    GdpExpand spec;
    spec.absorb_smallest_group = true;
    spec.filler_by_rows[3] = hole_3_0(n);
    DesignObject gdd = weight_gdd(gdd_6321(), cyclic_gdd_q3(n / 2));
    return arm(gdp_expand(gdd, spec), "hole-10-1");
  }
  if (m == 11 && r == 2 && n % 8 == 2 && n >= 10) {
    GdpExpand spec;
    spec.absorb_smallest_group = true;
    spec.new_hole_rows = 1;
    spec.filler_by_rows[3] = build_hole(4, 1, n);
    DesignObject gdd = weight_gdd(gdd_6321(), cyclic_gdd_q3(n / 2));
    return arm(gdp_expand(gdd, spec), "hole-11-2");
  }
  if (m >= 13 && m % 12 == r && n % 8 == 6) {
    GdpExpand spec;
    spec.absorb_smallest_group = true;
    if (r == 1 || r == 2 || r == 5 || r == 8) {
      spec.filler_by_rows[3] = hole_3_0(n);
      return arm(gdp_expand(gdd_3n_rn(m, r, n), spec), "hole-big-n8t6");
    }
    if (r == 4 || r == 7 || r == 10 || r == 11) {
      // [5:2] fillers over two shared rows; the (r-2)-row group is absorbed
      spec.new_hole_rows = 2;
      spec.filler_by_rows[3] = hole_5_2(n);
      return arm(gdp_expand(gdd_3n_rn(m - 2, r - 2, n), spec), "hole-big-n8t6");
    }
  }
  if (m >= 13 && m % 12 == r && n % 8 == 2) {
    if (n == 2) {
      // the semi-cyclic incomplete GDD of type 2^{(m,r)} read as a hole code;
      // its r-row group becomes the hole prefix
      DesignObject d = scigdd_2m(m, r);
      std::vector<int> hole_rows;
      for (int i = 0; i < d.num_rows; ++i)
        if (d.row_group[i] == d.row_group[0]) hole_rows.push_back(i);
      if ((int)hole_rows.size() != r) {
        hole_rows.clear();
        std::map<int, int> sizes;
        for (int g : d.row_group) sizes[g]++;
        for (int i = 0; i < d.num_rows; ++i)
          if (sizes[d.row_group[i]] == r) hole_rows.push_back(i);
      }
      std::vector<int> perm(d.num_rows, -1);
      int next = 0;
      for (int rr : hole_rows) perm[rr] = next++;
      for (int rr = 0; rr < d.num_rows; ++rr)
        if (perm[rr] < 0) perm[rr] = next++;
      std::vector<Codeword> cws;
      for (const Codeword& b : d.base_blocks) cws.push_back(relabel_rows(b, perm));
      OocCode out = from_codewords(m, 2, r, 0, std::move(cws), "hole-big-n2");
      out.prov.children.push_back(d.prov);
      return arm(std::move(out), "hole-big-n2");
    }
    return arm(fill_regular(build_regular(m, r, n, 2), build_hole(m, r, 2)), "hole-big-n8t2");
  }
  fail(Errc::OutOfConstructiveScope,
       "no hole construction for [" + std::to_string(m) + ":" + std::to_string(r) + "] x " +
           std::to_string(n));
}

OocCode build_regular(int m, int r, int n, int g) {
  if (g < 1 || n % g != 0) fail(Errc::InvalidParams, "need g | n");
  if (m == 1 && r == 0) {
    DesignObject d = strict_cyclic_gdd(g, n / g);
    std::vector<Codeword> cws;
    for (const Codeword& b : d.base_blocks) {
      std::vector<Point> pts;
      for (const Point& p : b.points()) pts.push_back({0, p.col});
      cws.push_back(Codeword(std::move(pts)));
    }
    OocCode c = from_codewords(1, n, 0, g, std::move(cws), "regular-1xn");
    c.prov.children.push_back(d.prov);
    return arm(std::move(c), "regular-1xn");
  }
  if (g == 2 && m == 2 && r == 1) return arm(regular_21xn(n), "regular-2-1");
  if (g == 2 && m == 3 && r == 0 && (n % 8 == 0 || n % 8 == 2)) return arm(regular_3xn(n), "regular-3");
  if (g == 2 && m == 6 && r == 0 && n % 4 == 2 && n >= 6) return arm(regular_6xn(n), "regular-6");
  if (g == 2 && m == 4 && r == 1 && (n % 8 == 0 || n % 8 == 2) && n >= 8) {
    DesignObject sch = schgdd(3, 2, n / 2);
    sch.kind = DesignKind::Scihgdd;
    sch.hole_rows = 0;
    return arm(fill_ihgdd(sch, regular_21xn(n)), "regular-4-1");
  }
  if (r == 0 && g == 2 && m % 6 == 3 && m > 3 && (n % 8 == 0 || n % 8 == 2) && n >= 8)
    return arm(inflate_regular(regular_3xn(n), m / 3), "regular-3t");
  if (r == 0 && g == 2 && m % 12 == 6 && m > 6 && n % 4 == 2 && n >= 6)
    return arm(inflate_regular(regular_6xn(n), m / 6), "regular-6t");
  if (r == 0 && m >= 2 && imod(n - g, 6) == 0 && n >= 4 * g &&
      !(imod(g, 4) == 2 && (imod(n / g, 4) == 2 || imod(n / g, 4) == 3)))
    return arm(inflate_regular(build_regular(1, 0, n, g), m), "regular-inflate-1xn");
  if (g == 2 && m >= 13 && m % 12 == r && (n % 8 == 0 || n % 8 == 2) && n >= 8)
    return arm(fill_ihgdd(scihgdd2(m, r, n), regular_21xn(n)), "regular-big");
  fail(Errc::OutOfConstructiveScope, "no regular construction for these parameters");
}

OocCode build_optimal(int m, int n) {
  if (m < 1 || n < 1) fail(Errc::InvalidParams, "need m, n >= 1");
  const int64_t target = johnson(m, n, 3, 1) - mu(m, n).mu;

  if (m == 1) return arm(checked_optimal(ooc_1d(n), "1-D code"), "m1-1d");
  if (n % 2 == 1) {
    if ((int64_t)m * n <= 16) {
      MaxOocResult res = max_ooc(m, n);
      if (res.size != target) fail(Errc::VerifyFailed, "search oracle missed the target size");
      OocCode c = res.witness;
      c.prov = {"search-oracle", {}};
      return arm(std::move(c), "odd-n-search");
    }
    fail(Errc::OutOfConstructiveScope,
         "odd n > 1 is outside the constructive tree; target size " + std::to_string(target));
  }

  auto done = [&](OocCode c, const char* label) {
    return checked_optimal(arm(std::move(c), label), "optimal (" + std::to_string(m) + "," +
                                                          std::to_string(n) + ")");
  };

  if (n == 2) return done(build_n2(m), "n2-gdp");
  if (n == 4) {
    if (m % 6 == 0) return done(fold(build_optimal(3, 4 * m / 3), m / 3), "m0mod3-fold");
    if (m <= 5) return done(table_code("n4-m" + std::to_string(m)), "n4-small");
    int r = m % 6;
    return done(fill_hole(build_hole(m, r, 4), build_optimal(r, 4)), "n4-fill");
  }
  if (n == 6 && (m == 7 || m == 8 || m == 10 || m == 11))
    return done(table_code("e-m" + std::to_string(m)), "n6-appendix");
  if (n == 10 && (m == 7 || m == 10))
    return done(table_code("f-m" + std::to_string(m)), "n10-appendix");

  if (m == 2) {
    if (n == 6) return done(table_code("ex-2x6"), "m2-example");
    if (n % 6 == 2 || n % 12 == 4) return done(fold(ooc_1d(2 * n), 2), "m2-fold");
    return done(build_m2_direct(n), "m2-pairs");
  }
  if (m == 3) {
    if (n % 8 == 0 || n % 8 == 6) return done(hole_3_0(n), "m3-theta");
    return done(build_m3_direct(n), "m3-pairs");
  }
  if (m % 3 == 0) {
    int64_t mn24 = imod((int64_t)m * n, 24);
    if (mn24 == 0 || mn24 == 18)
      return done(fold(build_optimal(3, n * (m / 3)), m / 3), "m0mod3-fold");
    // mn = 6, 12 (mod 24)
    if (m % 12 == 9 && n % 8 == 6) {
      GdpExpand spec;
      spec.filler_by_rows[3] = hole_3_0(n);
      return done(gdp_expand(ncyclic_gdp(3, n, m / 3), spec), "m0mod3-gdp");
    }
    if ((m % 12 == 3 && n % 8 == 2) || (m % 12 == 6 && n % 4 == 2))
      return done(fill_regular(build_regular(m, 0, n, 2), build_optimal(m, 2)),
                  "m0mod3-regular");
    if (m % 6 == 3 && n % 8 == 4) {
      if (m == 15) return done(fold(build_optimal(5, 3 * n), 3), "m0mod3-fold15");
      return done(fill_hole(build_hole(m, 3, n), build_optimal(3, n)), "m0mod3-hole3");
    }
    fail(Errc::IngredientGap, "unreachable branch of the m = 0 (mod 3) case");
  }
  if (m == 4) {
    if (n % 8 == 0 || n % 8 == 2)
      return done(fill_hole(build_hole(4, 1, n), ooc_1d(n)),
                  n % 8 == 0 ? "m45-n0mod8" : "m4-n2mod8");
    int n24 = n % 24;
    if (n24 == 14 || n24 == 20) return done(fold(ooc_1d(4 * n), 4), "m4-fold-1d");
    if (n24 == 6 || n24 == 12) return done(fold(build_optimal(2, 2 * n), 2), "m4-fold-m2");
    return done(m4_assembly(n), "m4-assembly");
  }
  if (m == 5) {
    if (n % 8 == 0 || n % 8 == 6)
      return done(fill_hole(build_hole(5, 2, n), build_optimal(2, n)),
                  n % 8 == 0 ? "m45-n0mod8" : "m5-n6mod8");
    if (n == 12) return done(table_code("t5x12"), "m5-5x12");
    int n24 = n % 24;
    if (n24 == 10) return done(fold(ooc_1d(5 * n), 5), "mX-fold-1d");
    if (n24 == 4) return done(fill_regular(build_regular(5, 0, n, 4), build_optimal(5, 4)),
                              "m5-4regular");
    return done(four_part(5, n), "four-part");
  }
  // m in {7, 8, 10, 11} (and m = 1,2 mod 3, m >= 13)
  if (m <= 11) {
    if (n % 4 == 0) {
      int r = m % 6;
      return done(fill_hole(build_hole(m, r, n), build_optimal(r, n)), "n4t-fill");
    }
    if (n % 8 == 2) {
      if (m == 11)
        return done(fill_hole(build_hole(11, 2, n), build_optimal(2, n)), "m11-fill");
      int n24 = n % 24;
      if (m == 8 && n24 == 10) return done(fold(ooc_1d(8 * n), 8), "mX-fold-1d");
      if ((m == 7 || m == 10) && n24 == 2)
        return done(fill_regular(build_regular(m, 0, n, 2), build_optimal(m, 2)),
                    "mX-2regular");
      return done(four_part(m, n), "four-part");
    }
    // n = 6 (mod 8)
    if (m == 10) return done(fill_hole(build_hole(10, 1, n), ooc_1d(n)), "m10-fill");
    int n24 = n % 24;
    if (n24 == 6)
      return done(fill_regular(build_regular(m, 0, n, 6), build_optimal(m, 6)), "mX-6regular");
    if (m == 7 && n24 == 14) return done(fold(ooc_1d(7 * n), 7), "mX-fold-1d");
    if (m == 8 && n24 == 14) return done(fold(build_optimal(4, 2 * n), 2), "m8-fold-m4");
    if (m == 8 && n24 == 22) return done(fold(ooc_1d(8 * n), 8), "mX-fold-1d");
    if (m == 11 && n24 == 22) return done(fold(ooc_1d(11 * n), 11), "mX-fold-1d");
    if (m == 7 && n24 == 22) return done(m7_n22(n), "m7-n22");
    if (m == 11 && n24 == 14) return done(m11_fivepart(n), "m11-five-part");
    fail(Errc::IngredientGap, "unreachable branch for m <= 11");
  }
  // m >= 13, m = 1,2 (mod 3)
  if (n % 4 == 0) {
    int r = m % 6;
    return done(fill_hole(build_hole(m, r, n), build_optimal(r, n)), "n4t-fill");
  }
  int r = m % 12;
  return done(fill_hole(build_hole(m, r, n), build_optimal(r, n)),
              n % 8 == 6 ? "big-n8t6" : "big-n8t2");
}

SizeReport size_report(int m, int n, int r, int g) {
  SizeReport rep;
  rep.J = johnson(m, n, 3, 1);
  auto mures = mu(m, n);
  rep.mu = mures.mu;
  rep.branch = mures.branch;
  rep.delta = delta_1d(n);
  rep.eta = eta(m, n);
  if (n % 2 == 0) rep.J_star = j_star(m, n);
  if (r >= 0 && n % 2 == 0) rep.theta = theta(m, r, n, 3);
  if (g >= 1 && n % g == 0) {
    try {
      rep.upsilon = upsilon(m, r < 0 ? 0 : r, n, g, 3);
    } catch (const Error&) {
      rep.upsilon = -1;
    }
  }
  return rep;
}

std::vector<std::string> fired_arms(const Provenance& prov) {
  std::vector<std::string> out;
  std::function<void(const Provenance&)> walk = [&](const Provenance& p) {
    if (p.label.rfind("arm:", 0) == 0) out.push_back(p.label.substr(4));
    for (const Provenance& c : p.children) walk(c);
  };
  walk(prov);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> all_even_arms() {
  return {"n2-gdp",      "n4-small",   "n4-fill",      "n6-appendix",  "n10-appendix",
          "m1-1d",       "m2-example", "m2-fold",      "m2-pairs",     "m3-theta",
          "m3-pairs",    "m0mod3-fold", "m0mod3-gdp",  "m0mod3-regular", "m0mod3-hole3",
          "m45-n0mod8",  "m4-n2mod8",  "m4-fold-1d",   "m4-fold-m2",   "m5-n6mod8",
          "m5-5x12",     "mX-fold-1d", "four-part",    "n4t-fill",     "m11-fill",
          "m10-fill",    "mX-6regular", "m8-fold-m4",  "m7-n22",       "m11-five-part",
          "m5-4regular", "mX-2regular", "m4-assembly", "m0mod3-fold15", "big-n8t6",
          "big-n8t2"};
}

}  // namespace ooc
