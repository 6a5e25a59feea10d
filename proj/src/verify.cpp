#include "ooc/verify.hpp"

#include <algorithm>
#include <set>

namespace ooc {

namespace {

// Applies fn(i, j, d) for every ordered difference of a codeword.
template <typename F>
void for_each_difference(const Codeword& cw, int n, F&& fn) {
  const auto& pts = cw.points();
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = 0; b < pts.size(); ++b) {
      if (a == b) continue;
      fn(pts[a].row, pts[b].row, (int)imod(pts[a].col - pts[b].col, n));
    }
}

}  // namespace

DiffTable diff_table(const OocCode& code) {
  const int m = code.params.m, n = code.params.n;
  DiffTable t;
  t.m = m;
  t.n = n;
  t.counts.assign((size_t)m * m * n, 0);
  for (const Codeword& cw : code.codewords)
    for_each_difference(cw, n, [&](int i, int j, int d) {
      if (!(i == j && d == 0)) t.at(i, j, d)++;
    });
  return t;
}

VerificationReport verify_ooc(const OocCode& code) {
  const int m = code.params.m, n = code.params.n;
  VerificationReport rep;
  if (code.params.lambda != 1) {
    rep.ok = false;
    rep.reason = "difference method requires lambda = 1";
    return rep;
  }
  for (const Codeword& cw : code.codewords) {
    for (const Point& p : cw.points())
      if (p.row < 0 || p.row >= m || p.col < 0 || p.col >= n) {
        rep.ok = false;
        rep.reason = "codeword point outside I_m x Z_n";
        return rep;
      }
    if (cw.size() != code.params.k) {
      rep.ok = false;
      rep.reason = "codeword weight differs from k";
      return rep;
    }
  }

  DiffTable t;
  t.m = m;
  t.n = n;
  t.counts.assign((size_t)m * m * n, 0);
  auto find_witness = [&](int wi, int wj, int wd) {
    Witness w;
    w.i = wi;
    w.j = wj;
    w.residue = wd;
    for (const Codeword& cw : code.codewords) {
      bool covers = false;
      for_each_difference(cw, n, [&](int i, int j, int d) {
        if (i == wi && j == wj && d == wd) covers = true;
      });
      if (covers) {
        if (!w.first)
          w.first = cw;
        else if (!w.second) {
          w.second = cw;
          break;
        }
      }
    }
    return w;
  };

  for (const Codeword& cw : code.codewords) {
    bool bad = false;
    int bi = 0, bj = 0, bd = 0;
    for_each_difference(cw, n, [&](int i, int j, int d) {
      if (bad) return;
      if (i == j && d == 0) {  // same row, difference 0 happens only via distinct cols n/2 pairs
        return;
      }
      if (++t.at(i, j, d) > 1) {
        bad = true;
        bi = i;
        bj = j;
        bd = d;
      }
    });
    if (bad) {
      rep.ok = false;
      rep.reason = "difference covered twice";
      rep.witness = find_witness(bi, bj, bd);
      return rep;
    }
  }

  const int r = code.hole_rows;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int d = 0; d < n; ++d)
        if (t.at(i, j, d) != 0) {
          rep.ok = false;
          rep.reason = "hole rows produce differences";
          rep.witness = find_witness(i, j, d);
          return rep;
        }

  if (code.regular_g > 0) {
    const int g = code.regular_g;
    if (n % g != 0) {
      rep.ok = false;
      rep.reason = "regular subgroup order does not divide n";
      return rep;
    }
    const int step = n / g;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        bool in_hole = i < r && j < r;
        for (int d = 0; d < n; ++d) {
          int want = (!in_hole && d % step != 0) ? 1 : 0;
          if (t.at(i, j, d) != want) {
            rep.ok = false;
            rep.reason = "regular structure violated";
            rep.witness = find_witness(i, j, d);
            rep.witness->i = i;
            rep.witness->j = j;
            rep.witness->residue = d;
            return rep;
          }
        }
      }
  }
  return rep;
}

bool verify_correlation_matrix(const OocCode& code) {
  const int n = code.params.n, k = code.params.k, lambda = code.params.lambda;
  const int64_t b = code.size();
  if (mul_ck(mul_ck(b, b), mul_ck(n, mul_ck(k, k))) > 100000000LL)
    fail(Errc::TooLarge, "correlation oracle guard tripped");
  auto corr = [&](const Codeword& A, const Codeword& B, int tau) {
    int c = 0;
    for (const Point& p : A.points())
      for (const Point& q : B.points())
        if (p.row == q.row && p.col == (int)imod(q.col + tau, n)) ++c;
    return c;
  };
  for (int64_t x = 0; x < b; ++x) {
    for (int tau = 1; tau < n; ++tau)
      if (corr(code.codewords[x], code.codewords[x], tau) > lambda) return false;
    for (int64_t y = x + 1; y < b; ++y)
      for (int tau = 0; tau < n; ++tau)
        if (corr(code.codewords[x], code.codewords[y], tau) > lambda ||
            corr(code.codewords[y], code.codewords[x], tau) > lambda)
          return false;
  }
  return true;
}

namespace {

// Expected multiplicity of residue d in Delta_ij for a design, or -1 for
// "at most once" (GDP slots).
int design_expected(const DesignObject& d, int i, int j, int res) {
  switch (d.kind) {
    case DesignKind::StrictCyclicGdd:
      return 0;  // handled separately in verify_design
    case DesignKind::NCyclicGdd:
    case DesignKind::NCyclicGdp: {
      bool same = d.row_group[i] == d.row_group[j];
      if (same) return 0;
      return d.kind == DesignKind::NCyclicGdd ? 1 : -1;
    }
    case DesignKind::WtCyclicHgdd: {
      bool same = (i / d.group_rows) == (j / d.group_rows);
      if (same) return 0;
      int t = d.modulus / d.hole_order;
      return (res % t == 0) ? 0 : 1;
    }
    case DesignKind::Schgdd:
    case DesignKind::Scihgdd: {
      if (i == j) return 0;
      if (d.kind == DesignKind::Scihgdd && i < d.hole_rows && j < d.hole_rows) return 0;
      int t = d.modulus / d.hole_order;
      return (res % t == 0) ? 0 : 1;
    }
    case DesignKind::CosetGdd: {
      int finite = d.num_rows - d.hole_rows;
      bool ii = i >= finite, jj = j >= finite;
      if (ii && jj) return 0;
      if (!ii && !jj) {
        int q = d.modulus / d.hole_order;
        return (res % q == 0) ? 0 : 1;
      }
      return 1;
    }
  }
  return 0;
}

}  // namespace

int64_t design_expected_blocks(const DesignObject& d) {
  if (d.expected_blocks >= 0) return d.expected_blocks;
  // Derive from the difference condition: total required / k(k-1) with k = 3.
  if (d.kind == DesignKind::StrictCyclicGdd) {
    int64_t g = d.group_type.parts.at(0).first;
    int64_t u = d.group_type.parts.at(0).second;
    return g * (u - 1) / 6;
  }
  int64_t req = 0;
  for (int i = 0; i < d.num_rows; ++i)
    for (int j = 0; j < d.num_rows; ++j)
      for (int res = 0; res < d.modulus; ++res) {
        if (i == j && res == 0) continue;
        int e = design_expected(d, i, j, res);
        if (e == 1) ++req;
      }
  if (req % 6 != 0) fail(Errc::InvalidParams, "difference requirement not divisible by 6");
  return req / 6;
}

VerificationReport verify_design(const DesignObject& d) {
  VerificationReport rep;
  if (d.kind == DesignKind::StrictCyclicGdd) {
    // blocks are 3-subsets of Z_modulus stored with row 0
    if (d.group_type.parts.size() != 1) {
      rep.ok = false;
      rep.reason = "strictly cyclic type must be g^u";
      return rep;
    }
    int64_t g = d.group_type.parts[0].first, u = d.group_type.parts[0].second;
    if (g * u != d.modulus) {
      rep.ok = false;
      rep.reason = "type inconsistent with modulus";
      return rep;
    }
    std::vector<int> cnt(d.modulus, 0);
    for (const Codeword& b : d.base_blocks)
      for (const Point& p : b.points())
        for (const Point& q : b.points()) {
          if (p == q) continue;
          cnt[imod(p.col - q.col, d.modulus)]++;
        }
    for (int res = 0; res < d.modulus; ++res) {
      int want = (res % u == 0) ? 0 : 1;
      if (cnt[res] != want) {
        rep.ok = false;
        rep.reason = "strictly cyclic difference condition violated at " + std::to_string(res);
        rep.witness = Witness{0, 0, res, std::nullopt, std::nullopt};
        return rep;
      }
    }
    if ((int64_t)d.base_blocks.size() != design_expected_blocks(d)) {
      rep.ok = false;
      rep.reason = "base-block count mismatch";
      return rep;
    }
    return rep;
  }

  if ((d.kind == DesignKind::NCyclicGdd || d.kind == DesignKind::NCyclicGdp) &&
      (int)d.row_group.size() != d.num_rows) {
    rep.ok = false;
    rep.reason = "missing row-group map";
    return rep;
  }
  DiffTable t;
  t.m = d.num_rows;
  t.n = d.modulus;
  t.counts.assign((size_t)d.num_rows * d.num_rows * d.modulus, 0);
  for (const Codeword& b : d.base_blocks)
    for (const Point& p : b.points()) {
      if (p.row < 0 || p.row >= d.num_rows || p.col < 0 || p.col >= d.modulus) {
        rep.ok = false;
        rep.reason = "base-block point out of range";
        return rep;
      }
    }
  for (const Codeword& b : d.base_blocks)
    for (const Point& p : b.points())
      for (const Point& q : b.points()) {
        if (p == q) continue;
        if (p.row == q.row && p.col == q.col) continue;
        t.at(p.row, q.row, (int)imod(p.col - q.col, d.modulus))++;
      }
  for (int i = 0; i < d.num_rows; ++i)
    for (int j = 0; j < d.num_rows; ++j)
      for (int res = 0; res < d.modulus; ++res) {
        if (i == j && res == 0) continue;
        int e = design_expected(d, i, j, res);
        int have = t.at(i, j, res);
        bool bad = (e == -1) ? (have > 1) : (have != e);
        if (bad) {
          rep.ok = false;
          rep.reason = "difference condition violated";
          rep.witness = Witness{i, j, res, std::nullopt, std::nullopt};
          return rep;
        }
      }
  if ((int64_t)d.base_blocks.size() != design_expected_blocks(d)) {
    rep.ok = false;
    rep.reason = "base-block count mismatch: have " + std::to_string(d.base_blocks.size()) +
                 " want " + std::to_string(design_expected_blocks(d));
    return rep;
  }
  return rep;
}

void require_verified(const OocCode& code, const std::string& what) {
  auto rep = verify_ooc(code);
  if (!rep.ok) fail(Errc::VerifyFailed, what + ": " + rep.reason);
}

void require_verified(const DesignObject& d, const std::string& what) {
  auto rep = verify_design(d);
  if (!rep.ok) fail(Errc::VerifyFailed, what + ": " + rep.reason);
}

}  // namespace ooc
