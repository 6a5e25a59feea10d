#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ooc/bounds.hpp"
#include "ooc/combinators.hpp"
#include "ooc/ingredients.hpp"
#include "ooc/verify.hpp"

using namespace ooc;

TEST_CASE("fill_hole sizes add and shapes are checked") {
  OocCode outer = hole_5_2(8);
  OocCode inner = ooc_1d(8);
  // wrong inner size
  CHECK_THROWS_AS((void)fill_hole(outer, inner), Error);
  OocCode empty;
  empty.params = {2, 6, 3, 1};
  CHECK_THROWS_AS((void)fill_hole(outer, empty), Error);  // mismatched n
}

TEST_CASE("fill_regular scales inner columns") {
  OocCode full = optimal_6xn(6);
  CHECK(full.size() == 33);
  CHECK(verify_ooc(full).ok);
  // the scaled copy of the 6 x 2 seed sits inside on columns {0, 3}
  int on_subgroup = 0;
  for (const Codeword& cw : full.codewords) {
    bool all = true;
    for (const Point& p : cw.points()) all = all && (p.col % 3 == 0);
    on_subgroup += all;
  }
  CHECK(on_subgroup == 9);
}

TEST_CASE("weighting the 6^3 2^1 design") {
  DesignObject w = weight_gdd(gdd_6321(), cyclic_gdd_q3(3));
  CHECK(w.modulus == 6);
  CHECK(w.base_blocks.size() == 24 * 3);
  CHECK(verify_design(w).ok);
  // trivial weighting by 1^3 is an isomorphic copy
  DesignObject t = weight_gdd(gdd_6321(), cyclic_gdd_q3(1));
  CHECK(t.base_blocks.size() == 24);
}

TEST_CASE("inflation of a semi-cyclic holey GDD") {
  DesignObject h = inflate_schgdd(schgdd(3, 2, 4), 3);
  CHECK(h.kind == DesignKind::WtCyclicHgdd);
  CHECK(h.num_rows == 9);
  CHECK(h.base_blocks.size() == 6 * 9);
  CHECK(verify_design(h).ok);
}

TEST_CASE("regular_to_hgdd produces a verified design") {
  DesignObject h = regular_to_hgdd(regular_3xn(8), 3, 1);
  CHECK(h.num_rows == 9);
  CHECK(verify_design(h).ok);
  CHECK((int64_t)h.base_blocks.size() == 3 * 2 * 9 * 2 * (4 - 1) / 6);
}

TEST_CASE("fill_cyclic_hgdd composes shapes") {
  DesignObject hg = inflate_schgdd(schgdd(3, 2, 4), 3);
  DesignObject filler = schgdd(3, 2, 4);
  filler.kind = DesignKind::Scihgdd;
  filler.hole_rows = 0;
  DesignObject sci = fill_cyclic_hgdd(hg, filler);
  CHECK(sci.num_rows == 9);
  CHECK(sci.hole_rows == 3);
  CHECK(verify_design(sci).ok);
}

TEST_CASE("inflate_regular and fill_ihgdd") {
  OocCode r9 = inflate_regular(regular_3xn(8), 3);
  CHECK(r9.params.m == 9);
  CHECK(r9.size() == upsilon(9, 0, 8, 2, 3));
  CHECK(verify_ooc(r9).ok);

  DesignObject sch = schgdd(3, 2, 4);
  sch.kind = DesignKind::Scihgdd;
  sch.hole_rows = 0;
  OocCode reg41 = fill_ihgdd(sch, regular_21xn(8));
  CHECK(reg41.params.m == 4);
  CHECK(reg41.hole_rows == 1);
  CHECK(reg41.regular_g == 2);
  CHECK(reg41.size() == upsilon(4, 1, 8, 2, 3));
}

TEST_CASE("gdp_expand reproduces the [10:1] count") {
  GdpExpand spec;
  spec.absorb_smallest_group = true;
  spec.filler_by_rows[3] = hole_3_0(6);
  DesignObject gdd = weight_gdd(gdd_6321(), cyclic_gdd_q3(3));
  OocCode c = gdp_expand(gdd, spec);
  CHECK(c.params.m == 10);
  CHECK(c.hole_rows == 1);
  CHECK(c.size() == theta(10, 1, 6, 3));
}

TEST_CASE("fold identity and extremes") {
  OocCode c = ooc_1d(38);
  CHECK(fold(c, 1).codewords == c.codewords);
  OocCode two = fold(c, 2);
  CHECK(two.params.m == 2);
  CHECK(two.params.n == 19);
  CHECK(two.size() == 2 * c.size());
  OocCode all = fold(c, 38);
  CHECK(all.params.m == 38);
  CHECK(all.params.n == 1);
  CHECK(all.size() == 38 * c.size());
}

TEST_CASE("mutation of an accepted code is rejected with a witness") {
  OocCode c = optimal_6xn(6);
  OocCode bad = c;
  auto pts = bad.codewords[5].points();
  pts[0].col = (pts[0].col + 1) % 6;
  Codeword mutated = Codeword(pts);
  bad.codewords[5] = mutated;
  normalize(bad);
  auto rep = verify_ooc(bad);
  // a single changed column almost surely collides; if not, size dropped
  CHECK((!rep.ok || bad.size() < c.size()));
}
