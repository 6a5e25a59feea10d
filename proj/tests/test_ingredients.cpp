#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ooc/bounds.hpp"
#include "ooc/ingredients.hpp"
#include "ooc/io.hpp"
#include "ooc/verify.hpp"

using namespace ooc;

TEST_CASE("regular 6 x n family") {
  OocCode c6 = regular_6xn(6);
  CHECK(c6.size() == 24);
  CHECK(verify_ooc(c6).ok);
  OocCode c10 = regular_6xn(10);
  CHECK(c10.size() == 48);
  CHECK_THROWS_AS((void)regular_6xn(8), Error);
}

TEST_CASE("optimal 6 x n family") {
  CHECK(optimal_6xn(2).size() == 9);
  CHECK(optimal_6xn(6).size() == 33);
  CHECK_THROWS_AS((void)optimal_6xn(4), Error);
}

TEST_CASE("starter-based regular codes") {
  CHECK(regular_21xn(8).size() == 3);
  CHECK(regular_3xn(8).size() == 9);
  CHECK_THROWS_AS((void)regular_21xn(12), Error);
}

TEST_CASE("direct hole codes") {
  CHECK(hole_3_0(8).size() == 11);
  CHECK(hole_5_2(6).size() == 20);
  CHECK(hole_9_3(12).size() == 142);
  CHECK(hole_9_3(20).size() == theta(9, 3, 20, 3));
  CHECK_THROWS_AS((void)hole_3_0(10), Error);
}

TEST_CASE("hole codes for n = 0 (mod 4)") {
  OocCode c = hole_6t_r(1, 1, 8);
  CHECK(c.size() == theta(7, 1, 8, 3));
  CHECK(c.hole_rows == 1);
  OocCode d = hole_6t_r(1, 4, 8);
  CHECK(d.size() == theta(10, 4, 8, 3));
}

TEST_CASE("hole codes at n = 4") {
  for (int r = 1; r <= 5; ++r) {
    OocCode c = hole_m_r_n4(1, r);
    CHECK(c.size() == theta(6 + r, r, 4, 3));
    CHECK(c.size() == 22 + 8 * r);
    CHECK(verify_ooc(c).ok);
  }
}

TEST_CASE("1-D codes") {
  CHECK(ooc_1d(7).size() == 1);
  CHECK(ooc_1d(13).size() == 2);
  CHECK(ooc_1d(38).size() == johnson(1, 38, 3, 1) - 1);
  CHECK(ooc_1d(2).size() == 0);
}

TEST_CASE("appendix designs load and verify") {
  auto a18 = std::get<DesignObject>(appendix_load('A', "t1-r8"));
  CHECK(a18.base_blocks.size() == 25);
  auto a28 = std::get<DesignObject>(appendix_load('A', "t2-r8"));
  CHECK(a28.base_blocks.size() == 37);
  auto a19 = std::get<DesignObject>(appendix_load('A', "t1-r9"));
  CHECK(a19.base_blocks.size() == 36);
  auto a29 = std::get<DesignObject>(appendix_load('A', "t2-r9"));
  CHECK(a29.base_blocks.size() == 104);
  auto b1 = std::get<DesignObject>(appendix_load('B', "t1"));
  CHECK(b1.base_blocks.size() == 108);
  auto b2 = std::get<DesignObject>(appendix_load('B', "t2"));
  CHECK(b2.base_blocks.size() == 312);
  CHECK_THROWS_AS((void)appendix_load('Z', "x"), Error);
  CHECK_THROWS_AS((void)appendix_load('A', "t9-r9"), Error);
}

TEST_CASE("appendix codes load, verify and match their counts") {
  auto e7 = std::get<OocCode>(appendix_load('E', "m7"));
  CHECK(e7.size() == j_star(7, 6));
  auto e11 = std::get<OocCode>(appendix_load('E', "m11"));
  CHECK(e11.size() == j_star(11, 6));
  auto f10 = std::get<OocCode>(appendix_load('F', "m10"));
  CHECK(f10.size() == j_star(10, 10));
}

TEST_CASE("appendix load is bit-stable") {
  auto once = std::get<OocCode>(appendix_load('E', "m8"));
  auto twice = std::get<OocCode>(appendix_load('E', "m8"));
  CHECK(export_code(once) == export_code(twice));
}

TEST_CASE("small designs") {
  DesignObject d = small_design(DesignKind::NCyclicGdd, GroupType{{6, 3}, {2, 1}}, 2);
  CHECK(d.base_blocks.size() == 24);
  DesignObject s = small_design(DesignKind::Schgdd, GroupType{{3, 1}, {2, 4}}, 8);
  CHECK(s.base_blocks.size() == 6);
  CHECK_THROWS_AS((void)schgdd(3, 2, 3), Error);  // excluded shape
  DesignObject gdp = ncyclic_gdp(1, 2, 8);
  CHECK((int64_t)gdp.base_blocks.size() == gdp_block_count(1, 2, 8));
}
