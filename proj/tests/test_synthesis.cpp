#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ooc/bounds.hpp"
#include "ooc/io.hpp"
#include "ooc/synthesis.hpp"
#include "ooc/verify.hpp"

using namespace ooc;

namespace {

void check_point(int m, int n) {
  OocCode c = build_optimal(m, n);
  CHECK(c.size() == johnson(m, n, 3, 1) - mu(m, n).mu);
  CHECK(verify_ooc(c).ok);
}

}  // namespace

TEST_CASE("paper-exhibited optima") {
  OocCode c26 = build_optimal(2, 6);
  CHECK(c26.size() == 3);
  OocCode c66 = build_optimal(6, 6);
  CHECK(c66.size() == 33);
  OocCode c44 = build_optimal(4, 4);
  CHECK(c44.size() == 8);
  OocCode c51 = build_optimal(5, 1);
  CHECK(c51.size() == 2);
}

TEST_CASE("an assortment of grid points") {
  check_point(9, 6);    // GDP route
  check_point(11, 10);  // [11:2] route
  check_point(10, 14);  // [10:1] route with the 1-D deficit
  check_point(5, 18);   // four-part assembly
  check_point(7, 8);    // [7:1] completion route
  check_point(10, 4);   // n=4 with r=4
}

TEST_CASE("dispatcher is deterministic byte-for-byte") {
  CHECK(export_code(build_optimal(5, 6)) == export_code(build_optimal(5, 6)));
  CHECK(export_code(build_optimal(9, 6)) == export_code(build_optimal(9, 6)));
}

TEST_CASE("provenance leaves are ingredient-level") {
  OocCode c = build_optimal(10, 14);
  auto arms = fired_arms(c.prov);
  CHECK(!arms.empty());
  CHECK(std::find(arms.begin(), arms.end(), "m10-fill") != arms.end());
}

TEST_CASE("odd n beyond the search budget reports scope") {
  CHECK_THROWS_AS((void)build_optimal(5, 9), Error);
  try {
    (void)build_optimal(5, 9);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OutOfConstructiveScope);
  }
}

TEST_CASE("off-grid arms: folds and direct families") {
  check_point(4, 22);   // m4 assembly, n = 22 (mod 24)
  check_point(7, 22);   // the 7 x n family
  check_point(15, 12);  // fold via m = 15
}

TEST_CASE("off-grid arms: regular routes") {
  check_point(7, 26);  // 2-regular route, n = 2 (mod 24)
  check_point(7, 30);  // 6-regular route, n = 6 (mod 24)
  check_point(5, 28);  // 4-regular route and the m4 assembly at n = 28
  check_point(4, 28);
}

TEST_CASE("off-grid arms: m >= 13") {
  check_point(13, 2);
  check_point(13, 14);  // big-n8t6
  check_point(13, 10);  // big-n8t2
}

TEST_CASE("build_hole and build_regular at spec'd sizes") {
  OocCode h = build_hole(4, 1, 8);
  CHECK(h.size() == theta(4, 1, 8, 3));
  OocCode h2 = build_hole(10, 1, 14);
  CHECK(h2.size() == theta(10, 1, 14, 3));
  OocCode h3 = build_hole(9, 3, 12);
  CHECK(h3.size() == 142);
  OocCode r = build_regular(6, 0, 10, 2);
  CHECK(r.size() == 48);
  OocCode r2 = build_regular(3, 0, 8, 2);
  CHECK(r2.size() == 9);
  OocCode r3 = build_regular(13, 1, 10, 2);
  CHECK(r3.size() == 224);
}

TEST_CASE("size_report fields") {
  SizeReport rep = size_report(4, 4);
  CHECK(rep.J == 9);
  CHECK(rep.J_star == 8);
  CHECK(rep.mu == 1);
}
