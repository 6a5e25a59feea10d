#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ooc/bounds.hpp"

using namespace ooc;

TEST_CASE("johnson bound values") {
  CHECK(johnson(2, 6, 3, 1) == 3);
  CHECK(johnson(1, 1, 3, 1) == 0);
  CHECK(johnson(4, 4, 3, 1) == 9);
  CHECK_THROWS_AS((void)johnson(2, 2, 3, 3), Error);
}

TEST_CASE("johnson monotone in m and n") {
  for (int m = 1; m <= 40; ++m)
    for (int n = 1; n <= 40; ++n) {
      CHECK(johnson(m + 1, n, 3, 1) >= johnson(m, n, 3, 1));
      CHECK(johnson(m, n + 1, 3, 1) >= johnson(m, n, 3, 1));
    }
}

TEST_CASE("mu case table") {
  CHECK(mu(5, 1).mu == 1);
  CHECK(mu(4, 4).mu == 1);
  CHECK(mu(7, 6).mu == 0);
  CHECK(mu(3, 2).mu == 1);
  CHECK(mu(5, 2).mu == 1);
  CHECK(mu(8, 2).mu == 1);
  CHECK(mu(7, 2).mu == 1);   // mn = 14 (mod 24)
  CHECK(mu(10, 2).mu == 1);  // mn = 20 (mod 24)
  CHECK(mu(2, 7).mu == 0);   // odd n: the mn arm needs even n
  CHECK(mu(14, 1).mu == 0);
  CHECK(mu(11, 1).mu == 1);
  CHECK(mu(9, 6).mu == 1);
  CHECK(mu(6, 6).mu == 1);
  CHECK(mu(10, 14).mu == 1);
}

TEST_CASE("j_star values and domain") {
  CHECK(j_star(8, 2) == johnson(8, 2, 3, 1) - 1);
  CHECK(j_star(4, 4) == 8);
  CHECK(j_star(2, 6) == 3);
  CHECK_THROWS_AS((void)j_star(3, 5), Error);
}

TEST_CASE("j_star agrees with J - mu over the full even grid") {
  for (int m = 1; m <= 200; ++m)
    for (int n = 2; n <= 200; n += 2) REQUIRE(j_star(m, n) == johnson(m, n, 3, 1) - mu(m, n).mu);
}

TEST_CASE("even-n remark count dominates j_star") {
  for (int m = 1; m <= 60; ++m)
    for (int n = 2; n <= 60; n += 2) {
      int64_t remark = (int64_t)m * ((int64_t)m * n - 2) / 6;
      CHECK(remark >= j_star(m, n));
    }
}

TEST_CASE("delta, eta, perfect") {
  CHECK(delta_1d(38) == 1);
  CHECK(delta_1d(14) == 1);
  CHECK(delta_1d(20) == 1);
  CHECK(delta_1d(24) == 0);
  CHECK(eta(5, 1) == 1);
  CHECK(eta(5, 3) == 0);
  CHECK(perfect_exists(3, 3));
  CHECK(!perfect_exists(3, 4));
  CHECK(!perfect_exists(5, 1));  // 5*4 = 20 not 0 mod 6
}

TEST_CASE("theta and upsilon") {
  CHECK(theta(4, 1, 8, 3) == 19);
  CHECK(theta(5, 5, 6, 3) == 0);
  CHECK(theta(5, 2, 6, 3) == 20);
  CHECK_THROWS_AS((void)theta(4, 1, 7, 3), Error);
  CHECK(upsilon(6, 0, 10, 2, 3) == 48);
  CHECK(upsilon(2, 1, 8, 2, 3) == 3);
  CHECK(upsilon(7, 7, 10, 2, 3) == 0);
  CHECK(upsilon(13, 1, 10, 2, 3) == 224);
  CHECK_THROWS_AS((void)upsilon(2, 0, 10, 2, 3), Error);  // 4*8 = 32 is not divisible by 6
  CHECK_THROWS_AS((void)upsilon(3, 0, 8, 3, 3), Error);   // g does not divide n
}

TEST_CASE("gamma table") {
  CHECK(gamma_gdp(1, 2, 8).gamma == 1);
  CHECK(gamma_gdp(2, 5, 4).gamma == 0);
  CHECK(gamma_gdp(1, 4, 3).gamma == 1);
  CHECK(gamma_gdp(1, 2, 7).gamma == 1);
  CHECK(gamma_gdp(1, 2, 12).gamma == 0);
  CHECK(gamma_gdp(3, 6, 3).gamma == 1);   // v odd, n = 2 (mod 4), m = 3 (mod 12)
  CHECK(gamma_gdp(3, 14, 3).gamma == 1);
  // consistency with J* at n = 2: the 2-cyclic GDP of type 2^m
  for (int m = 3; m <= 100; ++m) CHECK(gdp_block_count(1, 2, m) == j_star(m, 2));
}
