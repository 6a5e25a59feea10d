#include "ooc/bounds.hpp"

namespace ooc {

int64_t johnson(int64_t m, int64_t n, int64_t k, int64_t lambda) {
  if (m < 1 || n < 1) fail(Errc::InvalidParams, "need m, n >= 1");
  if (k <= lambda || lambda < 1) fail(Errc::InvalidParams, "need k > lambda >= 1");
  int64_t mn = mul_ck(m, n);
  // innermost floor first: (mn - lambda)/(k - lambda), then outward
  int64_t acc = floor_div(mn - lambda, k - lambda);
  for (int64_t i = lambda - 1; i >= 1; --i) acc = floor_div(mul_ck(mn - i, acc), k - i);
  return floor_div(mul_ck(m, acc), k);
}

MuResult mu(int64_t m, int64_t n) {
  if (m < 1 || n < 1) fail(Errc::InvalidParams, "need m, n >= 1");
  int64_t mn24 = imod(mul_ck(m, n), 24);
  if (n == 1 && imod(m, 6) == 5) return {1, "m=5 (mod 6), n=1"};
  if (n == 4 && imod(m, 6) == 4) return {1, "m=4 (mod 6), n=4"};
  if (n == 2 && (imod(m, 12) == 5 || imod(m, 12) == 8)) return {1, "m=5,8 (mod 12), n=2"};
  if (n % 2 == 0 && (mn24 == 14 || mn24 == 20)) return {1, "n even, mn=14,20 (mod 24)"};
  if (n % 2 == 0 && m % 3 == 0 && (mn24 == 6 || mn24 == 12))
    return {1, "n even, m=0 (mod 3), mn=6,12 (mod 24)"};
  return {0, "otherwise"};
}

int64_t j_star(int64_t m, int64_t n) {
  if (n % 2 != 0) fail(Errc::OddN, "J* is defined for even n only");
  int64_t J = johnson(m, n, 3, 1);
  int64_t mn24 = imod(mul_ck(m, n), 24);
  bool deduct = (mn24 == 14 || mn24 == 20) || (n == 4 && imod(m, 6) == 4) ||
                (n == 2 && (imod(m, 12) == 5 || imod(m, 12) == 8)) ||
                (m % 3 == 0 && (mn24 == 6 || mn24 == 12));
  return deduct ? J - 1 : J;
}

int delta_1d(int64_t n) {
  int64_t r = imod(n, 24);
  return (r == 14 || r == 20) ? 1 : 0;
}

int eta(int64_t m, int64_t n) { return (n == 1 && imod(m, 6) == 5) ? 1 : 0; }

bool perfect_exists(int64_t m, int64_t n) {
  if (m % 2 == 0 || n % 2 == 0) return false;
  return imod(mul_ck(m, mul_ck(m, n) - 1), 6) == 0;
}

int64_t theta(int64_t m, int64_t r, int64_t n, int64_t k) {
  if (r < 0 || r > m) fail(Errc::InvalidParams, "need 0 <= r <= m");
  if (n % 2 != 0) fail(Errc::OddN, "theta is stated for even n");
  int64_t num = mul_ck(mul_ck(m, m) - mul_ck(r, r), n) - 2 * (m - r);
  return floor_div(num, mul_ck(k, k - 1));
}

int64_t upsilon(int64_t m, int64_t r, int64_t n, int64_t g, int64_t k) {
  if (r < 0 || r > m) fail(Errc::InvalidParams, "need 0 <= r <= m");
  if (g < 1 || n % g != 0) fail(Errc::InvalidParams, "need g | n");
  int64_t num = mul_ck(mul_ck(m, m) - mul_ck(r, r), n - g);
  int64_t den = mul_ck(k, k - 1);
  if (num % den != 0) fail(Errc::NonInteger, "(m^2-r^2)(n-g) not divisible by k(k-1)");
  return num / den;
}

GammaResult gamma_gdp(int64_t v, int64_t n, int64_t m) {
  if (v < 1 || n < 1 || m < 3) fail(Errc::InvalidParams, "need v, n >= 1, m >= 3");
  int64_t m12 = imod(m, 12);
  if (v % 2 == 1 && n % 4 == 0 && m == 3) return {1, "v odd, n=0 (mod 4), m=3"};
  if (v % 2 == 1 && imod(n, 4) == 2 && (m12 == 3 || m12 == 6 || m12 == 7 || m12 == 10))
    return {1, "v odd, n=2 (mod 4), m=3,6,7,10 (mod 12)"};
  if (imod(mul_ck(v, n), 12) == 6 && imod(n, 4) == 2 && (m12 == 2 || m12 == 11))
    return {1, "vn=6 (mod 12), n=2 (mod 4), m=2,11 (mod 12)"};
  if (imod(mul_ck(m - 1, mul_ck(v, mul_ck(v, n))), 6) == 4 && imod(m, 3) == 2)
    return {1, "(m-1)v^2n=4 (mod 6), m=2 (mod 3)"};
  if (n == 2 && imod(mul_ck(m, mul_ck(m - 1, mul_ck(v, v))), 12) == 8)
    return {1, "n=2, m(m-1)v^2=8 (mod 12)"};
  return {0, "otherwise"};
}

int64_t gdp_block_count(int64_t v, int64_t n, int64_t m) {
  int64_t inner = floor_div(mul_ck(v, mul_ck(n, m - 1)), 2);
  int64_t total = floor_div(mul_ck(m, mul_ck(v, inner)), 3);
  return total - gamma_gdp(v, n, m).gamma;
}

}  // namespace ooc
