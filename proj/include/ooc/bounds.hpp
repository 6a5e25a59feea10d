#pragma once

#include <cstdint>
#include <string>

#include "ooc/common.hpp"

namespace ooc {

// Nested-floor upper bound J(m x n, k, lambda).
int64_t johnson(int64_t m, int64_t n, int64_t k, int64_t lambda);

struct MuResult {
  int mu = 0;
  std::string branch;  // which arm of the case table fired
};

// The exact optimality deficit: Phi = J - mu.
MuResult mu(int64_t m, int64_t n);

// Improved upper bound for even n. Throws OddN for odd n.
int64_t j_star(int64_t m, int64_t n);

// 1-D deficit: 1 iff n = 14, 20 (mod 24).
int delta_1d(int64_t n);

// Odd-n deficit: 1 iff m = 5 (mod 6) and n = 1.
int eta(int64_t m, int64_t n);

bool perfect_exists(int64_t m, int64_t n);

// Hole-code ceiling floor(((m^2-r^2)n - 2(m-r)) / k(k-1)); n must be even.
int64_t theta(int64_t m, int64_t r, int64_t n, int64_t k);

// Regular-code exact count (m^2-r^2)(n-g)/k(k-1); throws NonInteger if not exact.
int64_t upsilon(int64_t m, int64_t r, int64_t n, int64_t g, int64_t k);

struct GammaResult {
  int gamma = 0;
  std::string branch;
};

// Packing deficit of the maximum n-cyclic 3-GDP of type (vn)^m.
GammaResult gamma_gdp(int64_t v, int64_t n, int64_t m);

// Base-block count of that maximum GDP: floor(mv/3 * floor(vn(m-1)/2)) - gamma.
int64_t gdp_block_count(int64_t v, int64_t n, int64_t m);

}  // namespace ooc
