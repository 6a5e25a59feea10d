#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ooc/model.hpp"
#include "ooc/search.hpp"

namespace ooc {

// --- direct code constructions ---------------------------------------------

// 2-regular (6 x n) code with 6(n-2) codewords; n = 2 (mod 4), n >= 6.
OocCode regular_6xn(int n);

// Optimal (6 x n) code with 6n-3 codewords; n = 2 (mod 4).
OocCode optimal_6xn(int n);

// 2-regular [2:1] x n code with (n-2)/2 codewords; n = 0,2 (mod 8), n >= 8.
OocCode regular_21xn(int n);

// 2-regular (3 x n) code with 3(n-2)/2 codewords; n = 0,2 (mod 8), n >= 8.
OocCode regular_3xn(int n);

// Hole codes built directly (Theta-sized, verified):
OocCode hole_3_0(int n);             // n = 0,6 (mod 8)
OocCode hole_5_2(int n);             // n = 0,6 (mod 8)
OocCode hole_9_3(int n);             // n = 4 (mod 8), n >= 12
OocCode hole_6t_r(int t, int r, int n);  // [6t+r:r] x n; n = 0 (mod 4), n >= 8; t in {1,2}, r in {1,2,4,5}
OocCode hole_m_r_n4(int t, int r);       // [6t+r:r] x 4; t in {1,2}, r in {1..5}

// Optimal 1-D (n,3,1) code with J - delta codewords.
OocCode ooc_1d(int n);

// --- embedded tables --------------------------------------------------------

// Loads one appendix table by letter + key, verifying it.
// A: keys t1-r8, t2-r8, t1-r9, t2-r9 (designs)
// B: keys t1, t2 (designs)
// E: keys m7, m8, m10, m11;  F: keys m7, m10 (codes)
// G: keys n26, n34, ... (codeword lists on one row)
std::variant<DesignObject, OocCode, std::vector<Codeword>> appendix_load(char table,
                                                                         const std::string& key);
std::vector<std::string> appendix_keys(char table);

OocCode table_code(const std::string& key);  // ex-2x6, n4-m2..5, t5x12, hole93-n12

// --- small designs (lemma-gated builders with cache) -------------------------

// q-cyclic 3-GDD of type q^3 for odd q (direct formula).
DesignObject cyclic_gdd_q3(int q);

// 2-cyclic 3-GDD of type 6^3 2^1 (embedded table).
DesignObject gdd_6321();

// 3-SCHGDD of type (m, w^t); NotExists when the existence condition fails.
DesignObject schgdd(int m, int w, int t);

// n-cyclic 3-GDD of type (vn)^m (uniform); searched and cached.
DesignObject ncyclic_gdd_uniform(int v, int n, int m);

// Maximum n-cyclic 3-GDP of type (vn)^m with the closed-form block count.
DesignObject ncyclic_gdp(int v, int n, int m);

// Strictly cyclic 3-GDD of type g^u.
DesignObject strict_cyclic_gdd(int g, int u);

// Facade over the builders above keyed by kind/type/modulus.
DesignObject small_design(DesignKind kind, const GroupType& type, int modulus);

}  // namespace ooc
