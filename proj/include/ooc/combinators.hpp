#pragma once

#include <map>

#include "ooc/model.hpp"

namespace ooc {

// Fills the hole of `outer` (rows 0..r-1) with `inner` (an r x n code).
// The inner's own hole becomes the result's hole.
OocCode fill_hole(const OocCode& outer, const OocCode& inner);

// Fills a g-regular outer with an [m:r] x g code; inner columns scale by n/g.
OocCode fill_regular(const OocCode& outer, const OocCode& inner);

// Weights an n-cyclic GDD by an h-cyclic GDD of type h^3 (single-row groups,
// blocks supplied as `inner`); moduli must be coprime. Types scale by h.
DesignObject weight_gdd(const DesignObject& outer, const DesignObject& inner);

// Fills the groups of an n-cyclic GDD of type (v_i h n)^{m_i} with n-cyclic
// GDDs of type (hn)^{v_i} (tn)^1 sharing one new (tn) group of t_rows rows.
DesignObject fill_gdd(const DesignObject& outer, const std::map<int, DesignObject>& fillers,
                      int t_rows);

// Builds a wt-cyclic HGDD of type (m,(hew)^t) from a w-regular (h x wt) code.
DesignObject regular_to_hgdd(const OocCode& regular, int m, int e);

// SCHGDD (m,w^t) x GDD h^3 -> wt-cyclic HGDD (m,(hw)^t).
DesignObject inflate_schgdd(const DesignObject& schgdd, int h);

// wt-cyclic HGDD (m,(hw)^t) + SCIHGDD (h+d, d, w^t) -> SCIHGDD (mh+d, h+d, w^t).
DesignObject fill_cyclic_hgdd(const DesignObject& hgdd, const DesignObject& scihgdd);

// GDD h^3 x g-regular [m:r] x n -> g-regular [mh:rh] x n.
OocCode inflate_regular(const OocCode& regular, int h);

// SCIHGDD (m-1, r-1, w^t) + w-regular [2:1] x wt plug -> w-regular [m:r] x wt.
OocCode fill_ihgdd(const DesignObject& scihgdd, const OocCode& plug);

// Expands an n-cyclic GDP/GDD into a hole code: each group of v rows is
// filled with a [v + r_new : r_new] x n code sharing r_new new hole rows;
// optionally the unique smallest group is absorbed as extra hole rows.
struct GdpExpand {
  std::map<int, OocCode> filler_by_rows;
  int new_hole_rows = 0;
  bool absorb_smallest_group = false;
};
OocCode gdp_expand(const DesignObject& gdp, const GdpExpand& spec);

// (m x n) code -> (m*n1 x n/n1) code with n1*b codewords.
OocCode fold(const OocCode& code, int n1);

// Same coordinate split applied to an n-cyclic GDD's base blocks.
DesignObject fold_design(const DesignObject& d, int n1);

// Blocks of a transversal design TD(3,h) as index triples (a, b, L(a,b)).
std::vector<std::array<int, 3>> td3_blocks(int h);

}  // namespace ooc
