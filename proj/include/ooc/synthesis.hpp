#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ooc/model.hpp"

namespace ooc {

// Builds a verified optimal (m x n, 3, 1) code of exactly J - mu codewords.
// Throws OutOfConstructiveScope for odd n > 1 (and m > 1) beyond the search
// budget; IngredientGap when a required sub-object cannot be produced.
OocCode build_optimal(int m, int n);

// Builds a Theta-sized [m:r] x n hole code (union of the direct lemmas).
OocCode build_hole(int m, int r, int n);

// Builds an Upsilon-sized g-regular [m:r] x n code.
OocCode build_regular(int m, int r, int n, int g);

// All applicable bound values for the tuple.
SizeReport size_report(int m, int n, int r = -1, int g = -1);

// Arm labels ("arm:...") collected from a provenance tree.
std::vector<std::string> fired_arms(const Provenance& prov);

// Every even-n dispatch arm label (for the coverage test).
std::vector<std::string> all_even_arms();

}  // namespace ooc
