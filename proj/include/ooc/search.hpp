#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ooc/model.hpp"

namespace ooc {

// Requirement of one (ordered-pair, residue) difference slot.
enum class Slot : uint8_t {
  Forbidden,  // must never be covered
  Optional,   // may be covered at most once (packing slack lives here)
  Required,   // must be covered exactly once
};

// A difference-coverage problem over rows x Z_modulus, solved by
// deterministic backtracking on the first unsatisfied slot.
struct CoverProblem {
  int rows = 1;
  int modulus = 1;
  // req[(i*rows+j)*modulus + d]; only i <= j entries are consulted
  // (the j < i direction is implied: slot (j,i,-d) == slot (i,j,d)).
  std::vector<Slot> req;
  std::vector<Codeword> pinned;       // pre-placed blocks (counted in target)
  int64_t target_blocks = 0;          // total blocks wanted, pins included
  bool normalize_shift = true;        // restrict non-pinned blocks to col-0 orbit reps
  int64_t node_budget = 200000000LL;  // backtracking node limit

  Slot& at(int i, int j, int d) { return req[((size_t)i * rows + j) * modulus + d]; }
  Slot at(int i, int j, int d) const { return req[((size_t)i * rows + j) * modulus + d]; }
  void fill(Slot s) { req.assign((size_t)rows * rows * modulus, s); }
};

// Finds target_blocks weight-3 blocks covering every Required slot exactly
// once, touching Optional slots at most once and Forbidden slots never.
// Throws BudgetExceeded if the node budget runs out, NotExists if the space
// is exhausted without a solution.
std::vector<Codeword> cover_search(const CoverProblem& p);

struct MaxOocResult {
  int64_t size = 0;
  OocCode witness;
  int64_t nodes = 0;
};

// Exact maximum-size search (branch and bound with difference-budget bound
// and shift normalization). Guard: m*n <= 24 by default.
MaxOocResult max_ooc(int m, int n, int k = 3, int64_t node_budget = 4000000000LL);

// Specification of a design to search for (realizes existence lemmas whose
// constructions live elsewhere). Throws NotExists if the existence predicate
// fails, BudgetExceeded if the search gives out.
struct DesignSpec {
  DesignKind kind = DesignKind::NCyclicGdd;
  GroupType type;          // for row-partitioned kinds
  int modulus = 1;
  int hgdd_m = 0;          // (SC)(I)HGDD shape (m, r, w^t)
  int hgdd_r = 0;
  int hgdd_w = 0;
  int hgdd_t = 0;
  std::vector<Codeword> pinned;
  int64_t expected_blocks = -1;  // override (GDPs)
};

DesignObject find_design(const DesignSpec& spec, int64_t node_budget = 200000000LL);

// Existence predicates for the searched design kinds.
bool schgdd_exists(int m, int w, int t);
bool strict_cyclic_gdd_exists(int64_t g, int64_t u);
bool ncyclic_gdd_exists(int64_t v, int64_t n, int64_t m);  // uniform type (vn)^m

}  // namespace ooc
