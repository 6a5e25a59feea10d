#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ooc/common.hpp"

namespace ooc {

// A cell of the I_m x Z_n grid.
struct Point {
  int row = 0;
  int col = 0;
  auto operator<=>(const Point&) const = default;
};

// A weight-k codeword in canonical form: points sorted, pairwise distinct.
class Codeword {
 public:
  Codeword() = default;
  explicit Codeword(std::vector<Point> pts);
  Codeword(Point a, Point b, Point c) : Codeword(std::vector<Point>{a, b, c}) {}

  const std::vector<Point>& points() const { return pts_; }
  int size() const { return static_cast<int>(pts_.size()); }
  auto operator<=>(const Codeword&) const = default;

 private:
  std::vector<Point> pts_;
};

struct CodeParams {
  int m = 1;
  int n = 1;
  int k = 3;
  int lambda = 1;
  auto operator<=>(const CodeParams&) const = default;
};

// Simple provenance tree: which lemma/construction produced an object.
struct Provenance {
  std::string label;
  std::vector<Provenance> children;
};

// A 2-D OOC (possibly with a hole and/or a regular structure).
// Hole rows are always the canonical prefix {0,...,hole_rows-1}.
// regular_g > 0 means the difference sets must equal Z_n minus the
// order-g subgroup for every row pair outside the hole.
struct OocCode {
  CodeParams params;
  int hole_rows = 0;
  int regular_g = 0;
  std::vector<Codeword> codewords;  // kept sorted & unique
  Provenance prov;

  int64_t size() const { return static_cast<int64_t>(codewords.size()); }
};

// Normalizes the codeword list: sort + dedupe.
void normalize(OocCode& code);

// The family of difference multisets, one per ordered row pair.
struct DiffTable {
  int m = 0;
  int n = 0;
  std::vector<uint16_t> counts;  // (i*m + j)*n + d

  uint16_t at(int i, int j, int d) const { return counts[(size_t)(i * m + j) * n + d]; }
  uint16_t& at(int i, int j, int d) { return counts[(size_t)(i * m + j) * n + d]; }
  int64_t total() const;
};

// Group type in exponential notation, sizes descending.
struct GroupType {
  std::vector<std::pair<int64_t, int>> parts;  // (size, count)
  GroupType() = default;
  GroupType(std::initializer_list<std::pair<int64_t, int>> p);
  void canonicalize();
  std::string str() const;
  auto operator<=>(const GroupType&) const = default;
};

enum class DesignKind {
  StrictCyclicGdd,  // blocks over Z_modulus, groups = cosets of <u>
  NCyclicGdd,       // rows partitioned into groups; cross pairs exactly once
  NCyclicGdp,       // cross pairs at most once; block count pinned by caller
  WtCyclicHgdd,     // consecutive blocks of group_rows rows per group; hole subgroup of order hole_order
  Schgdd,           // one row per group; hole subgroup of order hole_order
  Scihgdd,          // Schgdd plus excluded row prefix I_{hole_rows}
  CosetGdd,         // groups = (finite rows) x {c, c+mod/2}; trailing rows one fat group
};

const char* design_kind_name(DesignKind k);

// Base blocks of a column-developed design. Interpretation depends on kind;
// see verify_design for the exact difference conditions per kind.
struct DesignObject {
  DesignKind kind = DesignKind::NCyclicGdd;
  int modulus = 1;
  int num_rows = 1;
  std::vector<int> row_group;  // per-row group id (NCyclicGdd/Gdp); empty otherwise
  int hole_rows = 0;           // Scihgdd: |Y| (prefix rows); CosetGdd: trailing fat-group rows
  int hole_order = 0;          // w for (SC)HGDD kinds; 2 for CosetGdd
  int group_rows = 1;          // h for WtCyclicHgdd
  GroupType group_type;
  std::vector<Codeword> base_blocks;
  int64_t expected_blocks = -1;  // closed-form block count; -1 = derive from kind

  Provenance prov;
};

enum class SkolemFlavor { Extended, Near, Langford, TriplePartition };

struct SkolemSequence {
  SkolemFlavor flavor = SkolemFlavor::Extended;
  int order = 0;  // v (or s for triple partitions)
  int param = 0;  // k / m / d
  // pairs[t] = (a, b). For Extended: b - a = t + 1. For Near/Langford the
  // realized differences are the flavor's difference set, in increasing order.
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::array<int, 3>> triples;  // TriplePartition only, a+b=c
};

struct FrameStarter {
  int n = 0;
  int g = 2;
  std::vector<std::pair<int, int>> pairs;
};

// All bound values for a parameter tuple; fields < 0 mean "not applicable".
struct SizeReport {
  int64_t J = -1;
  int64_t J_star = -1;
  int64_t delta = -1;
  int64_t eta = -1;
  int64_t mu = -1;
  int64_t theta = -1;
  int64_t upsilon = -1;
  std::string branch;
};

// canonicalize: bounds-check rows, reduce columns mod n, sort, reject collisions.
Codeword canonicalize(const Codeword& cw, const CodeParams& params);

// shift: advance every column by tau (mod n) and re-canonicalize.
Codeword shift(const Codeword& cw, int tau, int n);

// Develops initial codewords by repeatedly adding `step` to every row < fix_from
// (mod row_modulus), leaving rows >= fix_from unchanged. Duplicate codewords
// (short orbits) collapse; starred inputs are emitted once, undeveloped.
std::vector<Codeword> develop_rows(const std::vector<Codeword>& initial, int step, int row_modulus,
                                   int fix_from, const std::vector<bool>& starred);

// Develops base blocks by +1 on the column modulo n (full orbit each).
std::vector<Codeword> develop_cols(const std::vector<Codeword>& base, int n);

// Applies a row relabeling (perm[i] = new row of old row i).
Codeword relabel_rows(const Codeword& cw, const std::vector<int>& perm);
OocCode relabel_rows(const OocCode& code, const std::vector<int>& perm, int new_hole_rows);

}  // namespace ooc
