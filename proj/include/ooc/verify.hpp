#pragma once

#include <optional>
#include <string>

#include "ooc/model.hpp"

namespace ooc {

struct Witness {
  int i = 0;
  int j = 0;
  int residue = 0;
  std::optional<Codeword> first;
  std::optional<Codeword> second;
};

struct VerificationReport {
  bool ok = true;
  std::optional<Witness> witness;
  std::string reason;
  explicit operator bool() const { return ok; }
};

// The family of multisets Delta_ij over all ordered row pairs.
DiffTable diff_table(const OocCode& code);

// Difference-method check: every Delta_ij covers each residue at most once;
// hole rows produce nothing among themselves; a regular code's Delta_ij must
// equal Z_n minus the order-g subgroup exactly outside the hole.
VerificationReport verify_ooc(const OocCode& code);

// Independent oracle: evaluates the auto/cross-correlation double sums
// directly over all shifts. Guard: |C|^2 * n * k^2 <= 1e8, else TooLarge.
bool verify_correlation_matrix(const OocCode& code);

// Checks the difference condition and the block-count formula for the kind.
VerificationReport verify_design(const DesignObject& d);

// Expected base-block count for a design (closed form per kind).
int64_t design_expected_blocks(const DesignObject& d);

// Throws VerifyFailed unless the report is ok (construction post-condition).
void require_verified(const OocCode& code, const std::string& what);
void require_verified(const DesignObject& d, const std::string& what);

}  // namespace ooc
