#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ooc {

enum class Errc {
  InvalidParams,
  OutOfRange,
  DuplicatePoint,
  OddN,
  NonInteger,
  NotExists,
  UnsupportedParams,
  IngredientGap,
  UnknownKey,
  ShapeMismatch,
  FoldFailed,
  TooLarge,
  BudgetExceeded,
  OutOfConstructiveScope,
  ParseError,
  VerifyFailed,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& what) { throw Error(c, what); }

// Checked 64-bit arithmetic. Formulas in this library are exact; overflow is a bug.
int64_t mul_ck(int64_t a, int64_t b);
int64_t add_ck(int64_t a, int64_t b);

// Floor of a/b for b > 0 (a may be negative).
inline int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline int64_t imod(int64_t a, int64_t n) {
  int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace ooc
