#include "ooc/model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ooc {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidParams: return "INVALID_PARAMS";
    case Errc::OutOfRange: return "OUT_OF_RANGE";
    case Errc::DuplicatePoint: return "DUPLICATE_POINT";
    case Errc::OddN: return "ODD_N";
    case Errc::NonInteger: return "NON_INTEGER";
    case Errc::NotExists: return "NOT_EXISTS";
    case Errc::UnsupportedParams: return "UNSUPPORTED_PARAMS";
    case Errc::IngredientGap: return "INGREDIENT_GAP";
    case Errc::UnknownKey: return "UNKNOWN_KEY";
    case Errc::ShapeMismatch: return "SHAPE_MISMATCH";
    case Errc::FoldFailed: return "FOLD_FAILED";
    case Errc::TooLarge: return "TOO_LARGE";
    case Errc::BudgetExceeded: return "BUDGET_EXCEEDED";
    case Errc::OutOfConstructiveScope: return "OUT_OF_CONSTRUCTIVE_SCOPE";
    case Errc::ParseError: return "PARSE_ERROR";
    case Errc::VerifyFailed: return "VERIFY_FAILED";
  }
  return "UNKNOWN";
}

int64_t mul_ck(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::InvalidParams, "integer overflow in multiply");
  return r;
}

int64_t add_ck(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::InvalidParams, "integer overflow in add");
  return r;
}

Codeword::Codeword(std::vector<Point> pts) : pts_(std::move(pts)) {
  std::sort(pts_.begin(), pts_.end());
  for (size_t i = 1; i < pts_.size(); ++i)
    if (pts_[i] == pts_[i - 1]) fail(Errc::DuplicatePoint, "codeword has repeated point");
}

void normalize(OocCode& code) {
  std::sort(code.codewords.begin(), code.codewords.end());
  code.codewords.erase(std::unique(code.codewords.begin(), code.codewords.end()),
                       code.codewords.end());
}

int64_t DiffTable::total() const {
  int64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

GroupType::GroupType(std::initializer_list<std::pair<int64_t, int>> p) : parts(p) {
  canonicalize();
}

void GroupType::canonicalize() {
  std::map<int64_t, int> acc;
  for (auto& [s, c] : parts) {
    if (s <= 0 || c <= 0) fail(Errc::InvalidParams, "group type parts must be positive");
    acc[s] += c;
  }
  parts.clear();
  for (auto it = acc.rbegin(); it != acc.rend(); ++it) parts.push_back({it->first, it->second});
}

std::string GroupType::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto& [s, c] : parts) {
    if (!first) os << ' ';
    first = false;
    os << s << '^' << c;
  }
  return os.str();
}

const char* design_kind_name(DesignKind k) {
  switch (k) {
    case DesignKind::StrictCyclicGdd: return "scgdd";
    case DesignKind::NCyclicGdd: return "ngdd";
    case DesignKind::NCyclicGdp: return "ngdp";
    case DesignKind::WtCyclicHgdd: return "hgdd";
    case DesignKind::Schgdd: return "schgdd";
    case DesignKind::Scihgdd: return "scihgdd";
    case DesignKind::CosetGdd: return "ngdd-cg";
  }
  return "unknown";
}

Codeword canonicalize(const Codeword& cw, const CodeParams& params) {
  std::vector<Point> pts;
  pts.reserve(cw.points().size());
  for (const Point& p : cw.points()) {
    if (p.row < 0 || p.row >= params.m)
      fail(Errc::OutOfRange, "row " + std::to_string(p.row) + " outside I_" + std::to_string(params.m));
    if (p.col < 0 && -(int64_t)p.col > 8 * (int64_t)params.n)
      fail(Errc::OutOfRange, "column far out of range");
    pts.push_back({p.row, (int)imod(p.col, params.n)});
  }
  return Codeword(std::move(pts));
}

Codeword shift(const Codeword& cw, int tau, int n) {
  std::vector<Point> pts;
  pts.reserve(cw.points().size());
  for (const Point& p : cw.points()) pts.push_back({p.row, (int)imod(p.col + tau, n)});
  return Codeword(std::move(pts));
}

std::vector<Codeword> develop_rows(const std::vector<Codeword>& initial, int step, int row_modulus,
                                   int fix_from, const std::vector<bool>& starred) {
  std::set<Codeword> out;
  for (size_t idx = 0; idx < initial.size(); ++idx) {
    bool star = idx < starred.size() && starred[idx];
    int reps = star ? 1 : row_modulus / std::gcd(step, row_modulus);
    for (int j = 0; j < reps; ++j) {
      std::vector<Point> pts;
      for (const Point& p : initial[idx].points()) {
        int r = p.row;
        if (r < fix_from) r = (int)imod(r + (int64_t)j * step, row_modulus);
        pts.push_back({r, p.col});
      }
      out.insert(Codeword(std::move(pts)));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Codeword> develop_cols(const std::vector<Codeword>& base, int n) {
  std::set<Codeword> out;
  for (const Codeword& b : base)
    for (int t = 0; t < n; ++t) out.insert(shift(b, t, n));
  return {out.begin(), out.end()};
}

Codeword relabel_rows(const Codeword& cw, const std::vector<int>& perm) {
  std::vector<Point> pts;
  for (const Point& p : cw.points()) pts.push_back({perm.at(p.row), p.col});
  return Codeword(std::move(pts));
}

OocCode relabel_rows(const OocCode& code, const std::vector<int>& perm, int new_hole_rows) {
  OocCode out;
  out.params = code.params;
  out.hole_rows = new_hole_rows;
  out.regular_g = code.regular_g;
  out.prov = code.prov;
  for (const Codeword& cw : code.codewords) out.codewords.push_back(relabel_rows(cw, perm));
  normalize(out);
  return out;
}

}  // namespace ooc
