#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ooc/io.hpp"
#include "ooc/model.hpp"

using namespace ooc;

TEST_CASE("canonicalize sorts points") {
  CodeParams p{2, 6, 3, 1};
  Codeword cw(std::vector<Point>{{1, 2}, {0, 0}, {0, 1}});
  Codeword out = canonicalize(cw, p);
  CHECK(out.points() == std::vector<Point>{{0, 0}, {0, 1}, {1, 2}});
}

TEST_CASE("canonicalize reduces columns and detects collisions") {
  CodeParams p{2, 6, 3, 1};
  CHECK_THROWS_AS((void)canonicalize(Codeword(std::vector<Point>{{0, 0}, {0, 6 + 6}, {1, 2}}), p), Error);
  try {
    (void)canonicalize(Codeword(std::vector<Point>{{0, 0}, {0, 6}, {1, 2}}), p);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DuplicatePoint);
  }
  try {
    (void)canonicalize(Codeword(std::vector<Point>{{0, 0}, {2, 1}, {1, 2}}), p);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OutOfRange);
  }
}

TEST_CASE("canonicalize is idempotent") {
  CodeParams p{2, 6, 3, 1};
  Codeword cw(std::vector<Point>{{0, 0}, {0, 1}, {1, 2}});
  CHECK(canonicalize(cw, p) == cw);
  CHECK(canonicalize(canonicalize(cw, p), p) == canonicalize(cw, p));
}

TEST_CASE("shift behaves like modular addition") {
  Codeword cw(std::vector<Point>{{0, 0}, {0, 1}, {1, 2}});
  CHECK(shift(cw, 0, 6) == cw);
  CHECK(shift(cw, 4, 6) == Codeword(std::vector<Point>{{0, 4}, {0, 5}, {1, 0}}));
  CHECK(shift(cw, 6, 6) == cw);
  // composition law over a small grid
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) CHECK(shift(shift(cw, a, 6), b, 6) == shift(cw, a + b, 6));
}

TEST_CASE("code file round-trip is byte-identical") {
  OocCode code;
  code.params = {2, 6, 3, 1};
  code.codewords = {Codeword(std::vector<Point>{{0, 0}, {0, 1}, {1, 2}}), Codeword(std::vector<Point>{{0, 0}, {0, 2}, {1, 5}}),
                    Codeword(std::vector<Point>{{0, 0}, {1, 0}, {1, 4}})};
  std::string text = export_code(code);
  OocCode parsed = parse_code(text);
  CHECK(export_code(parsed) == text);
  CHECK(parsed.codewords == code.codewords);
  CHECK(parsed.params == code.params);
}

TEST_CASE("design file round-trip") {
  DesignObject d;
  d.kind = DesignKind::Schgdd;
  d.modulus = 8;
  d.num_rows = 3;
  d.hole_order = 2;
  d.group_type = GroupType{{8, 3}};
  d.base_blocks = {Codeword(std::vector<Point>{{0, 0}, {1, 1}, {2, 3}})};
  d.expected_blocks = 1;
  std::string text = export_design(d);
  DesignObject parsed = parse_design(text);
  CHECK(export_design(parsed) == text);
  CHECK(parsed.kind == DesignKind::Schgdd);
  CHECK(parsed.hole_order == 2);
}

TEST_CASE("row development with stars") {
  std::vector<Codeword> init = {Codeword(std::vector<Point>{{0, 0}, {1, 0}, {2, 0}}),
                                Codeword(std::vector<Point>{{0, 0}, {2, 0}, {4, 0}})};
  auto plain = develop_rows(init, 2, 6, 6, {false, false});
  CHECK(plain.size() == 4);  // the second orbit closes after one step
  auto starred = develop_rows(init, 2, 6, 6, {false, true});
  CHECK(starred.size() == 4);
}
