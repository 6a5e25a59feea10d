#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ooc/bounds.hpp"
#include "ooc/search.hpp"
#include "ooc/verify.hpp"

using namespace ooc;

TEST_CASE("exact maxima at tiny sizes") {
  CHECK(max_ooc(2, 6).size == 3);
  CHECK(max_ooc(1, 7).size == 1);
  CHECK(max_ooc(3, 2).size == 1);
  CHECK(max_ooc(5, 1).size == 2);
}

TEST_CASE("witnesses verify") {
  auto res = max_ooc(2, 7);
  CHECK(res.size == 4);
  CHECK(verify_ooc(res.witness).ok);
}

TEST_CASE("searched designs verify") {
  DesignSpec spec;
  spec.kind = DesignKind::Schgdd;
  spec.hgdd_m = 3;
  spec.hgdd_w = 2;
  spec.hgdd_t = 4;
  spec.modulus = 8;
  DesignObject d = find_design(spec);
  CHECK(d.base_blocks.size() == 6);
  CHECK(verify_design(d).ok);

  DesignSpec bad = spec;
  bad.hgdd_t = 3;
  bad.modulus = 6;
  CHECK_THROWS_AS((void)find_design(bad), Error);  // excluded shape

  DesignSpec strict;
  strict.kind = DesignKind::StrictCyclicGdd;
  strict.type = GroupType{{2, 4}};
  DesignObject s = find_design(strict);
  CHECK(s.base_blocks.size() == 1);
  CHECK(verify_design(s).ok);
}

TEST_CASE("searched designs are deterministic") {
  DesignSpec spec;
  spec.kind = DesignKind::Schgdd;
  spec.hgdd_m = 4;
  spec.hgdd_w = 2;
  spec.hgdd_t = 3;
  spec.modulus = 6;
  CHECK(find_design(spec).base_blocks == find_design(spec).base_blocks);
}

TEST_CASE("pinned design search honors pins") {
  DesignSpec spec;
  spec.kind = DesignKind::NCyclicGdd;
  spec.type = GroupType{{14, 4}};
  spec.modulus = 14;
  spec.pinned = {Codeword(std::vector<Point>{{0, 0}, {1, 0}, {2, 0}}), Codeword(std::vector<Point>{{0, 0}, {1, 2}, {2, 4}})};
  DesignObject d = find_design(spec);
  CHECK(verify_design(d).ok);
  CHECK(std::count(d.base_blocks.begin(), d.base_blocks.end(), spec.pinned[0]) == 1);
  CHECK(std::count(d.base_blocks.begin(), d.base_blocks.end(), spec.pinned[1]) == 1);
}
