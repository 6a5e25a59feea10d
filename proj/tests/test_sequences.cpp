#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ooc/sequences.hpp"

using namespace ooc;

TEST_CASE("extended pair systems") {
  SkolemSequence s = extended_skolem(1, 1);
  CHECK(s.pairs == std::vector<std::pair<int, int>>{{2, 3}});
  CHECK(valid_sequence(extended_skolem(4, 9)));
  CHECK_THROWS_AS((void)extended_skolem(2, 1), Error);
}

TEST_CASE("pinned pair systems") {
  SkolemSequence s = extended_skolem_pinned(3, 2, {4, 7});
  CHECK(valid_sequence(s));
  CHECK(s.pairs[2] == std::pair<int, int>{4, 7});
  CHECK(extended_skolem_pinned(1, 1, {2, 3}).pairs[0] == std::pair<int, int>{2, 3});
  CHECK_THROWS_AS((void)extended_skolem_pinned(1, 1, {1, 2}), Error);
}

TEST_CASE("near pair systems") {
  CHECK(valid_sequence(near_skolem(4, 1)));
  CHECK(near_skolem(2, 2).pairs == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK_THROWS_AS((void)near_skolem(4, 2), Error);
}

TEST_CASE("Langford pair systems") {
  SkolemSequence s = langford(3, 2);
  CHECK(valid_sequence(s));
  CHECK(langford(1, 1).pairs == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK_THROWS_AS((void)langford(2, 2), Error);
}

TEST_CASE("triple partitions") {
  CHECK(valid_sequence(triple_partition(2, 1)));
  CHECK(valid_sequence(triple_partition(1, 2)));
  CHECK_THROWS_AS((void)triple_partition(3, 2), Error);  // (3,0) pattern not admissible
}

TEST_CASE("frame starters") {
  FrameStarter f = frame_starter(8);
  CHECK(valid_starter(f));
  CHECK(f.pairs.size() == 3);
  CHECK(valid_starter(frame_starter(10)));
  CHECK_THROWS_AS((void)frame_starter(12), Error);
}

TEST_CASE("solver success matches the existence predicates (grid)") {
  for (int v = 1; v <= 30; ++v) {
    for (int k = 1; k <= 2 * v + 1; ++k) {
      bool want = extended_skolem_exists(v, k);
      bool got = true;
      try {
        SkolemSequence s = extended_skolem(v, k);
        REQUIRE(valid_sequence(s));
      } catch (const Error&) {
        got = false;
      }
      REQUIRE(got == want);
    }
    for (int m = 1; m <= v; ++m) {
      bool want = near_skolem_exists(v, m);
      bool got = true;
      try {
        SkolemSequence s = near_skolem(v, m);
        REQUIRE(valid_sequence(s));
      } catch (const Error&) {
        got = false;
      }
      REQUIRE(got == want);
    }
    for (int d = 1; d <= (v + 1) / 2 + 2; ++d) {
      bool want = langford_exists(v, d);
      bool got = true;
      try {
        SkolemSequence s = langford(v, d);
        REQUIRE(valid_sequence(s));
      } catch (const Error&) {
        got = false;
      }
      REQUIRE(got == want);
    }
  }
  for (int s = 1; s <= 20; ++s)
    for (int d = 1; d <= 12; ++d) {
      bool want = triple_partition_exists(s, d);
      bool got = true;
      try {
        SkolemSequence q = triple_partition(s, d);
        REQUIRE(valid_sequence(q));
      } catch (const Error&) {
        got = false;
      }
      REQUIRE(got == want);
    }
  for (int n = 4; n <= 64; n += 2) {
    bool want = frame_starter_exists(n);
    bool got = true;
    try {
      FrameStarter f = frame_starter(n);
      REQUIRE(valid_starter(f));
    } catch (const Error&) {
      got = false;
    }
    REQUIRE(got == want);
  }
}

TEST_CASE("determinism") {
  CHECK(extended_skolem(10, 5).pairs == extended_skolem(10, 5).pairs);
  CHECK(langford(8, 3).pairs == langford(8, 3).pairs);
  CHECK(frame_starter(16).pairs == frame_starter(16).pairs);
}
