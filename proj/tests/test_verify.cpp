#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "ooc/ingredients.hpp"
#include "ooc/verify.hpp"

using namespace ooc;

namespace {

OocCode example_2x6() {
  OocCode code;
  code.params = {2, 6, 3, 1};
  code.codewords = {Codeword(std::vector<Point>{{0, 0}, {0, 1}, {1, 2}}), Codeword(std::vector<Point>{{0, 0}, {0, 2}, {1, 5}}),
                    Codeword(std::vector<Point>{{0, 0}, {1, 0}, {1, 4}})};
  return code;
}

}  // namespace

TEST_CASE("difference table of the 2x6 example") {
  DiffTable t = diff_table(example_2x6());
  CHECK(t.total() == 18);
  auto multiset = [&](int i, int j) {
    std::vector<int> out;
    for (int d = 0; d < 6; ++d)
      for (int c = 0; c < t.at(i, j, d); ++c) out.push_back(d);
    return out;
  };
  CHECK(multiset(0, 0) == std::vector<int>{1, 2, 4, 5});
  CHECK(multiset(1, 1) == std::vector<int>{2, 4});
  CHECK(multiset(0, 1) == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(multiset(1, 0) == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("difference table basics") {
  OocCode empty;
  empty.params = {3, 5, 3, 1};
  CHECK(diff_table(empty).total() == 0);
  OocCode single;
  single.params = {1, 7, 3, 1};
  single.codewords = {Codeword(std::vector<Point>{{0, 0}, {0, 1}, {0, 3}})};
  DiffTable t = diff_table(single);
  for (int d = 1; d <= 6; ++d) CHECK(t.at(0, 0, d) == 1);
}

TEST_CASE("verify accepts the example and rejects a duplicate") {
  CHECK(verify_ooc(example_2x6()).ok);
  OocCode bad = example_2x6();
  bad.codewords.push_back(shift(bad.codewords[0], 3, 6));
  auto rep = verify_ooc(bad);
  CHECK(!rep.ok);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->first.has_value());
  CHECK(rep.witness->second.has_value());
}

TEST_CASE("matrix oracle agrees with the difference method") {
  CHECK(verify_correlation_matrix(example_2x6()));
  OocCode bad = example_2x6();
  bad.codewords.push_back(shift(bad.codewords[1], 2, 6));
  CHECK(!verify_correlation_matrix(bad));
  CHECK(!verify_ooc(bad).ok);
}

TEST_CASE("oracle equivalence on random instances") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int m = 1 + (int)(rng() % 4), n = 2 + (int)(rng() % 9);
    if (m * n < 6) n += 5;  // keep enough cells for distinct triples
    OocCode code;
    code.params = {m, n, 3, 1};
    int b = 1 + (int)(rng() % 4);
    std::set<Codeword> cws;
    for (int i = 0; i < b; ++i) {
      std::set<Point> pts;
      while ((int)pts.size() < 3) pts.insert({(int)(rng() % m), (int)(rng() % n)});
      cws.insert(Codeword(std::vector<Point>(pts.begin(), pts.end())));
    }
    code.codewords.assign(cws.begin(), cws.end());
    CHECK(verify_ooc(code).ok == verify_correlation_matrix(code));
  }
}

TEST_CASE("accepted even-n codes avoid 0 and n/2 pure differences") {
  OocCode code = example_2x6();
  DiffTable t = diff_table(code);
  for (int i = 0; i < 2; ++i) {
    CHECK(t.at(i, i, 0) == 0);
    CHECK(t.at(i, i, 3) == 0);
  }
}

TEST_CASE("hole and regular conditions") {
  // a [2:1] x 8 regular code from a frame starter
  OocCode reg = regular_21xn(8);
  CHECK(verify_ooc(reg).ok);
  CHECK(reg.size() == 3);
  OocCode broken = reg;
  broken.regular_g = 4;  // wrong subgroup order
  CHECK(!verify_ooc(broken).ok);
  OocCode holed = reg;
  holed.regular_g = 0;
  holed.hole_rows = 2;  // row 1 produces pure differences, so this must fail
  CHECK(!verify_ooc(holed).ok);
}

TEST_CASE("design verification accepts the embedded 6^3 2^1 table") {
  DesignObject d = gdd_6321();
  CHECK(verify_design(d).ok);
  CHECK(d.base_blocks.size() == 24);
  DesignObject broken = d;
  broken.base_blocks.pop_back();
  CHECK(!verify_design(broken).ok);
}

TEST_CASE("developing a design reproduces pairwise coverage") {
  DesignObject d = gdd_6321();
  auto blocks = develop_cols(d.base_blocks, d.modulus);
  CHECK(blocks.size() == 48);
  // brute force: every cross-group pair exactly once
  std::map<std::pair<int, int>, int> pair_count;
  for (const Codeword& b : blocks)
    for (const Point& p : b.points())
      for (const Point& q : b.points()) {
        if (!(p < q)) continue;
        pair_count[{p.row * 2 + p.col, q.row * 2 + q.col}]++;
      }
  int cross = 0;
  for (auto& [pq, c] : pair_count) {
    CHECK(c == 1);
    cross += c;
  }
  // 20 points in groups of 6,6,6,2: cross pairs = (20*19 - 3*30 - 2)/2
  CHECK(cross == (20 * 19 - 3 * 6 * 5 - 2 * 1) / 2);
}
