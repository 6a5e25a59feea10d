// Acceptance suite: one pass/fail line per criterion, exact-integer checks.
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>

#include "ooc/bounds.hpp"
#include "ooc/ingredients.hpp"
#include "ooc/io.hpp"
#include "ooc/search.hpp"
#include "ooc/sequences.hpp"
#include "ooc/synthesis.hpp"
#include "ooc/verify.hpp"

using namespace ooc;

namespace {

int failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail = "") {
  std::printf("criterion %d [%s]: %s%s%s\n", idx, name, ok ? "PASS" : "FAIL",
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  // 1. optimal-grid reproduction + 7. dispatcher arm coverage
  std::set<std::string> fired;
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= 20 && ok; n += 2)
      for (int m = 1; m <= 12 && ok; ++m) {
        try {
          OocCode c = build_optimal(m, n);
          int64_t want = johnson(m, n, 3, 1) - mu(m, n).mu;
          if (c.size() != want) {
            ok = false;
            detail = "(" + std::to_string(m) + "," + std::to_string(n) + ") size " +
                     std::to_string(c.size()) + " != " + std::to_string(want);
            break;
          }
          if (!verify_ooc(c).ok) {
            ok = false;
            detail = "(" + std::to_string(m) + "," + std::to_string(n) + ") verifier rejected";
            break;
          }
          for (const std::string& a : fired_arms(c.prov)) fired.insert(a);
        } catch (const std::exception& e) {
          ok = false;
          detail = "(" + std::to_string(m) + "," + std::to_string(n) + ") threw: " + e.what();
        }
      }
    report(1, "optimal grid m<=12, even n<=20", ok,
           detail.empty() ? "120 points in " + std::to_string(seconds_since(t0)) + "s" : detail);
  }

  // 2. oracle equivalence for mn <= 14
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (int m = 1; m <= 14 && ok; ++m)
      for (int n = 1; m * n <= 14 && ok; ++n) {
        try {
          MaxOocResult res = max_ooc(m, n);
          int64_t want = johnson(m, n, 3, 1) - mu(m, n).mu;
          if (res.size != want) {
            ok = false;
            detail = "(" + std::to_string(m) + "," + std::to_string(n) + ") oracle " +
                     std::to_string(res.size) + " != " + std::to_string(want);
          } else if (!verify_ooc(res.witness).ok) {
            ok = false;
            detail = "witness rejected";
          }
        } catch (const std::exception& e) {
          ok = false;
          detail = e.what();
        }
      }
    report(2, "oracle equals J - mu for mn <= 14", ok,
           detail.empty() ? std::to_string(seconds_since(t0)) + "s" : detail);
  }

  // 3. bound-table consistency
  {
    bool ok = true;
    std::string detail;
    for (int m = 1; m <= 200 && ok; ++m)
      for (int n = 2; n <= 200; n += 2)
        if (j_star(m, n) != johnson(m, n, 3, 1) - mu(m, n).mu) {
          ok = false;
          detail = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
          break;
        }
    report(3, "J* = J - mu on the 200 x 200 even grid", ok, detail);
  }

  // 4. paper-exhibited objects
  {
    bool ok = true;
    std::string detail;
    auto expect = [&](bool cond, const std::string& what) {
      if (!cond && ok) {
        ok = false;
        detail = what;
      }
    };
    try {
      expect(table_code("ex-2x6").size() == 3, "2x6 example");
      expect(optimal_6xn(2).size() == 9, "6x2 seed");
      expect(hole_9_3(12).size() == 142, "[9:3] x 12");
      expect(table_code("t5x12").size() == 48, "5x12 table");
      expect(table_code("n4-m2").size() == 2, "n=4, m=2");
      expect(table_code("n4-m3").size() == 4, "n=4, m=3");
      expect(table_code("n4-m4").size() == 8, "n=4, m=4");
      expect(table_code("n4-m5").size() == 14, "n=4, m=5");
      for (char tab : {'A', 'B', 'E', 'F', 'G'})
        for (const std::string& key : appendix_keys(tab)) {
          auto obj = appendix_load(tab, key);
          if (auto* d = std::get_if<DesignObject>(&obj))
            expect(verify_design(*d).ok, std::string("appendix ") + tab + " " + key);
          else if (auto* c = std::get_if<OocCode>(&obj))
            expect(verify_ooc(*c).ok, std::string("appendix ") + tab + " " + key);
          else
            expect(!std::get<std::vector<Codeword>>(obj).empty(),
                   std::string("appendix ") + tab + " " + key);
        }
      // stated totals
      expect(std::get<DesignObject>(appendix_load('A', "t1-r8")).base_blocks.size() == 25, "A t1-r8");
      expect(std::get<DesignObject>(appendix_load('A', "t2-r8")).base_blocks.size() == 37, "A t2-r8");
      expect(std::get<DesignObject>(appendix_load('A', "t1-r9")).base_blocks.size() == 36, "A t1-r9");
      expect(std::get<DesignObject>(appendix_load('A', "t2-r9")).base_blocks.size() == 104, "A t2-r9");
      expect(std::get<DesignObject>(appendix_load('B', "t1")).base_blocks.size() == 108, "B t1");
      expect(std::get<DesignObject>(appendix_load('B', "t2")).base_blocks.size() == 312, "B t2");
      expect(std::get<OocCode>(appendix_load('E', "m7")).size() == j_star(7, 6), "E m7");
      expect(std::get<OocCode>(appendix_load('E', "m8")).size() == j_star(8, 6), "E m8");
      expect(std::get<OocCode>(appendix_load('E', "m10")).size() == j_star(10, 6), "E m10");
      expect(std::get<OocCode>(appendix_load('E', "m11")).size() == j_star(11, 6), "E m11");
      expect(std::get<OocCode>(appendix_load('F', "m7")).size() == j_star(7, 10), "F m7");
      expect(std::get<OocCode>(appendix_load('F', "m10")).size() == j_star(10, 10), "F m10");
      for (int n : {26, 34, 36, 42, 44, 50, 58, 60, 66, 68, 74, 82, 84, 90, 92, 98}) {
        auto g = std::get<std::vector<Codeword>>(appendix_load('G', "n" + std::to_string(n)));
        int want = n == 26 ? 2 : (n - 16) / 6;
        expect((int)g.size() == want, "G n" + std::to_string(n));
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    report(4, "paper-exhibited objects load, verify, match counts", ok, detail);
  }

  // 5. sequence-existence grid
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    auto probe = [&](bool want, auto&& fn, const std::string& what) {
      bool got = true;
      try {
        fn();
      } catch (const Error&) {
        got = false;
      }
      if (got != want && ok) {
        ok = false;
        detail = what;
      }
    };
    for (int v = 1; v <= 30 && ok; ++v) {
      for (int k = 1; k <= 2 * v + 1; ++k)
        probe(extended_skolem_exists(v, k), [&] { extended_skolem(v, k); },
              "extended v=" + std::to_string(v) + " k=" + std::to_string(k));
      for (int mm = 1; mm <= v; ++mm)
        probe(near_skolem_exists(v, mm), [&] { near_skolem(v, mm); },
              "near v=" + std::to_string(v) + " m=" + std::to_string(mm));
      for (int d = 1; d <= v + 2; ++d)
        probe(langford_exists(v, d), [&] { langford(v, d); },
              "langford v=" + std::to_string(v) + " d=" + std::to_string(d));
    }
    for (int s = 1; s <= 30 && ok; ++s)
      for (int d = 1; d <= 15; ++d)
        probe(triple_partition_exists(s, d), [&] { triple_partition(s, d); },
              "triples s=" + std::to_string(s) + " d=" + std::to_string(d));
    for (int n = 4; n <= 64 && ok; n += 2)
      probe(frame_starter_exists(n), [&] { frame_starter(n); }, "starter n=" + std::to_string(n));
    report(5, "sequence existence grid v <= 30, n <= 64", ok,
           detail.empty() ? std::to_string(seconds_since(t0)) + "s" : detail);
  }

  // 6. randomized composition closure + mutation rejection
  {
    bool ok = true;
    std::string detail;
    std::mt19937 rng(20260810);
    const int even_ns[] = {2, 4, 6, 8, 10, 12, 14, 16, 18, 20};
    std::map<std::pair<int, int>, OocCode> memo;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
      int m = 1 + (int)(rng() % 12);
      int n = even_ns[rng() % 10];
      try {
        auto key = std::make_pair(m, n);
        if (!memo.count(key)) memo[key] = build_optimal(m, n);
        const OocCode& c = memo[key];
        int64_t want = johnson(m, n, 3, 1) - mu(m, n).mu;
        if (c.size() != want || !verify_ooc(c).ok) {
          ok = false;
          detail = "composition (" + std::to_string(m) + "," + std::to_string(n) + ")";
          break;
        }
        if (c.size() == 0) continue;
        OocCode bad = c;
        size_t idx = rng() % bad.codewords.size();
        auto pts = bad.codewords[idx].points();
        int which = (int)(rng() % pts.size());
        int delta = 1 + (int)(rng() % (n == 1 ? 1 : n - 1));
        pts[which].col = (int)((pts[which].col + delta) % n);
        bool mutated = true;
        try {
          bad.codewords[idx] = Codeword(pts);
        } catch (const Error&) {
          mutated = false;  // mutation collided inside the codeword
        }
        if (mutated && n > 1) {
          auto rep = verify_ooc(bad);
          bool shrunk = false;
          {
            OocCode dedup = bad;
            normalize(dedup);
            shrunk = dedup.size() < c.size();
          }
          if (rep.ok && !shrunk) {
            // extremely unlikely: mutation must break a difference or duplicate
            ok = false;
            detail = "mutation accepted at (" + std::to_string(m) + "," + std::to_string(n) + ")";
          } else if (!rep.ok && !rep.witness.has_value()) {
            ok = false;
            detail = "rejection without witness";
          }
        }
      } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
      }
    }
    report(6, "1000 randomized compositions + mutation rejection", ok, detail);
  }

  // 7. dispatcher coverage (on-grid arms from criterion 1, off-grid arms via
  // dedicated parameter points)
  {
    bool ok = true;
    std::string detail;
    try {
      for (auto [m, n] : {std::pair{4, 22}, {4, 28}, {7, 22}, {7, 26}, {7, 30}, {5, 28},
                          {15, 12}, {13, 2}, {13, 14}, {13, 10}}) {
        OocCode c = build_optimal(m, n);
        if (c.size() != johnson(m, n, 3, 1) - mu(m, n).mu) {
          ok = false;
          detail = "extra point (" + std::to_string(m) + "," + std::to_string(n) + ")";
        }
        for (const std::string& a : fired_arms(c.prov)) fired.insert(a);
      }
      // odd-n search arm
      OocCode odd = build_optimal(5, 1);
      for (const std::string& a : fired_arms(odd.prov)) fired.insert(a);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    if (ok)
      for (const std::string& a : all_even_arms())
        if (!fired.count(a)) {
          ok = false;
          detail = "arm never fired: " + a;
          break;
        }
    report(7, "every dispatcher arm fired", ok, detail);
  }

  std::printf(failures == 0 ? "ALL CRITERIA PASS\n" : "%d CRITERIA FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
