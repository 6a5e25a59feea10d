// Command-line front end: build / hole / regular / verify / size / oracle /
// cache-build. Exit codes: 0 ok, 2 usage, 3 out of constructive scope,
// 4 ingredient gap, 5 budget exceeded, 6 verification reject, 1 other error.
#include <CLI11.hpp>
#include <iostream>

#include "ooc/bounds.hpp"
#include "ooc/io.hpp"
#include "ooc/search.hpp"
#include "ooc/synthesis.hpp"
#include "ooc/verify.hpp"

using namespace ooc;

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::OutOfConstructiveScope: return 3;
    case Errc::IngredientGap: return 4;
    case Errc::BudgetExceeded: return 5;
    case Errc::VerifyFailed: return 6;
    default: return 1;
  }
}

void print_report(int m, int n, int r, int g) {
  SizeReport rep = size_report(m, n, r, g);
  std::cout << "J=" << rep.J;
  if (rep.J_star >= 0) std::cout << " J*=" << rep.J_star;
  std::cout << " mu=" << rep.mu << " delta=" << rep.delta << " eta=" << rep.eta;
  if (rep.theta >= 0) std::cout << " theta=" << rep.theta;
  if (rep.upsilon >= 0) std::cout << " upsilon=" << rep.upsilon;
  std::cout << " branch=\"" << rep.branch << "\"\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construction engine and verifier for 2-D (m x n, 3, 1) optical orthogonal codes"};
  app.require_subcommand(1);

  int m = 0, n = 0, r = 0, g = 2;
  std::string out_path, in_path;

  auto* build = app.add_subcommand("build", "build an optimal (m x n, 3, 1) code");
  build->add_option("--m", m)->required();
  build->add_option("--n", n)->required();
  build->add_option("--out", out_path, "write the code file here");

  auto* hole = app.add_subcommand("hole", "build a Theta-sized [m:r] x n hole code");
  hole->add_option("--m", m)->required();
  hole->add_option("--r", r)->required();
  hole->add_option("--n", n)->required();
  hole->add_option("--out", out_path);

  auto* regular = app.add_subcommand("regular", "build an Upsilon-sized g-regular code");
  regular->add_option("--m", m)->required();
  regular->add_option("--r", r)->required();
  regular->add_option("--n", n)->required();
  regular->add_option("--g", g)->required();
  regular->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "verify a code file");
  verify->add_option("path", in_path)->required();

  auto* size = app.add_subcommand("size", "print the bound table for (m, n)");
  size->add_option("--m", m)->required();
  size->add_option("--n", n)->required();
  size->add_option("--r", r, "hole rows for Theta")->default_val(-1);
  size->add_option("--g", g, "subgroup order for Upsilon")->default_val(-1);

  auto* oracle = app.add_subcommand("oracle", "exact maximum size by branch and bound");
  oracle->add_option("--m", m)->required();
  oracle->add_option("--n", n)->required();

  auto* cache_build = app.add_subcommand("cache-build", "populate the ingredient cache");
  int grid_n = 20, grid_m = 12;
  cache_build->add_option("--max-n", grid_n);
  cache_build->add_option("--max-m", grid_m);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed() || hole->parsed() || regular->parsed()) {
      OocCode code;
      if (build->parsed()) {
        code = build_optimal(m, n);
        print_report(m, n, -1, -1);
      } else if (hole->parsed()) {
        code = build_hole(m, r, n);
        print_report(m, n, r, -1);
      } else {
        code = build_regular(m, r, n, g);
        print_report(m, n, r, g);
      }
      std::cout << "codewords=" << code.size() << "\n";
      std::cout << format_provenance(code.prov);
      if (!out_path.empty()) {
        write_file(out_path, export_code(code));
        std::cout << "wrote " << out_path << "\n";
      }
      return 0;
    }
    if (verify->parsed()) {
      OocCode code = parse_code(read_file(in_path));
      auto rep = verify_ooc(code);
      if (rep.ok) {
        std::cout << "accept: " << code.size() << " codewords on " << code.params.m << "x"
                  << code.params.n << "\n";
        return 0;
      }
      std::cout << "reject: " << rep.reason;
      if (rep.witness)
        std::cout << " at (i=" << rep.witness->i << ", j=" << rep.witness->j
                  << ", residue=" << rep.witness->residue << ")";
      std::cout << "\n";
      return 6;
    }
    if (size->parsed()) {
      print_report(m, n, r, g);
      return 0;
    }
    if (oracle->parsed()) {
      MaxOocResult res = max_ooc(m, n);
      std::cout << "max=" << res.size << " nodes=" << res.nodes << "\n";
      std::cout << export_code(res.witness);
      return 0;
    }
    if (cache_build->parsed()) {
      int built = 0;
      for (int nn = 2; nn <= grid_n; nn += 2)
        for (int mm = 1; mm <= grid_m; ++mm) {
          try {
            build_optimal(mm, nn);
            ++built;
          } catch (const Error& e) {
            std::cout << "(" << mm << "," << nn << ") failed: " << e.what() << "\n";
          }
        }
      std::cout << "built " << built << " grid points; cache is warm\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
