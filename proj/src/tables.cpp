#include "ooc/tables.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

namespace ooc {

std::string data_dir() {
  if (const char* env = std::getenv("OOC_DATA_DIR")) return env;
#ifdef OOC_DATA_DIR
  return OOC_DATA_DIR;
#else
  return "data";
#endif
}

int resolve_col(const std::string& tok, const ColCtx& ctx) {
  if (tok.empty()) fail(Errc::ParseError, "empty column token");
  if (std::isdigit((unsigned char)tok[0])) return std::stoi(tok);
  int base = 0;
  switch (tok[0]) {
    case 'h': base = ctx.n / 2; break;
    case 'q': base = ctx.n / 4; break;
    case 'Q': base = 3 * ctx.n / 4; break;
    case 'N': base = ctx.n; break;
    case 'A': base = (ctx.n - 6) / 4; break;
    case 'B': base = (ctx.n + 6) / 4; break;
    case 'C': base = (ctx.n - 2) / 4; break;
    case 'D': base = (ctx.n - 2) / 2; break;
    case 'u': base = ctx.u; break;
    case 'v': base = ctx.v; break;
    case 'w': base = ctx.w; break;
    default: fail(Errc::ParseError, "unknown column token: " + tok);
  }
  if (tok.size() > 1) base += std::stoi(tok.substr(1));
  return base;
}

namespace {

std::map<std::string, RawTable> load_all() {
  std::map<std::string, RawTable> out;
  namespace fs = std::filesystem;
  std::string dir = data_dir();
  if (!fs::exists(dir)) fail(Errc::ParseError, "data directory not found: " + dir);
  std::vector<fs::path> files;
  for (auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".txt") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const fs::path& path : files) {
    std::ifstream f(path);
    std::string line;
    RawTable cur;
    bool in_table = false;
    while (std::getline(f, line)) {
      if (size_t h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
      std::istringstream is(line);
      std::string word;
      if (!(is >> word)) continue;
      if (word == "table") {
        is >> cur.key;
        cur.meta.clear();
        cur.entries.clear();
        in_table = true;
      } else if (word == "meta" && in_table) {
        std::string kv;
        while (is >> kv) {
          size_t eq = kv.find('=');
          if (eq != std::string::npos) cur.meta[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
      } else if (word == "cw" && in_table) {
        RawTable::Entry e;
        std::string tok;
        int idx = 0;
        while (is >> tok) {
          if (tok == "*") {
            e.star = true;
            continue;
          }
          size_t comma = tok.find(',');
          if (comma == std::string::npos || idx >= 3)
            fail(Errc::ParseError, "bad table entry in " + path.string());
          e.pts[idx++] = {std::stoi(tok.substr(0, comma)), tok.substr(comma + 1)};
        }
        if (idx != 3) fail(Errc::ParseError, "table entry needs 3 points: " + path.string());
        cur.entries.push_back(e);
      } else if (word == "end" && in_table) {
        out[cur.key] = cur;
        in_table = false;
      }
    }
  }
  return out;
}

const std::map<std::string, RawTable>& tables() {
  static std::map<std::string, RawTable> t = load_all();
  return t;
}

}  // namespace

const RawTable& get_table(const std::string& key) {
  auto it = tables().find(key);
  if (it == tables().end()) fail(Errc::UnknownKey, "no table named " + key);
  return it->second;
}

bool has_table(const std::string& key) { return tables().count(key) > 0; }

std::vector<Codeword> instantiate(const RawTable& t, const ColCtx& ctx) {
  std::vector<Codeword> out;
  out.reserve(t.entries.size());
  for (const auto& e : t.entries) {
    std::vector<Point> pts;
    for (const auto& [row, col] : e.pts) {
      int c = resolve_col(col, ctx);
      if (ctx.n > 0) c = (int)imod(c, ctx.n);
      pts.push_back({row, c});
    }
    out.push_back(Codeword(std::move(pts)));
  }
  return out;
}

std::vector<bool> star_flags(const RawTable& t) {
  std::vector<bool> out;
  out.reserve(t.entries.size());
  for (const auto& e : t.entries) out.push_back(e.star);
  return out;
}

}  // namespace ooc
