#pragma once

#include <map>
#include <string>
#include <vector>

#include "ooc/model.hpp"

namespace ooc {

// A table from the data directory: rows are literal, columns may be
// symbolic (resolved against a ColCtx at instantiation time).
struct RawTable {
  std::string key;
  std::map<std::string, std::string> meta;
  struct Entry {
    std::array<std::pair<int, std::string>, 3> pts;  // (row, column token)
    bool star = false;
  };
  std::vector<Entry> entries;
};

struct ColCtx {
  int n = 0;
  int u = 0, v = 0, w = 0;  // offsets computed by the caller
};

// Column token grammar: INT | h|q|Q|N|A|B|C|D|u|v|w with optional +/-INT.
// h=n/2 q=n/4 Q=3n/4 N=n A=(n-6)/4 B=(n+6)/4 C=(n-2)/4 D=(n-2)/2.
int resolve_col(const std::string& tok, const ColCtx& ctx);

const RawTable& get_table(const std::string& key);  // UnknownKey if absent
bool has_table(const std::string& key);

std::vector<Codeword> instantiate(const RawTable& t, const ColCtx& ctx);
std::vector<bool> star_flags(const RawTable& t);

std::string data_dir();

}  // namespace ooc
