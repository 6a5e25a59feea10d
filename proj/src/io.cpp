#include "ooc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ooc {

namespace {

std::string format_codeword(const Codeword& cw) {
  std::ostringstream os;
  bool first = true;
  for (const Point& p : cw.points()) {
    if (!first) os << ' ';
    first = false;
    os << p.row << ',' << p.col;
  }
  return os.str();
}

std::vector<std::string> sorted_lines(const std::vector<Codeword>& cws) {
  std::vector<std::string> lines;
  lines.reserve(cws.size());
  for (const Codeword& cw : cws) lines.push_back(format_codeword(cw));
  std::sort(lines.begin(), lines.end());
  return lines;
}

Codeword parse_codeword_line(const std::string& line, int lineno) {
  std::istringstream is(line);
  std::vector<Point> pts;
  std::string tok;
  while (is >> tok) {
    size_t comma = tok.find(',');
    if (comma == std::string::npos)
      fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected row,col");
    try {
      pts.push_back({std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1))});
    } catch (const std::exception&) {
      fail(Errc::ParseError, "line " + std::to_string(lineno) + ": bad integer");
    }
  }
  if (pts.empty()) fail(Errc::ParseError, "line " + std::to_string(lineno) + ": empty codeword");
  return Codeword(std::move(pts));
}

// Splits a header into key=value pairs; bare tokens after type= accumulate.
std::pair<std::string, std::vector<std::pair<std::string, std::string>>> parse_header(
    const std::string& line) {
  std::istringstream is(line);
  std::string word;
  is >> word;
  std::vector<std::pair<std::string, std::string>> kv;
  std::string tok;
  while (is >> tok) {
    size_t eq = tok.find('=');
    if (eq != std::string::npos)
      kv.push_back({tok.substr(0, eq), tok.substr(eq + 1)});
    else if (!kv.empty())
      kv.back().second += " " + tok;
    else
      fail(Errc::ParseError, "stray header token: " + tok);
  }
  return {word, kv};
}

GroupType parse_group_type(const std::string& s) {
  GroupType gt;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    size_t caret = tok.find('^');
    if (caret == std::string::npos) fail(Errc::ParseError, "bad group type token: " + tok);
    gt.parts.push_back({std::stoll(tok.substr(0, caret)), std::stoi(tok.substr(caret + 1))});
  }
  gt.canonicalize();
  return gt;
}

}  // namespace

std::string export_code(const OocCode& code) {
  std::ostringstream os;
  os << "ooc m=" << code.params.m << " n=" << code.params.n << " k=" << code.params.k
     << " lambda=" << code.params.lambda << " hole=" << code.hole_rows
     << " regular=" << code.regular_g << "\n";
  for (const std::string& l : sorted_lines(code.codewords)) os << l << "\n";
  return os.str();
}

OocCode parse_code(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  OocCode code;
  bool header = false;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (size_t h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!header) {
      auto [word, kv] = parse_header(line);
      if (word != "ooc") fail(Errc::ParseError, "expected 'ooc' header");
      for (auto& [k, v] : kv) {
        if (k == "m") code.params.m = std::stoi(v);
        else if (k == "n") code.params.n = std::stoi(v);
        else if (k == "k") code.params.k = std::stoi(v);
        else if (k == "lambda") code.params.lambda = std::stoi(v);
        else if (k == "hole") code.hole_rows = std::stoi(v);
        else if (k == "regular") code.regular_g = std::stoi(v);
        else fail(Errc::ParseError, "unknown header key: " + k);
      }
      header = true;
      continue;
    }
    code.codewords.push_back(parse_codeword_line(line, lineno));
  }
  if (!header) fail(Errc::ParseError, "missing header");
  normalize(code);
  return code;
}

std::string export_design(const DesignObject& d) {
  std::ostringstream os;
  os << "design kind=" << design_kind_name(d.kind) << " modulus=" << d.modulus
     << " rows=" << d.num_rows;
  if (d.hole_order) os << " w=" << d.hole_order;
  if (d.group_rows != 1) os << " h=" << d.group_rows;
  if (d.expected_blocks >= 0) os << " blocks=" << d.expected_blocks;
  os << " type=" << d.group_type.str() << " hole_rows=" << d.hole_rows << "\n";
  for (const std::string& l : sorted_lines(d.base_blocks)) os << l << "\n";
  return os.str();
}

DesignObject parse_design(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  DesignObject d;
  bool header = false;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (size_t h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!header) {
      auto [word, kv] = parse_header(line);
      if (word != "design") fail(Errc::ParseError, "expected 'design' header");
      for (auto& [k, v] : kv) {
        if (k == "kind") {
          bool known = false;
          for (DesignKind kd : {DesignKind::StrictCyclicGdd, DesignKind::NCyclicGdd,
                                DesignKind::NCyclicGdp, DesignKind::WtCyclicHgdd,
                                DesignKind::Schgdd, DesignKind::Scihgdd, DesignKind::CosetGdd})
            if (v == design_kind_name(kd)) {
              d.kind = kd;
              known = true;
            }
          if (!known) fail(Errc::ParseError, "unknown design kind: " + v);
        } else if (k == "modulus") d.modulus = std::stoi(v);
        else if (k == "rows") d.num_rows = std::stoi(v);
        else if (k == "w") d.hole_order = std::stoi(v);
        else if (k == "h") d.group_rows = std::stoi(v);
        else if (k == "blocks") d.expected_blocks = std::stoll(v);
        else if (k == "type") d.group_type = parse_group_type(v);
        else if (k == "hole_rows") d.hole_rows = std::stoi(v);
        else fail(Errc::ParseError, "unknown header key: " + k);
      }
      header = true;
      continue;
    }
    d.base_blocks.push_back(parse_codeword_line(line, lineno));
  }
  if (!header) fail(Errc::ParseError, "missing header");
  std::sort(d.base_blocks.begin(), d.base_blocks.end());
  // reconstruct the row-group map for row-partitioned kinds
  if (d.kind == DesignKind::NCyclicGdd || d.kind == DesignKind::NCyclicGdp) {
    d.row_group.clear();
    int gid = 0;
    for (auto [size, count] : d.group_type.parts) {
      if (size % d.modulus != 0) fail(Errc::ParseError, "type inconsistent with modulus");
      int v = (int)(size / d.modulus);
      for (int c = 0; c < count; ++c, ++gid)
        for (int t = 0; t < v; ++t) d.row_group.push_back(gid);
    }
    if (d.num_rows == 0) d.num_rows = (int)d.row_group.size();
    if (d.num_rows != (int)d.row_group.size())
      fail(Errc::ParseError, "rows inconsistent with type");
  }
  return d;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(Errc::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(Errc::ParseError, "cannot write " + path);
  f << text;
}

std::string format_provenance(const Provenance& p, int indent) {
  std::string out(indent * 2, ' ');
  out += p.label.empty() ? "(unlabeled)" : p.label;
  out += "\n";
  for (const Provenance& c : p.children) out += format_provenance(c, indent + 1);
  return out;
}

}  // namespace ooc
