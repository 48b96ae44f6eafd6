#include "plcurve/curvefile.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace plcurve {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string without_comment(const std::string& line) {
  std::size_t pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

SupportPoint parse_support_line(const std::string& line) {
  std::size_t open = line.find('(');
  std::size_t comma = line.find(',');
  std::size_t close = line.find(')');
  if (open == std::string::npos || comma == std::string::npos || close == std::string::npos ||
      !(open < comma && comma < close))
    throw parse_error("malformed support line: '" + line + "'");
  Rat a = Rat::parse(line.substr(open + 1, comma - open - 1));
  Rat b = Rat::parse(line.substr(comma + 1, close - comma - 1));
  std::string rest = strip(line.substr(close + 1));
  if (rest.empty()) throw parse_error("support point without coefficient: '" + line + "'");
  Rat coeff = Rat::parse(rest);
  return {a, b, PhasedRational::from_rational(coeff)};
}

}  // namespace

CurveFile parse_curve_file(const std::string& text) {
  CurveFile out;
  out.raw = text;
  std::istringstream in(text);
  std::string line;
  bool in_support = false;
  std::set<std::string> labels;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = strip(without_comment(line));
    if (body.empty()) continue;
    if (in_support) {
      if (body == "end") {
        in_support = false;
        continue;
      }
      out.support.points.push_back(parse_support_line(body));
      continue;
    }
    if (body == "support") {
      in_support = true;
      out.has_support = true;
      continue;
    }
    if (body.rfind("reference", 0) == 0) {
      std::string ref = strip(body.substr(9));
      if (ref != "x")
        throw parse_error("line " + std::to_string(lineno) +
                          ": the reference branch is fixed to Z(x)");
      continue;
    }
    if (body.rfind("branch", 0) == 0) {
      std::size_t eq = body.find('=');
      if (eq == std::string::npos)
        throw parse_error("line " + std::to_string(lineno) + ": expected 'branch <label> = <series>'");
      std::string label = strip(body.substr(6, eq - 6));
      if (label.empty() || label.find(' ') != std::string::npos)
        throw parse_error("line " + std::to_string(lineno) + ": bad branch label");
      if (!labels.insert(label).second)
        throw parse_error("line " + std::to_string(lineno) + ": duplicate label '" + label + "'");
      out.branches.push_back({parse_series(body.substr(eq + 1)), label});
      continue;
    }
    throw parse_error("line " + std::to_string(lineno) + ": unrecognized directive: '" + body + "'");
  }
  if (in_support) throw parse_error("unterminated support block");
  return out;
}

CurveFile load_curve_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_curve_file(ss.str());
}

}  // namespace plcurve
