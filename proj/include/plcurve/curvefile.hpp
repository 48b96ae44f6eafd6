#ifndef PLCURVE_CURVEFILE_HPP
#define PLCURVE_CURVEFILE_HPP

#include <string>
#include <vector>

#include "plcurve/polygon.hpp"
#include "plcurve/puiseux.hpp"

namespace plcurve {

// Line-oriented input: '#' comments, `branch <label> = <series>` declarations,
// an optional `support` ... `end` block of `(a,b) coeff` lines, and an
// optional `reference x` line (the reference branch is fixed to Z(x)).
struct CurveFile {
  std::vector<Branch> branches;
  Support support;
  bool has_support = false;
  std::string raw;
};

CurveFile parse_curve_file(const std::string& text);
CurveFile load_curve_file(const std::string& path);

}  // namespace plcurve

#endif
