#include "plcurve/lattice.hpp"

#include <algorithm>
#include <set>

namespace plcurve {

Int det(const LatticeVector& u, const LatticeVector& v) {
  return u.c * v.d - u.d * v.c;
}

ContinuedFraction cf_expand(const Rat& lambda) {
  if (lambda.sign() <= 0) throw domain_error("cf_expand requires a positive rational");
  ContinuedFraction cf;
  Rat x = lambda;
  for (;;) {
    Int a = x.floor();
    cf.terms.push_back(a);
    Rat r = x.frac();
    if (r.is_zero()) break;
    x = Rat(1) / r;
  }
  // The floor algorithm already ends with a term > 1 whenever k >= 2.
  return cf;
}

Rat cf_value(const ContinuedFraction& cf) {
  if (cf.terms.empty()) throw domain_error("cf_value of empty term list");
  Rat x(cf.terms.back());
  for (auto it = std::next(cf.terms.rbegin()); it != cf.terms.rend(); ++it) {
    if (x.is_zero()) throw domain_error("cf_value hit a zero tail");
    x = Rat(*it) + Rat(1) / x;
  }
  return x;
}

Rat wedge(const Rat& lambda, const Rat& mu) {
  ContinuedFraction a = cf_expand(lambda);
  ContinuedFraction b = cf_expand(mu);
  std::size_t j = 0;
  while (j < a.terms.size() && j < b.terms.size() && a.terms[j] == b.terms[j]) ++j;
  // Normalize so that either a ends at the common prefix, or a has the
  // smaller term right after it.
  if (j == b.terms.size() || (j < a.terms.size() && a.terms[j] > b.terms[j]))
    std::swap(a, b);
  std::size_t k = a.terms.size();
  ContinuedFraction w;
  if (k == j) {
    w.terms = a.terms;
  } else {
    w.terms.assign(a.terms.begin(), a.terms.begin() + j + 1);
    if (k > j + 1) w.terms.back() += 1;
  }
  return cf_value(w);
}

LatticeVector primitive_of_slope(const ExtRat& lambda) {
  if (lambda.is_infinite()) return {0, 1};
  const Rat& r = lambda.rat();
  if (r.sign() < 0) throw domain_error("primitive_of_slope of a negative slope");
  return {r.den(), r.num()};
}

ExtRat slope_of(const LatticeVector& v) {
  if (v.c == 0 && v.d == 0) throw domain_error("slope of the zero vector");
  if (v.c == 0) return ExtRat::infinity();
  return Rat(v.d, v.c);
}

bool is_regular_pair(const LatticeVector& u, const LatticeVector& v) {
  if (!u.is_primitive() || !v.is_primitive())
    throw domain_error("is_regular_pair requires primitive vectors");
  Int d = det(u, v);
  return d == 1 || d == -1;
}

std::vector<Rat> approximation_slopes(const Rat& lambda) {
  ContinuedFraction cf = cf_expand(lambda);
  std::vector<Rat> out;
  ContinuedFraction prefix;
  for (std::size_t j = 0; j < cf.terms.size(); ++j) {
    prefix.terms.push_back(0);
    for (Int i = 1; i <= cf.terms[j]; ++i) {
      prefix.terms.back() = i;
      out.push_back(cf_value(prefix));
    }
  }
  return out;
}

std::vector<Rat> regularize(const std::vector<Rat>& slopes) {
  std::set<Rat> acc;
  for (const Rat& s : slopes) {
    if (s.sign() <= 0) throw domain_error("regularize expects slopes in (0, inf)");
    std::vector<Rat> seq = approximation_slopes(s);
    acc.insert(seq.begin(), seq.end());
  }
  return std::vector<Rat>(acc.begin(), acc.end());
}

}  // namespace plcurve
