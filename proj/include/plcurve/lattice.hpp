#ifndef PLCURVE_LATTICE_HPP
#define PLCURVE_LATTICE_HPP

#include <vector>

#include "plcurve/rat.hpp"

namespace plcurve {

// Vector c*e1 + d*e2 of the rank-two weight lattice.
struct LatticeVector {
  Int c;
  Int d;

  bool operator==(const LatticeVector& o) const { return c == o.c && d == o.d; }
  LatticeVector operator+(const LatticeVector& o) const { return {c + o.c, d + o.d}; }
  bool is_primitive() const { return gcd(abs(c), abs(d)) == 1; }
};

Int det(const LatticeVector& u, const LatticeVector& v);

// Terms [a1,...,ak] with a1 >= 0, aj > 0 for j >= 2, and ak > 1 in canonical
// form unless the value is 1 or k = 1.
struct ContinuedFraction {
  std::vector<Int> terms;
};

ContinuedFraction cf_expand(const Rat& lambda);
Rat cf_value(const ContinuedFraction& cf);

// The wedge lambda /\ mu; the slope of the last common petal of the lotuses
// of lambda and mu.
Rat wedge(const Rat& lambda, const Rat& mu);

// p(lambda): the primitive lattice vector of slope lambda in [0, inf].
LatticeVector primitive_of_slope(const ExtRat& lambda);
ExtRat slope_of(const LatticeVector& v);

// True iff (u, v) is a lattice basis (determinant +-1). Inputs must be primitive.
bool is_regular_pair(const LatticeVector& u, const LatticeVector& v);

// Slopes of the primitive vectors along the lateral boundary of the lotus of
// lambda, in order of creation: the values of the continued fraction prefixes
// [a1,..,a_{j-1}, i] for i = 1..a_j.
std::vector<Rat> approximation_slopes(const Rat& lambda);

// Interior rays of the minimal regular subdivision of the fan of `slopes`,
// sorted increasing. Input slopes are contained in the output.
std::vector<Rat> regularize(const std::vector<Rat>& slopes);

}  // namespace plcurve

#endif
