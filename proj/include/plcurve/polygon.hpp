#ifndef PLCURVE_POLYGON_HPP
#define PLCURVE_POLYGON_HPP

#include <utility>
#include <vector>

#include "plcurve/lattice.hpp"
#include "plcurve/phased.hpp"
#include "plcurve/puiseux.hpp"
#include "plcurve/rat.hpp"

namespace plcurve {

// One support point (a, b) with an optional coefficient (zero = geometry only).
struct SupportPoint {
  Rat a;
  Rat b;
  PhasedRational coeff;
};

struct Support {
  std::vector<SupportPoint> points;
};

// Boundary data of Conv(support + first quadrant): vertices listed from the
// vertical-axis end to the horizontal-axis end. Exponents may be rational.
class NewtonPolygon {
 public:
  explicit NewtonPolygon(std::vector<std::pair<Rat, Rat>> vertices);

  const std::vector<std::pair<Rat, Rat>>& vertices() const { return vertices_; }
  std::size_t edge_count() const { return vertices_.size() - 1; }
  std::pair<std::pair<Rat, Rat>, std::pair<Rat, Rat>> edge(std::size_t i) const {
    return {vertices_[i], vertices_[i + 1]};
  }

  bool operator==(const NewtonPolygon& o) const { return vertices_ == o.vertices_; }

 private:
  std::vector<std::pair<Rat, Rat>> vertices_;
};

// Pair (a, b) standing for the polygon of x^a + y^b; a or b may be infinite
// (monomial polygons), not both.
struct ElementaryPolygon {
  ExtRat a;
  ExtRat b;

  bool operator==(const ElementaryPolygon& o) const { return a == o.a && b == o.b; }
};

NewtonPolygon polygon_from_support(const Support& s);
NewtonPolygon polygon_of_elementary(const ElementaryPolygon& e);

// min over the support of w . m.
Rat trop_eval(const Support& s, const LatticeVector& w);
Rat trop_eval(const NewtonPolygon& p, const LatticeVector& w);

// Increasing slopes of the interior rays orthogonal to the compact edges.
std::vector<Rat> newton_fan(const NewtonPolygon& p);

// Coefficients of the restriction of the support to a compact edge, read from
// the vertex of larger first coordinate; degree = integral length of the edge.
std::vector<PhasedRational> edge_restriction(const Support& s,
                                             const std::pair<Rat, Rat>& from,
                                             const std::pair<Rat, Rat>& to);

// True iff every edge restriction has only simple roots (squarefree over Q).
// Coefficients must be real (phase 0 or 1/2).
bool is_newton_nondegenerate(const Support& s);

NewtonPolygon minkowski_sum(const NewtonPolygon& p, const NewtonPolygon& q);

// Inverse of the Minkowski sum: elementary polygons with pairwise distinct
// inclinations, one per compact edge.
std::vector<ElementaryPolygon> elementary_decomposition(const NewtonPolygon& p);

// Newton polygon of a branch system relative to the cross (Z(x), aux):
// the Minkowski sum of i_L(C_l) * |_ k(C_l, aux), 1 _| over the branches.
// aux is a smooth branch series (index 1) or the zero series for Z(y).
NewtonPolygon polygon_from_branches(const std::vector<Branch>& branches,
                                    const PuiseuxSeries& aux);

}  // namespace plcurve

#endif
