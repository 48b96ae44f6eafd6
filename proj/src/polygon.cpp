#include "plcurve/polygon.hpp"

#include <algorithm>
#include <map>

namespace plcurve {

namespace {

using Pt = std::pair<Rat, Rat>;

// > 0 if the turn o -> a -> b is counterclockwise.
Rat cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.first - o.first) * (b.second - o.second) -
         (a.second - o.second) * (b.first - o.first);
}

}  // namespace

NewtonPolygon::NewtonPolygon(std::vector<Pt> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw domain_error("Newton polygon needs at least one vertex");
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    const Pt& u = vertices_[i];
    const Pt& v = vertices_[i + 1];
    if (!(u.first < v.first) || !(v.second < u.second))
      throw domain_error("Newton polygon edges must have negative slope");
    if (i + 2 < vertices_.size() && !(cross(u, v, vertices_[i + 2]) > Rat(0)))
      throw domain_error("Newton polygon vertices must be strictly convex");
  }
}

NewtonPolygon polygon_from_support(const Support& s) {
  if (s.points.empty()) throw domain_error("polygon of empty support");
  std::vector<Pt> pts;
  pts.reserve(s.points.size());
  for (const auto& p : s.points) {
    if (p.a.sign() < 0 || p.b.sign() < 0)
      throw domain_error("support point with negative coordinate");
    pts.emplace_back(p.a, p.b);
  }
  std::sort(pts.begin(), pts.end(), [](const Pt& u, const Pt& v) {
    if (u.first != v.first) return u.first < v.first;
    return u.second < v.second;
  });
  // Keep only the lowest point for each abscissa.
  std::vector<Pt> cols;
  for (const Pt& p : pts) {
    if (cols.empty() || cols.back().first != p.first) cols.push_back(p);
  }
  // Lower convex hull, then the strictly descending initial chain: edges of
  // non-negative slope are absorbed by the quadrant.
  std::vector<Pt> hull;
  for (const Pt& p : cols) {
    while (hull.size() >= 2 &&
           !(cross(hull[hull.size() - 2], hull.back(), p) > Rat(0)))
      hull.pop_back();
    hull.push_back(p);
  }
  std::vector<Pt> chain{hull.front()};
  for (std::size_t i = 1; i < hull.size(); ++i) {
    if (!(hull[i].second < chain.back().second)) break;
    chain.push_back(hull[i]);
  }
  return NewtonPolygon(std::move(chain));
}

NewtonPolygon polygon_of_elementary(const ElementaryPolygon& e) {
  if (e.a.is_infinite() && e.b.is_infinite())
    throw domain_error("elementary polygon with both entries infinite");
  if (e.a.is_infinite()) return NewtonPolygon({{Rat(0), e.b.rat()}});
  if (e.b.is_infinite()) return NewtonPolygon({{e.a.rat(), Rat(0)}});
  return NewtonPolygon({{Rat(0), e.b.rat()}, {e.a.rat(), Rat(0)}});
}

Rat trop_eval(const Support& s, const LatticeVector& w) {
  if (s.points.empty()) throw domain_error("tropicalization of empty support");
  if (w.c < 0 || w.d < 0) throw domain_error("tropicalization outside the first quadrant");
  bool first = true;
  Rat best(0);
  for (const auto& p : s.points) {
    Rat v = p.a * Rat(w.c) + p.b * Rat(w.d);
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

Rat trop_eval(const NewtonPolygon& p, const LatticeVector& w) {
  Support s;
  for (const auto& v : p.vertices()) s.points.push_back({v.first, v.second, {}});
  return trop_eval(s, w);
}

std::vector<Rat> newton_fan(const NewtonPolygon& p) {
  std::vector<Rat> slopes;
  for (std::size_t i = 0; i + 1 < p.vertices().size(); ++i) {
    const Pt& u = p.vertices()[i];
    const Pt& v = p.vertices()[i + 1];
    slopes.push_back((v.first - u.first) / (u.second - v.second));
  }
  return slopes;
}

std::vector<PhasedRational> edge_restriction(const Support& s, const Pt& from, const Pt& to) {
  NewtonPolygon poly = polygon_from_support(s);
  bool found = false;
  for (std::size_t i = 0; i + 1 < poly.vertices().size(); ++i) {
    const Pt a = poly.vertices()[i];
    const Pt b = poly.vertices()[i + 1];
    if ((a == from && b == to) || (a == to && b == from)) found = true;
  }
  if (!found) throw domain_error("edge_restriction: not a compact edge of the polygon");
  // Orient from the vertex with larger first coordinate.
  Pt m0 = from, m1 = to;
  if (m0.first < m1.first) std::swap(m0, m1);
  if (!m0.first.is_integer() || !m0.second.is_integer() || !m1.first.is_integer() ||
      !m1.second.is_integer())
    throw domain_error("edge_restriction requires a lattice edge");
  Int da = m1.first.num() - m0.first.num();
  Int db = m1.second.num() - m0.second.num();
  Int len = gcd(abs(da), abs(db));
  Rat stepa = Rat(da, len), stepb = Rat(db, len);
  std::map<std::pair<Rat, Rat>, PhasedRational> coeff;
  for (const auto& p : s.points) coeff[{p.a, p.b}] = p.coeff;
  std::vector<PhasedRational> out;
  for (Int k = 0; k <= len; ++k) {
    Pt m{m0.first + stepa * Rat(k), m0.second + stepb * Rat(k)};
    auto it = coeff.find(m);
    out.push_back(it == coeff.end() ? PhasedRational::zero() : it->second);
  }
  return out;
}

namespace {

// Polynomials over Q as coefficient vectors, low degree first.
using Poly = std::vector<Rat>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(Int(i)));
  poly_trim(d);
  return d;
}

Poly poly_mod(Poly a, const Poly& b) {
  poly_trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rat q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    poly_trim(a);
  }
  return a;
}

bool poly_squarefree(Poly p) {
  poly_trim(p);
  if (p.size() <= 1) return true;
  Poly d = poly_derivative(p);
  // gcd(p, p') must be constant
  Poly a = p, b = d;
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return a.size() == 1;
}

}  // namespace

bool is_newton_nondegenerate(const Support& s) {
  NewtonPolygon poly = polygon_from_support(s);
  for (std::size_t i = 0; i + 1 < poly.vertices().size(); ++i) {
    auto [from, to] = poly.edge(i);
    std::vector<PhasedRational> restr = edge_restriction(s, from, to);
    Poly p;
    for (const auto& c : restr) p.push_back(c.to_rational());
    if (!poly_squarefree(p)) return false;
  }
  return true;
}

NewtonPolygon minkowski_sum(const NewtonPolygon& p, const NewtonPolygon& q) {
  // Merge edge vectors by inclination; translate to the summed top vertex.
  std::map<Rat, std::pair<Rat, Rat>> edges;  // inclination -> (da, -db)
  auto collect = [&edges](const NewtonPolygon& poly) {
    for (std::size_t i = 0; i + 1 < poly.vertices().size(); ++i) {
      auto [u, v] = poly.edge(i);
      Rat da = v.first - u.first;
      Rat db = u.second - v.second;
      Rat inclination = da / db;
      auto it = edges.find(inclination);
      if (it == edges.end())
        edges[inclination] = {da, db};
      else {
        it->second.first += da;
        it->second.second += db;
      }
    }
  };
  collect(p);
  collect(q);
  Pt top{p.vertices().front().first + q.vertices().front().first,
         p.vertices().front().second + q.vertices().front().second};
  std::vector<Pt> verts{top};
  for (const auto& [inc, e] : edges) {
    const Pt& prev = verts.back();
    verts.emplace_back(prev.first + e.first, prev.second - e.second);
  }
  return NewtonPolygon(std::move(verts));
}

std::vector<ElementaryPolygon> elementary_decomposition(const NewtonPolygon& p) {
  std::vector<ElementaryPolygon> out;
  // The translate off the axes is carried by monomial elementary polygons.
  const Rat& a0 = p.vertices().front().first;
  const Rat& b_end = p.vertices().back().second;
  if (!a0.is_zero()) out.push_back({ExtRat(a0), ExtRat::infinity()});
  if (!b_end.is_zero()) out.push_back({ExtRat::infinity(), ExtRat(b_end)});
  for (std::size_t i = 0; i + 1 < p.vertices().size(); ++i) {
    auto [u, v] = p.edge(i);
    out.push_back({ExtRat(v.first - u.first), ExtRat(u.second - v.second)});
  }
  return out;
}

NewtonPolygon polygon_from_branches(const std::vector<Branch>& branches,
                                    const PuiseuxSeries& aux) {
  if (branches.empty()) throw domain_error("polygon of an empty branch list");
  if (aux.index() != 1)
    throw domain_error("auxiliary branch must be smooth (index 1)");
  bool first = true;
  NewtonPolygon acc({{Rat(0), Rat(0)}});
  for (const Branch& b : branches) {
    ExtRat k = coincidence_order(b.series, aux);
    if (k.is_infinite())
      throw domain_error("branch '" + b.label + "' equals the auxiliary branch");
    Int i = b.series.index();
    Rat e = k.rat();
    NewtonPolygon part = polygon_of_elementary({ExtRat(e * Rat(i)), ExtRat(Rat(i))});
    acc = first ? part : minkowski_sum(acc, part);
    first = false;
  }
  return acc;
}

}  // namespace plcurve
