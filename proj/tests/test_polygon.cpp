#include <random>

#include "doctest.h"
#include "plcurve/ewtree.hpp"
#include "plcurve/polygon.hpp"

using namespace plcurve;

namespace {

Support support_of(std::initializer_list<std::tuple<long, long, long>> pts) {
  Support s;
  for (auto [a, b, c] : pts)
    s.points.push_back({Rat(Int(a)), Rat(Int(b)), PhasedRational::from_rational(Rat(Int(c)))});
  return s;
}

// y^5 - 4x^3y^3 - x^7y^2 + 4x^10
Support quintic() {
  return support_of({{0, 5, 1}, {3, 3, -4}, {7, 2, -1}, {10, 0, 4}});
}

// f of the four-vertex example:
// -x^12 + x^14 + x^7y^2 + 2x^5y^3 - x^10y^3 + x^3y^4 + 3x^7y^4 + y^9
Support fourvertex() {
  return support_of({{12, 0, -1},
                     {14, 0, 1},
                     {7, 2, 1},
                     {5, 3, 2},
                     {10, 3, -1},
                     {3, 4, 1},
                     {7, 4, 3},
                     {0, 9, 1}});
}

std::vector<std::pair<Rat, Rat>> verts(std::initializer_list<std::pair<long, long>> vs) {
  std::vector<std::pair<Rat, Rat>> out;
  for (auto [a, b] : vs) out.emplace_back(Rat(Int(a)), Rat(Int(b)));
  return out;
}

Branch B(const std::string& label, const std::string& text) {
  return {parse_series(text), label};
}

}  // namespace

TEST_CASE("polygon from support") {
  CHECK(polygon_from_support(quintic()).vertices() == verts({{0, 5}, {3, 3}, {10, 0}}));
  CHECK(polygon_from_support(fourvertex()).vertices() ==
        verts({{0, 9}, {3, 4}, {7, 2}, {12, 0}}));
  Support single = support_of({{2, 3, 1}});
  CHECK(polygon_from_support(single).vertices() == verts({{2, 3}}));
  CHECK(polygon_from_support(single).edge_count() == 0);
  CHECK_THROWS_AS(polygon_from_support(Support{}), domain_error);
}

TEST_CASE("tropicalization") {
  CHECK(trop_eval(fourvertex(), {1, 1}) == Rat(7));
  CHECK(trop_eval(fourvertex(), {1, 0}) == Rat(0));
  Support single = support_of({{2, 3, 1}});
  CHECK(trop_eval(single, {4, 5}) == Rat(23));

  // trop equals the min over polygon vertices
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> coord(0, 12);
  NewtonPolygon p = polygon_from_support(fourvertex());
  for (int i = 0; i < 100; ++i) {
    LatticeVector w{coord(rng), coord(rng)};
    CHECK(trop_eval(fourvertex(), w) == trop_eval(p, w));
  }
}

TEST_CASE("newton fan") {
  CHECK(newton_fan(polygon_from_support(fourvertex())) ==
        std::vector<Rat>{rat(3, 5), Rat(2), rat(5, 2)});
  CHECK(newton_fan(polygon_from_support(quintic())) == std::vector<Rat>{rat(3, 2), rat(7, 3)});
  CHECK(newton_fan(polygon_from_support(support_of({{2, 3, 1}}))).empty());
}

TEST_CASE("polygon is the intersection of fan half planes") {
  // every support point satisfies w . m >= trop(w) for the fan rays, with
  // equality exactly on the matching edge
  NewtonPolygon p = polygon_from_support(fourvertex());
  for (const Rat& s : newton_fan(p)) {
    LatticeVector w{s.den(), s.num()};
    Rat t = trop_eval(fourvertex(), w);
    for (const auto& pt : fourvertex().points)
      CHECK_FALSE(pt.a * Rat(w.c) + pt.b * Rat(w.d) < t);
  }
}

TEST_CASE("edge restriction") {
  Support f = fourvertex();
  auto poly = polygon_from_support(f);
  std::vector<PhasedRational> r =
      edge_restriction(f, {Rat(3), Rat(4)}, {Rat(7), Rat(2)});
  REQUIRE(r.size() == 3);
  CHECK(r[0] == PhasedRational::one());
  CHECK(r[1] == PhasedRational::from_rational(Rat(2)));
  CHECK(r[2] == PhasedRational::one());

  std::vector<PhasedRational> r2 =
      edge_restriction(f, {Rat(0), Rat(9)}, {Rat(3), Rat(4)});
  REQUIRE(r2.size() == 2);
  CHECK(r2[0] == PhasedRational::one());
  CHECK(r2[1] == PhasedRational::one());

  std::vector<PhasedRational> r3 =
      edge_restriction(quintic(), {Rat(0), Rat(5)}, {Rat(3), Rat(3)});
  REQUIRE(r3.size() == 2);
  CHECK(r3[0] == PhasedRational::from_rational(Rat(-4)));
  CHECK(r3[1] == PhasedRational::one());

  CHECK_THROWS_AS(edge_restriction(f, {Rat(0), Rat(9)}, {Rat(7), Rat(2)}), domain_error);
}

TEST_CASE("newton non-degeneracy") {
  CHECK_FALSE(is_newton_nondegenerate(fourvertex()));
  CHECK(is_newton_nondegenerate(quintic()));
  CHECK(is_newton_nondegenerate(support_of({{5, 0, 1}, {0, 3, -1}})));
  CHECK(is_newton_nondegenerate(support_of({{4, 0, 1}, {0, 2, -1}})));  // x^4 - y^2
}

TEST_CASE("minkowski sum and decomposition") {
  NewtonPolygon a = polygon_of_elementary({ExtRat(Rat(3)), ExtRat(Rat(2))});
  NewtonPolygon b = polygon_of_elementary({ExtRat(Rat(7)), ExtRat(Rat(3))});
  CHECK(minkowski_sum(a, b).vertices() == verts({{0, 5}, {3, 3}, {10, 0}}));

  NewtonPolygon pt({{Rat(0), Rat(0)}});
  CHECK(minkowski_sum(a, pt) == a);

  CHECK(minkowski_sum(a, a).vertices() == verts({{0, 4}, {6, 0}}));

  auto dec = elementary_decomposition(polygon_from_support(quintic()));
  REQUIRE(dec.size() == 2);
  CHECK(dec[0] == ElementaryPolygon{ExtRat(Rat(3)), ExtRat(Rat(2))});
  CHECK(dec[1] == ElementaryPolygon{ExtRat(Rat(7)), ExtRat(Rat(3))});

  auto dec1 = elementary_decomposition(a);
  REQUIRE(dec1.size() == 1);
  CHECK(dec1[0] == ElementaryPolygon{ExtRat(Rat(3)), ExtRat(Rat(2))});

  auto dec4 = elementary_decomposition(polygon_from_support(fourvertex()));
  REQUIRE(dec4.size() == 3);
  CHECK(dec4[0] == ElementaryPolygon{ExtRat(Rat(3)), ExtRat(Rat(5))});
  CHECK(dec4[1] == ElementaryPolygon{ExtRat(Rat(4)), ExtRat(Rat(2))});
  CHECK(dec4[2] == ElementaryPolygon{ExtRat(Rat(5)), ExtRat(Rat(2))});
}

TEST_CASE("minkowski and decomposition are mutually inverse") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> edges(1, 6);
  std::uniform_int_distribution<long> step(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    // random convex polygon: edges with strictly increasing inclinations
    int k = edges(rng);
    std::vector<std::pair<Rat, Rat>> incs;
    for (int i = 0; i < k; ++i) incs.emplace_back(Rat(Int(step(rng))), Rat(Int(step(rng))));
    std::sort(incs.begin(), incs.end(),
              [](const auto& u, const auto& v) { return u.first * v.second < v.first * u.second; });
    incs.erase(std::unique(incs.begin(), incs.end(),
                           [](const auto& u, const auto& v) {
                             return u.first * v.second == v.first * u.second;
                           }),
               incs.end());
    Rat height(0);
    for (const auto& [da, db] : incs) height += db;
    std::vector<std::pair<Rat, Rat>> vs{{Rat(0), height}};
    for (const auto& [da, db] : incs) {
      const auto& prev = vs.back();
      vs.emplace_back(prev.first + da, prev.second - db);
    }
    NewtonPolygon p(vs);
    std::vector<ElementaryPolygon> dec = elementary_decomposition(p);
    NewtonPolygon sum({{Rat(0), Rat(0)}});
    for (const ElementaryPolygon& e : dec) sum = minkowski_sum(sum, polygon_of_elementary(e));
    CHECK(sum == p);
  }
}

TEST_CASE("polygon from branches") {
  std::vector<Branch> two{B("C1", "2x^(3/2)"), B("C2", "x^(7/3)")};
  CHECK(polygon_from_branches(two, PuiseuxSeries()).vertices() ==
        verts({{0, 5}, {3, 3}, {10, 0}}));

  std::vector<Branch> cusp{B("C", "x^(3/2)")};
  CHECK(polygon_from_branches(cusp, PuiseuxSeries()).vertices() == verts({{0, 2}, {3, 0}}));

  std::vector<Branch> smooth{B("C", "x^2")};
  CHECK(polygon_from_branches(smooth, PuiseuxSeries()).vertices() == verts({{0, 1}, {2, 0}}));

  // branch equal to the auxiliary
  CHECK_THROWS_AS(polygon_from_branches(cusp, parse_series("x^(3/2)")), domain_error);

  // a nontrivial smooth auxiliary shifts the coincidence data
  CHECK(polygon_from_branches(cusp, parse_series("x")).vertices() ==
        verts({{0, 2}, {2, 0}}));
  CHECK(polygon_from_branches({B("C", "x + x^(3/2)")}, parse_series("x")).vertices() ==
        verts({{0, 2}, {3, 0}}));
  // the auxiliary must be smooth
  CHECK_THROWS_AS(polygon_from_branches(cusp, parse_series("x^(5/2)")), domain_error);
}

TEST_CASE("tropical intersection bound") {
  // C.A >= trop_C(L.A, L'.A) on random pairs, equality for generic A
  std::mt19937 rng(808);
  std::uniform_int_distribution<long> den(1, 4), num(1, 7), coeff(1, 3);
  std::uniform_int_distribution<int> nb(1, 3), sign(0, 1);
  for (int trial = 0; trial < 250; ++trial) {
    std::vector<Branch> curve;
    int k = nb(rng);
    for (int i = 0; i < k; ++i) {
      PuiseuxSeries s;
      Rat e(Int(num(rng)), Int(den(rng)));
      s.set_term(e, PhasedRational::from_rational(Rat(Int(coeff(rng) * (sign(rng) ? 1 : -1)))));
      curve.push_back({s, "C" + std::to_string(i)});
    }
    PuiseuxSeries a;
    Rat ea(Int(num(rng)), Int(den(rng)));
    a.set_term(ea, PhasedRational::from_rational(Rat(Int(coeff(rng) * (sign(rng) ? 1 : -1)))));
    Branch A{a, "A"};
    bool same = false;
    for (const Branch& c : curve) same = same || coincidence_order(c.series, a).is_infinite();
    if (same) continue;
    Int total = 0;
    for (const Branch& c : curve) total += intersection_number(c, A);
    NewtonPolygon p = polygon_from_branches(curve, PuiseuxSeries());
    Int la = a.index();
    Rat lpa = Rat(la) * ea;  // A . Z(y) for a one-term branch of order ea
    REQUIRE(lpa.is_integer());
    Rat bound = trop_eval(p, {la, lpa.num()});
    REQUIRE(bound.is_integer());
    CHECK_FALSE(Rat(total) < bound);
  }
}
