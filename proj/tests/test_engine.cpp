#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "plcurve/engine.hpp"
#include "plcurve/polygon.hpp"

using namespace plcurve;

namespace {

Branch B(const std::string& label, const std::string& text) {
  return {parse_series(text), label};
}

// The seven branches of the running example.
std::vector<Branch> running_example() {
  return {B("C1", "x^(5/2)"),
          B("C2", "x^2"),
          B("C3", "-x^2"),
          B("C4", "x^(3/5) + x^(3/4)"),
          B("C5", "x^(3/5) + x^(11/15)"),
          B("C6", "2x^(3/5) + x^(6/5)"),
          B("C7", "2x^(3/5) + x^(14/15) + x^(29/30)")};
}

std::vector<Rat> R(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<Rat> out;
  for (auto [n, d] : xs) out.push_back(rat(n, d));
  return out;
}

// All-characteristic random branch: every term bumps the denominator lcm.
PuiseuxSeries random_char_branch(std::mt19937& rng, int max_terms = 3) {
  std::uniform_int_distribution<long> num(1, 7);
  std::uniform_int_distribution<int> terms(1, max_terms), coeff(1, 3), sign(0, 1);
  std::uniform_int_distribution<long> primes_i(0, 2);
  const long primes[3] = {2, 3, 5};
  PuiseuxSeries s;
  Rat prev(0);
  Int running = 1;
  int n = terms(rng);
  for (int i = 0; i < n; ++i) {
    long p = primes[primes_i(rng)];
    Int den = running * p;
    Rat e(0);
    for (int tries = 0; tries < 40; ++tries) {
      e = prev + Rat(Int(num(rng)), den);
      if (e.den() == den) break;
    }
    if (e.den() != den) return s.is_zero() ? parse_series("x^(3/2)") : s;
    s.set_term(e, PhasedRational::from_rational(Rat(Int(coeff(rng) * (sign(rng) ? 1 : -1)))));
    prev = e;
    running = den;
  }
  return s;
}

const Trunk* trunk_with_base(const ResolutionRecord& rec, const std::string& base,
                             const std::vector<Rat>& slopes) {
  for (const Trunk& t : rec.trunks)
    if (t.base_label == base && t.fan_slopes() == slopes) return &t;
  return nullptr;
}

}  // namespace

TEST_CASE("pseudo-resolution of the running example") {
  ResolutionRecord rec = pseudo_resolve(running_example());
  CHECK(rec.levels == 3);
  REQUIRE(rec.trunks.size() == 4);

  CHECK(rec.trunks[0].base_label == "L");
  CHECK(rec.trunks[0].fan_slopes() == R({{3, 5}, {2, 1}, {5, 2}}));
  CHECK(rec.trunks[0].level == 1);

  const Trunk* t2 = trunk_with_base(rec, "E1", R({{2, 3}, {3, 4}}));
  REQUIRE(t2 != nullptr);
  CHECK(t2->level == 2);
  const Trunk* t3 = trunk_with_base(rec, "E1", R({{5, 3}, {3, 1}}));
  REQUIRE(t3 != nullptr);
  CHECK(t3->level == 2);
  const Trunk* t4 = trunk_with_base(rec, "E6", R({{1, 2}}));
  REQUIRE(t4 != nullptr);
  CHECK(t4->level == 3);

  // divisor names follow (level, point, slope) order
  CHECK(rec.trunks[0].marks[0].divisor == "E1");
  CHECK(rec.trunks[0].marks[1].divisor == "E2");
  CHECK(rec.trunks[0].marks[2].divisor == "E3");
  CHECK(t2->marks[0].divisor == "E4");
  CHECK(t2->marks[1].divisor == "E5");
  CHECK(t3->marks[0].divisor == "E6");
  CHECK(t3->marks[1].divisor == "E7");
  CHECK(t4->marks[0].divisor == "E8");

  // auxiliary branches
  REQUIRE(rec.auxiliaries.size() == 4);
  CHECK(rec.auxiliaries[0].is_zero());
  CHECK(rec.auxiliaries[1] == parse_series("x^(3/5)"));
  CHECK(rec.auxiliaries[2] == parse_series("2x^(3/5)"));
  CHECK(rec.auxiliaries[3] == parse_series("2x^(3/5) + x^(14/15)"));

  // terminal attachments
  std::map<std::string, std::string> arrow;
  for (const BranchArrow& a : rec.arrows) arrow[a.branch] = a.divisor;
  CHECK(arrow["C1"] == "E3");
  CHECK(arrow["C2"] == "E2");
  CHECK(arrow["C3"] == "E2");
  CHECK(arrow["C4"] == "E5");
  CHECK(arrow["C5"] == "E4");
  CHECK(arrow["C6"] == "E7");
  CHECK(arrow["C7"] == "E8");

  CHECK(singular_points(rec).size() == 8);
}

TEST_CASE("pseudo-resolution of small curves") {
  ResolutionRecord two = pseudo_resolve({B("P", "2x^(3/2)"), B("Q", "x^(7/3)")});
  CHECK(two.levels == 1);
  REQUIRE(two.trunks.size() == 1);
  CHECK(two.trunks[0].fan_slopes() == R({{3, 2}, {7, 3}}));
  CHECK(two.auxiliaries.size() == 1);
  CHECK(two.auxiliaries[0].is_zero());

  ResolutionRecord smooth = pseudo_resolve({B("P", "x^2")});
  CHECK(smooth.levels == 1);
  REQUIRE(smooth.trunks.size() == 1);
  CHECK(smooth.trunks[0].fan_slopes() == std::vector<Rat>{Rat(2)});
  REQUIRE(smooth.arrows.size() == 1);
  CHECK(smooth.arrows[0].divisor == "E1");

  // a lone germ whose transform has integer exponents stops without a fan
  ResolutionRecord tail = pseudo_resolve({B("P", "2x^(3/5) + x^(6/5)")});
  CHECK(tail.levels == 1);
  REQUIRE(tail.trunks.size() == 1);
  CHECK(tail.trunks[0].fan_slopes() == std::vector<Rat>{rat(3, 5)});
  REQUIRE(tail.arrows.size() == 1);
  CHECK(tail.arrows[0].divisor == "E1");
  CHECK(tail.renormalization_depth("P") == 2);

  // a non-characteristic middle term takes its own denominator-one level
  ResolutionRecord mid = pseudo_resolve({B("P", "x^(3/2) + x^2 + x^(9/4)")});
  CHECK(mid.levels == 3);
  REQUIRE(mid.trunks.size() == 3);
  CHECK(mid.trunks[0].fan_slopes() == std::vector<Rat>{rat(3, 2)});
  CHECK(mid.trunks[1].fan_slopes() == std::vector<Rat>{Rat(1)});
  CHECK(mid.trunks[2].fan_slopes() == std::vector<Rat>{rat(1, 2)});
  CHECK(mid.auxiliaries[1] == parse_series("x^(3/2)"));
  CHECK(mid.auxiliaries[2] == parse_series("x^(3/2) + x^2"));
  CHECK(mid.renormalization_depth("P") == 3);

  CHECK_THROWS_AS(pseudo_resolve({}), domain_error);
  CHECK_THROWS_AS(pseudo_resolve({B("A", "x^(3/2)"), B("B", "-x^(3/2)")}),
                  duplicate_branch_error);
}

TEST_CASE("singular points of the recorded fans") {
  ResolutionRecord rec = pseudo_resolve(running_example());
  std::vector<SingularPoint> sing = singular_points(rec);
  // trunk 1: pairs (0,3/5), (3/5,2), (5/2,inf) with determinants 3, 7, 2;
  // the pair (2, 5/2) is regular.
  std::vector<std::pair<std::string, std::string>> t1;
  std::set<std::string> dets;
  for (const SingularPoint& s : sing) {
    if (s.trunk == 1) {
      t1.emplace_back(s.lo.str(), s.hi.str());
      dets.insert(s.determinant.str());
    }
  }
  REQUIRE(t1.size() == 3);
  CHECK(t1[0] == std::pair<std::string, std::string>{"0", "3/5"});
  CHECK(t1[1] == std::pair<std::string, std::string>{"3/5", "2"});
  CHECK(t1[2] == std::pair<std::string, std::string>{"5/2", "inf"});
  CHECK(dets == std::set<std::string>{"3", "7", "2"});

  ResolutionRecord reg = pseudo_resolve({B("P", "x")});
  CHECK(singular_points(reg).empty());
}

TEST_CASE("fan tree of the running example") {
  ResolutionRecord rec = pseudo_resolve(running_example());
  FanTree t = fan_tree(rec);
  // root labeled L, slope 0
  CHECK(t.node(t.root()).labels == std::vector<std::string>{"L"});
  // E6 sits on the trunk based at E1 with slope 5/3
  const FTNode& e6 = t.node(t.node_of("E6"));
  CHECK(e6.slope == ExtRat(rat(5, 3)));
  CHECK(t.node(e6.parent).labels == std::vector<std::string>{"E1"});
  // C7 hangs off E8
  const FTNode& c7 = t.node(t.node_of("C7"));
  CHECK(t.node(c7.parent).labels == std::vector<std::string>{"E8"});
  // L1 is the infinity end of the first trunk, above E3
  const FTNode& l1 = t.node(t.node_of("L1"));
  CHECK(l1.slope.is_infinite());
  CHECK(t.node(l1.parent).labels == std::vector<std::string>{"E3"});
}

TEST_CASE("Eggers-Wall data from the fan tree") {
  ResolutionRecord rec = pseudo_resolve(running_example());
  FanTree ft = fan_tree(rec);
  EWTree ew = ew_from_fan_tree(ft);
  auto node = [&](const std::string& label) -> const EWNode& {
    return ew.node(ew.leaf_of(label));
  };
  CHECK(node("E6").index == 5);
  CHECK(node("E6").exponent == ExtRat(rat(14, 15)));
  CHECK(node("E8").index == 15);
  CHECK(node("E8").exponent == ExtRat(rat(29, 30)));
  CHECK(node("L").index == 1);
  CHECK(node("L").exponent == ExtRat(Rat(0)));
  CHECK(node("L").contact == ExtRat(Rat(0)));
  CHECK(node("E1").exponent == ExtRat(rat(3, 5)));
  CHECK(node("E1").index == 1);
  CHECK(node("E2").exponent == ExtRat(Rat(2)));
  CHECK(node("E7").exponent == ExtRat(rat(6, 5)));
  // contact at E6: 3/5 + (5/3)/25 = 2/3
  CHECK(node("E6").contact == ExtRat(rat(2, 3)));
  // leaf indices: i(C7) = 30, i(L4) = 15
  CHECK(node("C7").index == 30);
  CHECK(node("L4").index == 15);
}

TEST_CASE("fan tree to EW tree roundtrip") {
  auto check_roundtrip = [](const std::vector<Branch>& branches) {
    ResolutionRecord rec = pseudo_resolve(branches);
    EWTree from_fan = ew_from_fan_tree(fan_tree(rec));
    // completion: input branches plus the generated auxiliaries
    std::vector<Branch> completion = branches;
    std::map<std::string, std::string> aux_names;  // aux label -> merged branch label
    for (std::size_t i = 0; i < rec.auxiliaries.size(); ++i) {
      std::string label = "L" + std::to_string(i + 1);
      if (!rec.trunks[i].merged_branches.empty()) {
        aux_names[label] = rec.trunks[i].merged_branches.front();
        continue;  // the auxiliary IS a branch of the curve
      }
      aux_names[label] = label;
      completion.push_back({rec.auxiliaries[i], label});
    }
    EWTree direct = build_ew_tree(completion);
    // Compare the (exponent, index, contact) path of every labeled leaf.
    std::vector<std::string> labels;
    for (const Branch& b : branches) labels.push_back(b.label);
    for (const auto& [aux, target] : aux_names) labels.push_back(aux);
    for (const std::string& l : labels) {
      std::string direct_label = aux_names.count(l) ? aux_names[l] : l;
      std::vector<int> pf = from_fan.path(from_fan.leaf_of(l));
      std::vector<int> pd = direct.path(direct.leaf_of(direct_label));
      // the fan tree may carry extra marked points (divisors of other
      // branches' rays); compare at the direct tree's marked exponents
      std::map<std::string, std::pair<std::string, std::string>> fan_data;
      for (int id : pf)
        fan_data[from_fan.node(id).exponent.str()] = {
            from_fan.node(id).index.str(), from_fan.node(id).contact.str()};
      for (int id : pd) {
        const EWNode& n = direct.node(id);
        REQUIRE(fan_data.count(n.exponent.str()));
        CHECK(fan_data[n.exponent.str()].first == n.index.str());
        CHECK(fan_data[n.exponent.str()].second == n.contact.str());
      }
    }
  };

  check_roundtrip(running_example());
  check_roundtrip({B("P", "2x^(3/2)"), B("Q", "x^(7/3)")});
  check_roundtrip({B("P", "x^2")});
  check_roundtrip({B("P", "x^2"), B("Q", "x^2 + x^3")});  // auxiliary equals a branch
  check_roundtrip({B("P", "2x^(3/5) + x^(6/5)")});        // integer-exponent tail
  check_roundtrip({B("P", "x^(3/2) + x^2 + x^(9/4)")});   // non-characteristic middle term

  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> count(1, 3);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 50; ++trial) {
    std::vector<Branch> branches;
    int k = count(rng);
    bool ok = true;
    for (int i = 0; i < k; ++i) {
      Branch b{random_char_branch(rng), "B" + std::to_string(i)};
      for (const Branch& prev : branches)
        ok = ok && !coincidence_order(prev.series, b.series).is_infinite();
      branches.push_back(b);
    }
    if (!ok) continue;
    ++done;
    check_roundtrip(branches);
  }
  REQUIRE(done >= 50);
}

TEST_CASE("termination depth and exponent reconstruction") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> count(1, 3);
  int done = 0;
  for (int trial = 0; trial < 300 && done < 100; ++trial) {
    std::vector<Branch> branches;
    int k = count(rng);
    bool ok = true;
    for (int i = 0; i < k; ++i) {
      Branch b{random_char_branch(rng), "B" + std::to_string(i)};
      for (const Branch& prev : branches)
        ok = ok && !coincidence_order(prev.series, b.series).is_infinite();
      branches.push_back(b);
    }
    if (!ok) continue;
    ++done;
    ResolutionRecord rec = pseudo_resolve(branches);
    for (const Branch& b : branches) {
      // depth = 1 + number of characteristic exponents
      int expect = 1 + static_cast<int>(characteristic_exponents(b.series).size());
      CHECK(rec.renormalization_depth(b.label) == expect);
      // the consumed slopes with denominator > 1 are the Newton pairs, and
      // the consumed exponents are the support of the branch
      const std::vector<TraceStep>& trace = rec.traces.at(b.label);
      auto pairs = newton_pairs(b.series);
      std::vector<std::pair<Int, Int>> consumed;
      std::vector<Rat> consumed_exponents;
      for (const TraceStep& s : trace) {
        if (s.index_dropped) consumed.emplace_back(s.slope.den(), s.slope.num());
        consumed_exponents.push_back(s.original_exponent);
      }
      CHECK(consumed == pairs);
      std::vector<Rat> support;
      for (const auto& [e, c] : b.series.terms()) support.push_back(e);
      // every consumed exponent is a support exponent, in order
      REQUIRE(consumed_exponents.size() <= support.size());
      for (std::size_t i = 0; i < consumed_exponents.size(); ++i)
        CHECK(consumed_exponents[i] == support[i]);
    }
  }
  REQUIRE(done >= 100);
}

TEST_CASE("conjugate normalization with a non-real twist") {
  // The two branches share the level-1 point (1^4 = (-1)^4) but the orbit
  // twist is gamma = i, so the renormalized tails pick up non-real phased
  // coefficients; the level-2 orbit test then separates the points.
  std::vector<Branch> pair{B("A", "x^(5/4) + x^(11/8)"), B("B", "-x^(5/4) + x^(11/8)")};
  CHECK(coincidence_order(pair[0].series, pair[1].series) == ExtRat(rat(11, 8)));
  ResolutionRecord rec = pseudo_resolve(pair);
  REQUIRE(rec.trunks.size() == 2);
  CHECK(rec.trunks[0].fan_slopes() == std::vector<Rat>{rat(5, 4)});
  CHECK(rec.trunks[1].fan_slopes() == std::vector<Rat>{rat(1, 2)});
  // both arrows terminate on the level-2 divisor, at distinct points
  REQUIRE(rec.arrows.size() == 2);
  CHECK(rec.arrows[0].divisor == "E2");
  CHECK(rec.arrows[1].divisor == "E2");
  // roundtrip: the ramification of A and B sits at exponent 11/8
  EWTree ew = ew_from_fan_tree(fan_tree(rec));
  const EWNode& e2 = ew.node(ew.leaf_of("E2"));
  CHECK(e2.exponent == ExtRat(rat(11, 8)));
  CHECK(e2.index == 4);
  CHECK(ew.node(ew.leaf_of("A")).index == 8);
}

TEST_CASE("fan at each cross matches the branch-system polygon") {
  ResolutionRecord rec = pseudo_resolve(running_example());
  for (const Trunk& t : rec.trunks) {
    std::vector<Branch> locals;
    for (const auto& [label, series] : t.local_series)
      if (!series.is_zero()) locals.push_back({series, label});
    if (locals.empty()) continue;
    NewtonPolygon p = polygon_from_branches(locals, PuiseuxSeries());
    CHECK(newton_fan(p) == t.fan_slopes());
  }
}
