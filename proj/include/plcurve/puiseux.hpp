#ifndef PLCURVE_PUISEUX_HPP
#define PLCURVE_PUISEUX_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plcurve/phased.hpp"
#include "plcurve/rat.hpp"

namespace plcurve {

// Finite Newton-Puiseux series: a map from non-negative rational exponents to
// nonzero phased-rational coefficients. The zero series is the empty map.
class PuiseuxSeries {
 public:
  PuiseuxSeries() = default;

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Rat, PhasedRational>& terms() const { return terms_; }

  // Smallest exponent; infinity for the zero series.
  ExtRat order() const;
  PhasedRational leading_coefficient() const;
  PhasedRational coefficient(const Rat& e) const;

  // lcm of the exponent denominators (1 for the zero series).
  Int index() const;

  void set_term(const Rat& exponent, const PhasedRational& coeff);
  PuiseuxSeries truncated_below(const Rat& bound) const;

  // Galois twist by e^{2 pi i j/n}: the coefficient of x^{k/n} is multiplied
  // by e^{2 pi i jk/n}. n must be a multiple of the index.
  PuiseuxSeries conjugate(const Int& j, const Int& n) const;

  bool operator==(const PuiseuxSeries& o) const { return terms_ == o.terms_; }

  std::string str() const;

 private:
  std::map<Rat, PhasedRational> terms_;
};

struct Branch {
  PuiseuxSeries series;
  std::string label;
};

PuiseuxSeries parse_series(const std::string& text);

ExtRat order(const PuiseuxSeries& s);

// Exponents at which the running lcm of exponent denominators jumps.
std::vector<Rat> characteristic_exponents(const PuiseuxSeries& s);

// Maximal order of coincidence over the Galois conjugates of b: the largest
// exponent up to which some conjugate of b agrees with a. Infinite iff a and
// b are conjugate, i.e. denote the same branch.
ExtRat coincidence_order(const PuiseuxSeries& a, const PuiseuxSeries& b);

// The coprime pairs (c_j, d_j) encoding the characteristic exponents.
std::vector<std::pair<Int, Int>> newton_pairs(const PuiseuxSeries& s);

// Series of the strict transform after the Newton map of the given slope,
// with the conjugate of s normalized to leading coefficient alpha.
// Requires order(s) = slope and alpha^c = lead^c for slope d/c.
PuiseuxSeries renormalize(const PuiseuxSeries& s, const Rat& slope,
                          const PhasedRational& alpha);

// (order of vanishing along E_w, intersection of the strict transform with
// E_w) for a branch of order d/c = slope.
std::pair<Int, Int> exceptional_data(const PuiseuxSeries& s, const Rat& slope);

// Lexicographically smallest Galois conjugate; the canonical representative
// naming the branch.
PuiseuxSeries canonical_representative(const PuiseuxSeries& s);

bool series_less(const PuiseuxSeries& a, const PuiseuxSeries& b);

}  // namespace plcurve

#endif
