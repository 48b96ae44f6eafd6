#include "plcurve/puiseux.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace plcurve {

ExtRat PuiseuxSeries::order() const {
  if (terms_.empty()) return ExtRat::infinity();
  return terms_.begin()->first;
}

PhasedRational PuiseuxSeries::leading_coefficient() const {
  if (terms_.empty()) return PhasedRational::zero();
  return terms_.begin()->second;
}

PhasedRational PuiseuxSeries::coefficient(const Rat& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? PhasedRational::zero() : it->second;
}

Int PuiseuxSeries::index() const {
  Int n = 1;
  for (const auto& [e, c] : terms_) n = lcm(n, e.den());
  return n;
}

void PuiseuxSeries::set_term(const Rat& exponent, const PhasedRational& coeff) {
  if (exponent.sign() < 0) throw domain_error("negative exponent in Puiseux series");
  if (coeff.is_zero())
    terms_.erase(exponent);
  else
    terms_[exponent] = coeff;
}

PuiseuxSeries PuiseuxSeries::truncated_below(const Rat& bound) const {
  PuiseuxSeries out;
  for (const auto& [e, c] : terms_) {
    if (e < bound) out.terms_[e] = c;
  }
  return out;
}

PuiseuxSeries PuiseuxSeries::conjugate(const Int& j, const Int& n) const {
  PuiseuxSeries out;
  for (const auto& [e, c] : terms_) {
    Rat kn = e * Rat(n);
    if (!kn.is_integer()) throw domain_error("conjugate: n is not a multiple of the index");
    out.terms_[e] = c * PhasedRational::root_of_unity(j * kn.num(), n);
  }
  return out;
}

std::string PuiseuxSeries::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string coeff = c.str();
    if (!first) {
      if (!coeff.empty() && coeff[0] == '-') {
        s += " - ";
        coeff = coeff.substr(1);
      } else {
        s += " + ";
      }
    }
    first = false;
    if (e.is_zero()) {
      s += coeff;
      continue;
    }
    if (coeff == "1")
      ;  // bare x
    else if (coeff == "-1" && s.empty())
      s += "-";
    else
      s += coeff;
    s += "x";
    if (!(e == Rat(1))) {
      if (e.is_integer())
        s += "^" + e.str();
      else
        s += "^(" + e.str() + ")";
    }
  }
  return s;
}

namespace {

struct SeriesLexer {
  const std::string& text;
  std::size_t i = 0;

  explicit SeriesLexer(const std::string& t) : text(t) {}

  void skip_ws() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < text.size() && text[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool peek(char c) {
    skip_ws();
    return i < text.size() && text[i] == c;
  }
  bool done() {
    skip_ws();
    return i >= text.size();
  }
  Int integer() {
    skip_ws();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t d = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == d) throw parse_error("expected integer at position " + std::to_string(start) +
                                  " in '" + text + "'");
    return Int(text.substr(start, i - start));
  }
};

}  // namespace

PuiseuxSeries parse_series(const std::string& text) {
  SeriesLexer lex(text);
  lex.skip_ws();
  if (lex.done()) throw parse_error("empty series text");
  // "0" denotes the zero series (used for auxiliary branches like Z(y)).
  {
    std::size_t save = lex.i;
    if (lex.eat('0') && lex.done()) return PuiseuxSeries();
    lex.i = save;
  }
  PuiseuxSeries out;
  std::set<Rat> seen;
  bool negate = lex.eat('-');
  if (!negate) lex.eat('+');
  for (;;) {
    Rat coeff(1);
    bool have_coeff = false;
    if (!lex.peek('x')) {
      Int num = lex.integer();
      Int den = 1;
      if (lex.eat('/')) den = lex.integer();
      if (den <= 0) throw parse_error("non-positive denominator in coefficient");
      coeff = Rat(num, den);
      have_coeff = true;
    }
    Rat exponent(0);
    if (lex.eat('x')) {
      exponent = Rat(1);
      if (lex.eat('^')) {
        if (lex.eat('(')) {
          Int num = lex.integer();
          if (!lex.eat('/')) throw parse_error("expected '/' in exponent");
          Int den = lex.integer();
          if (!lex.eat(')')) throw parse_error("expected ')' in exponent");
          if (den <= 0) throw parse_error("non-positive exponent denominator");
          exponent = Rat(num, den);
        } else {
          exponent = Rat(lex.integer());
        }
      }
    } else if (!have_coeff) {
      throw parse_error("expected term in '" + text + "'");
    }
    if (exponent.sign() < 0) throw parse_error("negative exponent in series");
    if (negate) coeff = -coeff;
    if (!seen.insert(exponent).second)
      throw parse_error("duplicate exponent " + exponent.str() + " in series");
    if (!coeff.is_zero()) out.set_term(exponent, PhasedRational::from_rational(coeff));
    if (lex.done()) break;
    if (lex.eat('+'))
      negate = false;
    else if (lex.eat('-'))
      negate = true;
    else
      throw parse_error("unexpected character at position " + std::to_string(lex.i) +
                        " in '" + text + "'");
  }
  return out;
}

ExtRat order(const PuiseuxSeries& s) { return s.order(); }

std::vector<Rat> characteristic_exponents(const PuiseuxSeries& s) {
  std::vector<Rat> out;
  Int running = 1;
  for (const auto& [e, c] : s.terms()) {
    Int next = lcm(running, e.den());
    if (next != running) out.push_back(e);
    running = next;
  }
  return out;
}

namespace {

// j k = t (mod m) as a coset {j = r (mod q)}, q | m. Returns false if empty.
bool solve_congruence(const Int& k, const Int& t, const Int& m, Int& r, Int& q) {
  Int kk = ((k % m) + m) % m;
  Int tt = ((t % m) + m) % m;
  Int g = gcd(kk == 0 ? m : kk, m);
  if (tt % g != 0) return false;
  Int m2 = m / g, k2 = kk / g, t2 = tt / g;
  // inverse of k2 mod m2 via extended euclid
  Int a = k2 % m2, b = m2, x0 = 1, x1 = 0;
  if (m2 == 1) {
    r = 0;
    q = 1;
    return true;
  }
  while (b != 0) {
    Int quot = a / b;
    Int rem = a - quot * b;
    a = b;
    b = rem;
    Int xn = x0 - quot * x1;
    x0 = x1;
    x1 = xn;
  }
  Int inv = ((x0 % m2) + m2) % m2;
  r = (t2 * inv) % m2;
  q = m2;
  return true;
}

// Intersect cosets j = r1 (mod q1) and j = r2 (mod q2).
bool intersect_cosets(const Int& r1, const Int& q1, const Int& r2, const Int& q2,
                      Int& r, Int& q) {
  Int g = gcd(q1, q2);
  if ((r1 - r2) % g != 0) return false;
  q = q1 / g * q2;
  // r = r1 + q1 * u where q1 u = r2 - r1 (mod q2)
  Int u, qq;
  if (!solve_congruence(q1, r2 - r1, q2, u, qq)) return false;
  r = ((r1 + q1 * u) % q) ;
  if (r < 0) r += q;
  return true;
}

}  // namespace

ExtRat coincidence_order(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  const Int m = b.index();
  // Current solution set of gamma = e(j/m): j = sol_r (mod sol_q).
  Int sol_r = 0, sol_q = 1;
  std::set<Rat> exponents;
  for (const auto& [e, c] : a.terms()) exponents.insert(e);
  for (const auto& [e, c] : b.terms()) exponents.insert(e);
  for (const Rat& e : exponents) {
    PhasedRational ca = a.coefficient(e);
    PhasedRational cb = b.coefficient(e);
    if (ca.is_zero() && cb.is_zero()) continue;
    if (cb.is_zero()) return e;  // no conjugate of b has a term here
    Rat km = e * Rat(m);
    if (!km.is_integer()) return e;  // cannot happen for e in supp(b)
    if (ca.is_zero()) return e;
    PhasedRational quot = ca / cb;
    if (!(quot.magnitude() == Rat(1))) return e;
    Rat tm = quot.phase() * Rat(m);
    if (!tm.is_integer()) return e;
    Int r, q;
    if (!solve_congruence(km.num(), tm.num(), m, r, q)) return e;
    Int nr, nq;
    if (!intersect_cosets(sol_r, sol_q, r, q, nr, nq)) return e;
    sol_r = nr;
    sol_q = nq;
  }
  return ExtRat::infinity();
}

std::vector<std::pair<Int, Int>> newton_pairs(const PuiseuxSeries& s) {
  std::vector<Rat> chars = characteristic_exponents(s);
  std::vector<std::pair<Int, Int>> pairs;
  Int running = 1;
  Int m_prev = 0;
  for (const Rat& e : chars) {
    Int next = lcm(running, e.den());
    Int n_j = next / running;
    Rat mj = e * Rat(next);
    if (!mj.is_integer()) throw domain_error("newton_pairs: internal denominator error");
    Int m_j = mj.num();
    Int d_j = m_j - n_j * m_prev;
    pairs.emplace_back(n_j, d_j);
    running = next;
    m_prev = m_j;
  }
  return pairs;
}

PuiseuxSeries renormalize(const PuiseuxSeries& s, const Rat& slope,
                          const PhasedRational& alpha) {
  if (s.is_zero()) throw domain_error("renormalize of the zero series");
  if (!(s.order() == ExtRat(slope)))
    throw domain_error("renormalize: slope " + slope.str() + " is not the order of " + s.str());
  const Int c = slope.den();
  const Int d = slope.num();
  const Int n = s.index();
  const Int p = n / c;
  if (c * p != n) throw domain_error("renormalize: slope denominator does not divide the index");
  const PhasedRational beta = s.leading_coefficient();
  if (!(alpha.pow(c) == beta.pow(c)))
    throw domain_error("renormalize: leading coefficient is not in the orbit of " + alpha.str());

  // Find gamma = e(j/n) with gamma^m * beta = alpha, m = slope * n.
  const Int m = d * p;
  Int j = 0;
  PhasedRational delta = alpha / beta;
  if (!delta.is_zero() && !(delta == PhasedRational::one())) {
    Rat tn = delta.phase() * Rat(n);
    if (!tn.is_integer())
      throw domain_error("renormalize: orbit twist is not an n-th root of unity");
    Int q;
    if (!solve_congruence(m, tn.num(), n, j, q))
      throw domain_error("renormalize: no conjugate matches the leading coefficient");
  }

  PuiseuxSeries out;
  for (const auto& [e, coeff] : s.terms()) {
    if (!(e > slope)) continue;
    Rat kr = e * Rat(n);
    Int k = kr.num();
    PhasedRational twisted = coeff * PhasedRational::root_of_unity(j * k, n);
    out.set_term(Rat(k - m, p), twisted);
  }
  return out;
}

std::pair<Int, Int> exceptional_data(const PuiseuxSeries& s, const Rat& slope) {
  if (!(s.order() == ExtRat(slope)))
    throw domain_error("exceptional_data: slope mismatch");
  Int n = s.index();
  Int c = slope.den();
  if (n % c != 0) throw domain_error("exceptional_data: denominator does not divide index");
  return {slope.num() * n, n / c};
}

PuiseuxSeries canonical_representative(const PuiseuxSeries& s) {
  if (s.is_zero()) return s;
  Int n = s.index();
  PuiseuxSeries best = s;
  for (Int j = 1; j < n; ++j) {
    PuiseuxSeries cand = s.conjugate(j, n);
    if (series_less(cand, best)) best = cand;
  }
  return best;
}

bool series_less(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (!(ia->second == ib->second)) return ia->second < ib->second;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

}  // namespace plcurve
