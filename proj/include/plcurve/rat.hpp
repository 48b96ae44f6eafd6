#ifndef PLCURVE_RAT_HPP
#define PLCURVE_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

#include "plcurve/errors.hpp"

namespace plcurve {

using Int = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact rational number in reduced form, denominator >= 1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}                       // NOLINT: implicit on purpose
  Rat(const Int& n) : v_(n) {}                // NOLINT
  Rat(const Int& num, const Int& den);
  explicit Rat(const BigRat& v) : v_(v) {}

  Int num() const { return numerator(v_); }
  Int den() const { return denominator(v_); }
  const BigRat& value() const { return v_; }

  bool is_integer() const { return den() == 1; }
  bool is_zero() const { return v_ == 0; }
  int sign() const { return v_ == 0 ? 0 : (v_ < 0 ? -1 : 1); }

  Rat operator-() const { return Rat(BigRat(-v_)); }
  Rat operator+(const Rat& o) const { return Rat(BigRat(v_ + o.v_)); }
  Rat operator-(const Rat& o) const { return Rat(BigRat(v_ - o.v_)); }
  Rat operator*(const Rat& o) const { return Rat(BigRat(v_ * o.v_)); }
  Rat operator/(const Rat& o) const;
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const Rat& o) const {
    if (v_ < o.v_) return std::strong_ordering::less;
    if (v_ > o.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Int floor() const;
  Rat frac() const { return *this - Rat(floor()); }

  // "p/q", or just "p" for integers.
  std::string str() const;
  static Rat parse(const std::string& text);

 private:
  BigRat v_;
};

Rat rat(long n, long d);

// Rational extended with a single tagged infinity. Infinity is not a Rat;
// callers must check before extracting the finite value.
class ExtRat {
 public:
  ExtRat() : finite_(true), v_() {}
  ExtRat(const Rat& v) : finite_(true), v_(v) {}  // NOLINT
  static ExtRat infinity() { ExtRat e; e.finite_ = false; return e; }

  bool is_finite() const { return finite_; }
  bool is_infinite() const { return !finite_; }
  const Rat& rat() const;

  bool operator==(const ExtRat& o) const {
    return finite_ == o.finite_ && (!finite_ || v_ == o.v_);
  }
  bool operator<(const ExtRat& o) const {
    if (!finite_) return false;
    if (!o.finite_) return true;
    return v_ < o.v_;
  }

  std::string str() const { return finite_ ? v_.str() : "inf"; }

 private:
  bool finite_;
  Rat v_;
};

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

}  // namespace plcurve

#endif
