#include "plcurve/phased.hpp"

namespace plcurve {

namespace {

Rat phase_mod1(const Rat& p) {
  return p - Rat(p.floor());
}

}  // namespace

PhasedRational PhasedRational::from_rational(const Rat& r) {
  if (r.is_zero()) return zero();
  PhasedRational x;
  x.zero_ = false;
  x.mag_ = r.sign() < 0 ? -r : r;
  x.phase_ = r.sign() < 0 ? rat(1, 2) : Rat(0);
  return x;
}

PhasedRational PhasedRational::make(const Rat& magnitude, const Rat& phase) {
  if (magnitude.is_zero()) return zero();
  if (magnitude.sign() < 0) throw domain_error("phased rational with negative magnitude");
  PhasedRational x;
  x.zero_ = false;
  x.mag_ = magnitude;
  x.phase_ = phase_mod1(phase);
  return x;
}

PhasedRational PhasedRational::root_of_unity(const Int& j, const Int& m) {
  if (m <= 0) throw domain_error("root_of_unity with non-positive order");
  return make(Rat(1), Rat(j, m));
}

bool PhasedRational::is_real() const {
  return zero_ || phase_.is_zero() || phase_ == rat(1, 2);
}

Rat PhasedRational::to_rational() const {
  if (zero_) return Rat(0);
  if (phase_.is_zero()) return mag_;
  if (phase_ == rat(1, 2)) return -mag_;
  throw unsupported_coefficient_error("coefficient with non-real phase " + phase_.str());
}

PhasedRational PhasedRational::operator*(const PhasedRational& o) const {
  if (zero_ || o.zero_) return zero();
  return make(mag_ * o.mag_, phase_ + o.phase_);
}

PhasedRational PhasedRational::operator/(const PhasedRational& o) const {
  if (o.zero_) throw domain_error("division by zero coefficient");
  if (zero_) return zero();
  return make(mag_ / o.mag_, phase_ - o.phase_);
}

PhasedRational PhasedRational::pow(const Int& k) const {
  if (zero_) {
    if (k <= 0) throw domain_error("zero coefficient to a non-positive power");
    return zero();
  }
  Rat m(1);
  Int e = abs(k);
  Rat base = mag_;
  while (e > 0) {
    if ((e & 1) != 0) m = m * base;
    base = base * base;
    e >>= 1;
  }
  if (k < 0) m = Rat(1) / m;
  return make(m, phase_ * Rat(k));
}

bool PhasedRational::operator<(const PhasedRational& o) const {
  if (zero_ != o.zero_) return zero_;
  if (zero_) return false;
  if (phase_ != o.phase_) return phase_ < o.phase_;
  return mag_ < o.mag_;
}

std::string PhasedRational::str() const {
  if (zero_) return "0";
  if (is_real()) return to_rational().str();
  return mag_.str() + "*e(" + phase_.str() + ")";
}

}  // namespace plcurve
