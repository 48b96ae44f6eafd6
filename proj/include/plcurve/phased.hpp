#ifndef PLCURVE_PHASED_HPP
#define PLCURVE_PHASED_HPP

#include <string>

#include "plcurve/rat.hpp"

namespace plcurve {

// Exact coefficient magnitude * e^{2 pi i phase} with rational magnitude > 0
// and rational phase in [0,1), plus a distinguished zero. Closed under
// product, power and inverse. There is deliberately no addition: the pipeline
// only ever multiplies coefficients and compares them.
class PhasedRational {
 public:
  PhasedRational() : zero_(true), mag_(0), phase_(0) {}

  static PhasedRational zero() { return PhasedRational(); }
  static PhasedRational one() { return from_rational(Rat(1)); }

  // Negative rationals carry phase 1/2.
  static PhasedRational from_rational(const Rat& r);
  static PhasedRational make(const Rat& magnitude, const Rat& phase);

  // e^{2 pi i j/m}.
  static PhasedRational root_of_unity(const Int& j, const Int& m);

  bool is_zero() const { return zero_; }
  const Rat& magnitude() const { return mag_; }
  const Rat& phase() const { return phase_; }

  bool is_real() const;
  // Requires is_real(); signed rational value.
  Rat to_rational() const;

  PhasedRational operator*(const PhasedRational& o) const;
  PhasedRational operator/(const PhasedRational& o) const;
  PhasedRational pow(const Int& k) const;

  bool operator==(const PhasedRational& o) const {
    return zero_ == o.zero_ && (zero_ || (mag_ == o.mag_ && phase_ == o.phase_));
  }

  // Total order used only for canonical representatives: zero first, then by
  // (phase, magnitude).
  bool operator<(const PhasedRational& o) const;

  // "0", "2/3", "-1", or "2/3*e(1/5)" for non-real phases.
  std::string str() const;

 private:
  bool zero_;
  Rat mag_;
  Rat phase_;  // reduced into [0,1)
};

}  // namespace plcurve

#endif
