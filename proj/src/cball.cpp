#include "l2b/cball.hpp"

#include <stdexcept>

namespace l2b {

CBall CBall::inverse() const {
  Interval d = abs_sq();
  if (!d.definitely_positive())
    throw std::domain_error("CBall::inverse: enclosure touches 0");
  return {re / d, -im / d};
}

CBall CBall::pow_ui(unsigned long n) const {
  CBall acc(mpq_class(1));
  CBall base = *this;
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

Interval CBall::abs_upper() const {
  Interval a = abs_enclosure();
  Interval r;
  mpfr_set(r.lo_mut(), a.hi(), MPFR_RNDD);
  mpfr_set(r.hi_mut(), a.hi(), MPFR_RNDU);
  return r;
}

Interval CBall::abs_lower() const {
  if (contains_zero()) return Interval(0L);
  Interval a = abs_enclosure();
  Interval r;
  mpfr_set(r.lo_mut(), a.lo(), MPFR_RNDD);
  mpfr_set(r.hi_mut(), a.lo(), MPFR_RNDU);
  return r;
}

CBall unit_q_power(const mpq_class& x, const mpq_class& y, const mpq_class& s) {
  Interval two_pi = Interval(2L) * Interval::pi();
  Interval theta = two_pi * Interval(mpq_class(s * x));
  Interval r = exp(-(two_pi * Interval(mpq_class(s * y))));
  return {r * cos_enclosure(theta), r * sin_enclosure(theta)};
}

}  // namespace l2b
