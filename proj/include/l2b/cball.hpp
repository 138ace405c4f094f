#pragma once

#include <gmpxx.h>

#include <utility>

#include "l2b/interval.hpp"

namespace l2b {

// Free helper so member code below can reach the Interval power through ADL
// (the member pow_ui would otherwise hide it).
inline Interval square_interval(const Interval& x) { return pow_ui(x, 2); }

// Rectangular complex enclosure (a pair of real intervals).  Containment is
// preserved by all operations, so any quantity extracted through abs_upper /
// abs_lower is certified.
struct CBall {
  Interval re, im;

  CBall() = default;
  CBall(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
  explicit CBall(const mpq_class& r) : re(r), im() {}
  CBall(const mpq_class& r, const mpq_class& i) : re(r), im(i) {}

  CBall operator+(const CBall& o) const { return {re + o.re, im + o.im}; }
  CBall operator-(const CBall& o) const { return {re - o.re, im - o.im}; }
  CBall operator-() const { return {-re, -im}; }
  CBall operator*(const CBall& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CBall operator*(const Interval& s) const { return {re * s, im * s}; }
  CBall conj() const { return {re, -im}; }

  // 1/z; requires |z| bounded away from 0.
  CBall inverse() const;
  CBall operator/(const CBall& o) const { return *this * o.inverse(); }

  CBall pow_ui(unsigned long n) const;

  // Squared via the even-power rule, so an axis straddling 0 still yields a
  // nonnegative lower bound.
  Interval abs_sq() const { return square_interval(re) + square_interval(im); }
  Interval abs_enclosure() const { return sqrt(abs_sq()); }
  // Largest possible |z| over the box (hi endpoint of the enclosure).
  Interval abs_upper() const;
  // Smallest possible |z| over the box (0 if the box contains 0).
  Interval abs_lower() const;

  bool contains_zero() const {
    return re.contains_zero() && im.contains_zero();
  }
};

// exp(2*pi*i*s*(x + i*y)) = e^{-2*pi*s*y} (cos(2*pi*s*x) + i sin(2*pi*s*x))
// with s an exact rational scale (1 for q-series, 1/2 for half-period series).
CBall unit_q_power(const mpq_class& x, const mpq_class& y, const mpq_class& s);

}  // namespace l2b
