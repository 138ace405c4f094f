#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace l2b {

// Closed real interval [lo, hi] with outward-rounded endpoint arithmetic.
// Every operation returns an interval guaranteed to contain the exact image
// of its operands; this is the sole mechanism behind every "certified"
// number in the library.  Endpoints live at working_precision() bits.
class Interval {
 public:
  Interval();                       // [0, 0]
  Interval(long v);                 // exact
  explicit Interval(const mpz_class& v);
  explicit Interval(const mpq_class& v);   // outward-rounded enclosure
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  static Interval pi();
  static Interval from_endpoints(const Interval& lo, const Interval& hi);
  // Parses a decimal literal such as "0.865" exactly (via mpq).
  static Interval from_decimal(const std::string& s);

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  Interval operator/(const Interval& o) const;  // requires 0 not in o
  Interval operator-() const;
  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }
  Interval& operator/=(const Interval& o) { return *this = *this / o; }

  friend Interval exp(const Interval& x);
  friend Interval log(const Interval& x);    // requires x > 0
  friend Interval sqrt(const Interval& x);   // requires x >= 0
  friend Interval atan(const Interval& x);
  friend Interval abs(const Interval& x);
  friend Interval pow_ui(const Interval& x, unsigned long n);
  // x^e for x > 0, arbitrary real exponent enclosure.
  friend Interval pow(const Interval& x, const Interval& e);
  friend Interval min(const Interval& a, const Interval& b);
  friend Interval max(const Interval& a, const Interval& b);
  friend Interval hull(const Interval& a, const Interval& b);
  // Enclosures of cos/sin over the (narrow) interval x; width is added to
  // the rounding slop via the Lipschitz bound, so x need not avoid extrema.
  friend Interval cos_enclosure(const Interval& x);
  friend Interval sin_enclosure(const Interval& x);

  bool definitely_le(const Interval& o) const;   // hi <= o.lo
  bool definitely_lt(const Interval& o) const;
  bool definitely_positive() const;
  bool definitely_negative() const;
  bool contains_zero() const;
  bool contains(const mpq_class& v) const;

  double lo_d() const;   // rounded down
  double hi_d() const;   // rounded up
  double mid_d() const;
  // Upper bound of the half-width.
  double width_d() const;
  std::string str(int digits = 20) const;

  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }
  mpfr_t& lo_mut() { return lo_; }
  mpfr_t& hi_mut() { return hi_; }

 private:
  mpfr_t lo_, hi_;
};

Interval exp(const Interval& x);
Interval log(const Interval& x);
Interval sqrt(const Interval& x);
Interval atan(const Interval& x);
Interval abs(const Interval& x);
Interval pow_ui(const Interval& x, unsigned long n);
Interval pow(const Interval& x, const Interval& e);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);
Interval cos_enclosure(const Interval& x);
Interval sin_enclosure(const Interval& x);

// Exact factorial as interval enclosure.
Interval factorial(unsigned long n);

inline bool definitely_le(const Interval& a, const Interval& b) {
  return a.definitely_le(b);
}
inline bool definitely_lt(const Interval& a, const Interval& b) {
  return a.definitely_lt(b);
}

}  // namespace l2b
