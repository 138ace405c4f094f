#include "l2b/interval.hpp"

#include <stdexcept>

#include "l2b/prec.hpp"

namespace l2b {

namespace {
inline mpfr_prec_t prec() { return (mpfr_prec_t)working_precision(); }
}

Interval::Interval() {
  mpfr_init2(lo_, prec());
  mpfr_init2(hi_, prec());
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long v) {
  mpfr_init2(lo_, prec());
  mpfr_init2(hi_, prec());
  mpfr_set_si(lo_, v, MPFR_RNDD);
  mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval::Interval(const mpz_class& v) {
  mpfr_init2(lo_, prec());
  mpfr_init2(hi_, prec());
  mpfr_set_z(lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_, v.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const mpq_class& v) {
  mpfr_init2(lo_, prec());
  mpfr_init2(hi_, prec());
  mpfr_set_q(lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, v.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& o) {
  mpfr_init2(lo_, mpfr_get_prec(o.lo_));
  mpfr_init2(hi_, mpfr_get_prec(o.hi_));
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept {
  mpfr_init2(lo_, mpfr_get_prec(o.lo_));
  mpfr_init2(hi_, mpfr_get_prec(o.hi_));
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
    mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::pi() {
  Interval r;
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::from_endpoints(const Interval& lo, const Interval& hi) {
  Interval r;
  mpfr_set(r.lo_, lo.lo_, MPFR_RNDD);
  mpfr_set(r.hi_, hi.hi_, MPFR_RNDU);
  if (mpfr_greater_p(r.lo_, r.hi_))
    throw std::invalid_argument("from_endpoints: lo > hi");
  return r;
}

Interval Interval::from_decimal(const std::string& s) {
  // Exact decimal -> mpq.  Accepts [-]digits[.digits].
  std::string t = s;
  bool neg = false;
  if (!t.empty() && t[0] == '-') { neg = true; t = t.substr(1); }
  auto dot = t.find('.');
  std::string digits =
      dot == std::string::npos ? t : t.substr(0, dot) + t.substr(dot + 1);
  if (digits.empty())
    throw std::invalid_argument("from_decimal: no digits in " + s);
  for (char c : digits)
    if (c < '0' || c > '9')
      throw std::invalid_argument("from_decimal: bad character in " + s);
  mpz_class num(digits, 10);  // explicit base: leading zeros are not octal
  mpz_class den = 1;
  if (dot != std::string::npos)
    for (size_t i = 0; i < t.size() - dot - 1; ++i) den *= 10;
  mpq_class q(num, den);
  q.canonicalize();
  if (neg) q = -q;
  return Interval(q);
}

Interval Interval::operator+(const Interval& o) const {
  Interval r;
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& o) const {
  Interval r;
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-() const {
  Interval r;
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& o) const {
  // Directed min/max over the four endpoint products.
  Interval r;
  mpfr_t t;
  mpfr_init2(t, prec());
  mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

  mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval Interval::operator/(const Interval& o) const {
  if (o.contains_zero())
    throw std::domain_error("interval division by interval containing 0");
  Interval r;
  mpfr_t t;
  mpfr_init2(t, prec());
  mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

  mpfr_div(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, hi_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval exp(const Interval& x) {
  Interval r;
  mpfr_exp(r.lo_mut(), x.lo(), MPFR_RNDD);
  mpfr_exp(r.hi_mut(), x.hi(), MPFR_RNDU);
  return r;
}

Interval log(const Interval& x) {
  if (!x.definitely_positive())
    throw std::domain_error("log of interval not strictly positive");
  Interval r;
  mpfr_log(r.lo_mut(), x.lo(), MPFR_RNDD);
  mpfr_log(r.hi_mut(), x.hi(), MPFR_RNDU);
  return r;
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.lo()) < 0)
    throw std::domain_error("sqrt of interval with negative part");
  Interval r;
  mpfr_sqrt(r.lo_mut(), x.lo(), MPFR_RNDD);
  mpfr_sqrt(r.hi_mut(), x.hi(), MPFR_RNDU);
  return r;
}

Interval atan(const Interval& x) {
  Interval r;
  mpfr_atan(r.lo_mut(), x.lo(), MPFR_RNDD);
  mpfr_atan(r.hi_mut(), x.hi(), MPFR_RNDU);
  return r;
}

Interval abs(const Interval& x) {
  Interval r;
  if (mpfr_sgn(x.lo()) >= 0) return x;
  if (mpfr_sgn(x.hi()) <= 0) return -x;
  mpfr_set_zero(r.lo_mut(), 1);
  mpfr_neg(r.hi_mut(), x.lo(), MPFR_RNDU);
  mpfr_max(r.hi_mut(), r.hi_mut(), x.hi(), MPFR_RNDU);
  return r;
}

Interval pow_ui(const Interval& x, unsigned long n) {
  Interval r(1L);
  if (n == 0) return r;
  if (mpfr_sgn(x.lo()) >= 0) {
    mpfr_pow_ui(r.lo_mut(), x.lo(), n, MPFR_RNDD);
    mpfr_pow_ui(r.hi_mut(), x.hi(), n, MPFR_RNDU);
    return r;
  }
  if (mpfr_sgn(x.hi()) <= 0) {
    if (n % 2 == 0) {
      mpfr_pow_ui(r.lo_mut(), x.hi(), n, MPFR_RNDD);
      mpfr_pow_ui(r.hi_mut(), x.lo(), n, MPFR_RNDU);
    } else {
      mpfr_pow_ui(r.lo_mut(), x.lo(), n, MPFR_RNDD);
      mpfr_pow_ui(r.hi_mut(), x.hi(), n, MPFR_RNDU);
    }
    return r;
  }
  // straddles zero
  if (n % 2 == 0) {
    Interval a = abs(x);
    mpfr_set_zero(r.lo_mut(), 1);
    mpfr_pow_ui(r.hi_mut(), a.hi(), n, MPFR_RNDU);
  } else {
    mpfr_pow_ui(r.lo_mut(), x.lo(), n, MPFR_RNDD);
    mpfr_pow_ui(r.hi_mut(), x.hi(), n, MPFR_RNDU);
  }
  return r;
}

Interval pow(const Interval& x, const Interval& e) {
  return exp(e * log(x));
}

Interval min(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_min(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_max(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval hull(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_min(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

namespace {
// sin/cos over a narrow interval via midpoint value + Lipschitz slack
// (half-width + 2 ulps), then clamped to [-1, 1].
Interval trig_enclosure(const Interval& x, bool is_cos) {
  mpfr_t mid, val, hw, slack;
  mpfr_init2(mid, prec());
  mpfr_init2(val, prec());
  mpfr_init2(hw, prec());
  mpfr_init2(slack, prec());
  mpfr_add(mid, x.lo(), x.hi(), MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  if (is_cos) mpfr_cos(val, mid, MPFR_RNDN);
  else mpfr_sin(val, mid, MPFR_RNDN);
  mpfr_sub(hw, x.hi(), x.lo(), MPFR_RNDU);
  mpfr_div_2ui(hw, hw, 1, MPFR_RNDU);
  // rounding slack: |mid rounding| + |val rounding| <= 2 ulps of magnitude ~1
  mpfr_set_ui_2exp(slack, 4, -(mpfr_exp_t)prec() + 2, MPFR_RNDU);
  mpfr_add(hw, hw, slack, MPFR_RNDU);
  Interval r;
  mpfr_sub(r.lo_mut(), val, hw, MPFR_RNDD);
  mpfr_add(r.hi_mut(), val, hw, MPFR_RNDU);
  mpfr_clear(mid); mpfr_clear(val); mpfr_clear(hw); mpfr_clear(slack);
  Interval unit;
  mpfr_set_si(unit.lo_mut(), -1, MPFR_RNDD);
  mpfr_set_si(unit.hi_mut(), 1, MPFR_RNDU);
  // intersect with [-1,1]
  Interval out;
  mpfr_max(out.lo_mut(), r.lo(), unit.lo(), MPFR_RNDD);
  mpfr_min(out.hi_mut(), r.hi(), unit.hi(), MPFR_RNDU);
  return out;
}
}  // namespace

Interval cos_enclosure(const Interval& x) { return trig_enclosure(x, true); }
Interval sin_enclosure(const Interval& x) { return trig_enclosure(x, false); }

bool Interval::definitely_le(const Interval& o) const {
  return mpfr_lessequal_p(hi_, o.lo_);
}

bool Interval::definitely_lt(const Interval& o) const {
  return mpfr_less_p(hi_, o.lo_);
}

bool Interval::definitely_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::definitely_negative() const { return mpfr_sgn(hi_) < 0; }

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::contains(const mpq_class& v) const {
  return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

double Interval::lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double Interval::mid_d() const { return 0.5 * (lo_d() + hi_d()); }
double Interval::width_d() const {
  // Width must be formed at full precision; converting the endpoints to
  // double first would quantize tiny widths up to a double ulp.
  mpfr_t w;
  mpfr_init2(w, mpfr_get_prec(hi_));
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

std::string Interval::str(int digits) const {
  char* s1 = nullptr;
  char* s2 = nullptr;
  mpfr_asprintf(&s1, "%.*Rg", digits, lo_);
  mpfr_asprintf(&s2, "%.*Rg", digits, hi_);
  std::string out = std::string("[") + s1 + ", " + s2 + "]";
  mpfr_free_str(s1);
  mpfr_free_str(s2);
  return out;
}

Interval factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Interval(f);
}

}  // namespace l2b
