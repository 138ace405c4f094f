#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "l2b/rational.hpp"

namespace l2b {

struct QSeriesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Truncated Laurent series in q with exact rational coefficients.
//
// The stored window is [valuation, trunc): exponents below the valuation are
// known to be zero, exponents at or beyond trunc are unknown and reading one
// is a hard error.  Arithmetic propagates windows pessimistically, so a
// coefficient you can read is always exactly right.
class QSeries {
 public:
  QSeries(long valuation, long trunc)
      : val_(valuation), trunc_(trunc) {
    if (trunc_ <= val_) throw QSeriesError("empty window");
    coeffs_.assign(static_cast<size_t>(trunc_ - val_), Rational(0));
  }

  static QSeries zero(long trunc) { return QSeries(0, trunc); }
  static QSeries one(long trunc) {
    QSeries s(0, trunc);
    s.coeffs_[0] = 1;
    return s;
  }
  static QSeries monomial(const Rational& c, long e, long trunc) {
    QSeries s(e, trunc);
    s.coeffs_[0] = c;
    return s;
  }

  long valuation() const { return val_; }
  long trunc() const { return trunc_; }
  long length() const { return trunc_ - val_; }

  const Rational& at(long n) const {
    if (n >= trunc_)
      throw QSeriesError("coefficient q^" + std::to_string(n) +
                         " beyond truncation " + std::to_string(trunc_));
    if (n < val_) return zero_coeff();
    return coeffs_[static_cast<size_t>(n - val_)];
  }

  void set(long n, const Rational& c) {
    if (n < val_ || n >= trunc_) throw QSeriesError("set outside window");
    coeffs_[static_cast<size_t>(n - val_)] = c;
  }

  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator-() const;
  QSeries operator*(const QSeries& o) const;
  QSeries scaled(const Rational& c) const;
  QSeries shifted(long d) const;          // multiply by q^d
  QSeries inverse() const;                // leading coefficient must be nonzero
  QSeries pow(unsigned long k) const;
  QSeries apply_Vd(long d) const;         // q -> q^d
  QSeries theta() const;                  // q d/dq
  QSeries truncated(long new_trunc) const;
  // Drop known-zero leading coefficients so the valuation points at the
  // first nonzero one (no-op for the zero series).
  QSeries normalized() const;

  bool is_zero() const;
  bool operator==(const QSeries& o) const {
    return val_ == o.val_ && trunc_ == o.trunc_ && coeffs_ == o.coeffs_;
  }

  std::string csv() const;
  static QSeries from_csv(const std::string& text);

  // Integer coefficient table (exponents 0..c.size()-1) multiplied in place by
  //   prod_{m = m0, m0+step, m0+2*step, ...} (1 + sign*q^m)^reps,  sign = +1 or -1.
  // Factors with m >= c.size() cannot touch the window and are skipped, so the
  // product is effectively infinite. This is the workhorse behind every eta-style
  // product expansion and the colored-partition tables.
  static void apply_product_factors(std::vector<mpz_class>& c, long m0, long step,
                                    int reps, int sign);

 private:
  static const Rational& zero_coeff() {
    static const Rational z(0);
    return z;
  }
  long val_, trunc_;
  std::vector<Rational> coeffs_;
};

}  // namespace l2b
