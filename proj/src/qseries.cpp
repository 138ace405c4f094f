#include "l2b/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace l2b {

QSeries QSeries::operator+(const QSeries& o) const {
  long v = std::min(val_, o.val_);
  long t = std::min(trunc_, o.trunc_);
  if (t <= v) throw QSeriesError("sum window empty");
  QSeries r(v, t);
  for (long n = v; n < t; ++n) r.set(n, at(n) + o.at(n));
  return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
  long v = std::min(val_, o.val_);
  long t = std::min(trunc_, o.trunc_);
  if (t <= v) throw QSeriesError("difference window empty");
  QSeries r(v, t);
  for (long n = v; n < t; ++n) r.set(n, at(n) - o.at(n));
  return r;
}

QSeries QSeries::operator-() const {
  QSeries r(val_, trunc_);
  for (long n = val_; n < trunc_; ++n) r.set(n, -at(n));
  return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
  // Unknown tails contaminate exponents >= min(Ta+vb, Tb+va).
  long v = val_ + o.val_;
  long t = std::min(trunc_ + o.val_, o.trunc_ + val_);
  if (t <= v) throw QSeriesError("product window empty");
  QSeries r(v, t);
  for (long i = val_; i < trunc_; ++i) {
    const Rational& a = coeffs_[static_cast<size_t>(i - val_)];
    if (a == 0) continue;
    long jmax = std::min(o.trunc_ - 1, t - 1 - i);
    for (long j = o.val_; j <= jmax; ++j) {
      const Rational& b = o.coeffs_[static_cast<size_t>(j - o.val_)];
      if (b == 0) continue;
      r.coeffs_[static_cast<size_t>(i + j - v)] += a * b;
    }
  }
  return r;
}

QSeries QSeries::scaled(const Rational& c) const {
  QSeries r(val_, trunc_);
  for (long n = val_; n < trunc_; ++n) r.set(n, at(n) * c);
  return r;
}

QSeries QSeries::shifted(long d) const {
  QSeries r(val_ + d, trunc_ + d);
  r.coeffs_ = coeffs_;
  return r;
}

QSeries QSeries::normalized() const {
  long v = val_;
  while (v + 1 < trunc_ && at(v) == 0) ++v;
  QSeries r(v, trunc_);
  for (long n = v; n < trunc_; ++n) r.set(n, at(n));
  return r;
}

QSeries QSeries::inverse() const {
  QSeries a = normalized();
  if (a.at(a.val_) == 0) throw QSeriesError("inverse of zero series");
  long len = a.trunc_ - a.val_;
  QSeries r(-a.val_, -a.val_ + len);
  Rational lead = a.at(a.val_);
  r.coeffs_[0] = 1 / lead;
  for (long j = 1; j < len; ++j) {
    Rational s(0);
    for (long i = 1; i <= j; ++i)
      s += a.coeffs_[static_cast<size_t>(i)] *
           r.coeffs_[static_cast<size_t>(j - i)];
    r.coeffs_[static_cast<size_t>(j)] = -s / lead;
  }
  return r;
}

QSeries QSeries::pow(unsigned long k) const {
  if (k == 0) return QSeries::one(std::max(trunc_, 1L));
  QSeries acc = *this;
  unsigned long bits = k;
  // highest set bit first
  int top = 63;
  while (!((bits >> top) & 1)) --top;
  for (int b = top - 1; b >= 0; --b) {
    acc = acc * acc;
    if ((bits >> b) & 1) acc = acc * *this;
  }
  return acc;
}

QSeries QSeries::apply_Vd(long d) const {
  if (d < 1) throw QSeriesError("apply_Vd: d must be >= 1");
  QSeries r(val_ * d, trunc_ * d);
  for (long n = val_; n < trunc_; ++n)
    r.set(n * d, at(n));
  return r;
}

QSeries QSeries::theta() const {
  QSeries r(val_, trunc_);
  for (long n = val_; n < trunc_; ++n) r.set(n, at(n) * Rational(n));
  return r;
}

QSeries QSeries::truncated(long new_trunc) const {
  if (new_trunc > trunc_)
    throw QSeriesError("cannot extend truncation (coefficients unknown)");
  if (new_trunc <= val_) throw QSeriesError("truncated: window empty");
  QSeries r(val_, new_trunc);
  for (long n = val_; n < new_trunc; ++n) r.set(n, at(n));
  return r;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

std::string QSeries::csv() const {
  std::ostringstream out;
  for (long n = val_; n < trunc_; ++n)
    out << n << "," << rational_str(at(n)) << "\n";
  return out.str();
}

QSeries QSeries::from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<long, Rational>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw QSeriesError("csv row missing comma: " + line);
    long n = std::stol(line.substr(0, comma));
    rows.emplace_back(n, parse_rational(line.substr(comma + 1)));
  }
  if (rows.empty()) throw QSeriesError("csv has no rows");
  for (size_t i = 1; i < rows.size(); ++i)
    if (rows[i].first != rows[i - 1].first + 1)
      throw QSeriesError("csv exponents not contiguous ascending");
  QSeries r(rows.front().first, rows.back().first + 1);
  for (auto& [n, c] : rows) r.set(n, c);
  return r;
}

void QSeries::apply_product_factors(std::vector<mpz_class>& c, long m0, long step,
                                    int reps, int sign) {
  if (m0 < 1 || step < 1 || reps < 0 || (sign != 1 && sign != -1))
    throw QSeriesError("apply_product_factors: bad factor parameters");
  const long len = static_cast<long>(c.size());
  for (long m = m0; m < len; m += step) {
    for (int r = 0; r < reps; ++r) {
      // One pass applies (1 + sign*q^m); descending order keeps it in place.
      if (sign > 0)
        for (long i = len - 1; i >= m; --i) c[i] += c[i - m];
      else
        for (long i = len - 1; i >= m; --i) c[i] -= c[i - m];
    }
  }
}

}  // namespace l2b
