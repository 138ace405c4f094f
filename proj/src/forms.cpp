#include "l2b/forms.hpp"

#include <stdexcept>

#include "l2b/interval.hpp"
#include "l2b/ntfunctions.hpp"

namespace l2b {

namespace {

// Builds the series q^val * (integer product table), table exponent i mapping
// to q^{val+i}.
QSeries from_table(const std::vector<mpz_class>& c, long val) {
  QSeries r(val, val + static_cast<long>(c.size()));
  for (size_t i = 0; i < c.size(); ++i)
    r.set(val + static_cast<long>(i), Rational(c[i]));
  return r;
}

std::vector<mpz_class> unit_table(long len) {
  std::vector<mpz_class> c(static_cast<size_t>(len), mpz_class(0));
  c[0] = 1;
  return c;
}

void require_trunc(long trunc, long least, const char* who) {
  if (trunc < least)
    throw std::invalid_argument(std::string(who) + ": truncation too small");
}

// Coefficient-exact comparison on the overlap of the two windows up to limit.
void cross_check(const QSeries& a, const QSeries& b, long limit, const char* who) {
  long lo = std::max(a.valuation(), b.valuation());
  long hi = std::min({a.trunc(), b.trunc(), limit});
  for (long n = lo; n < hi; ++n)
    if (a.at(n) != b.at(n))
      throw std::logic_error(std::string(who) + ": dual constructions disagree at q^" +
                             std::to_string(n));
}

}  // namespace

QSeries delta_series(long trunc) {
  require_trunc(trunc, 2, "delta_series");
  auto c = unit_table(trunc - 1);
  QSeries::apply_product_factors(c, 1, 1, 24, -1);
  return from_table(c, 1);
}

QSeries psi_series_quotient(long trunc) {
  require_trunc(trunc, 2, "psi_series_quotient");
  QSeries num = delta_series(2 * trunc + 4);
  QSeries den = delta_series(trunc + 2).apply_Vd(2);
  return (num * den.inverse()).truncated(trunc);
}

namespace {
QSeries psi_product(long trunc) {
  auto c = unit_table(trunc + 1);
  QSeries::apply_product_factors(c, 1, 2, 24, -1);
  return from_table(c, -1);
}
}  // namespace

QSeries psi_series(long trunc) {
  require_trunc(trunc, 2, "psi_series");
  QSeries p = psi_product(trunc);
  cross_check(p, psi_series_quotient(std::min<long>(trunc, 64)), 64, "psi_series");
  return p;
}

QSeries phi_series_inverse(long trunc) {
  require_trunc(trunc, 2, "phi_series_inverse");
  return psi_product(trunc).inverse().truncated(trunc);
}

QSeries phi_series(long trunc) {
  require_trunc(trunc, 2, "phi_series");
  auto c = unit_table(trunc - 1);
  QSeries::apply_product_factors(c, 1, 1, 24, +1);
  QSeries p = from_table(c, 1);
  cross_check(p, phi_series_inverse(std::min<long>(trunc, 64)), 64, "phi_series");
  return p;
}

QSeries eisenstein_series(int k, long trunc) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("eisenstein_series: weight must be even and >= 2");
  require_trunc(trunc, 1, "eisenstein_series");
  Rational mult = Rational(-2 * static_cast<long>(k)) / nt::bernoulli(k);
  auto sig = nt::sigma_table(trunc - 1, static_cast<unsigned>(k - 1));
  QSeries r(0, trunc);
  r.set(0, Rational(1));
  for (long n = 1; n < trunc; ++n) r.set(n, mult * Rational(sig[static_cast<size_t>(n)]));
  return r;
}

QSeries f2_series(long trunc) {
  require_trunc(trunc, 2, "f2_series");
  auto odd = nt::sigma_odd_table(trunc - 1);
  QSeries r(0, trunc);
  r.set(0, Rational(1));
  for (long n = 1; n < trunc; ++n)
    r.set(n, Rational(24) * Rational(odd[static_cast<size_t>(n)]));

  QSeries e2 = eisenstein_series(2, trunc);
  QSeries alt = e2.apply_Vd(2).truncated(trunc).scaled(Rational(2)) - e2;
  cross_check(r, alt, trunc, "f2_series");
  return r;
}

QSeries s4_series(long trunc) {
  require_trunc(trunc, 2, "s4_series");
  QSeries e4 = eisenstein_series(4, trunc);
  QSeries r = (e4 - e4.apply_Vd(2).truncated(trunc)).scaled(Rational(1, 240)).normalized();

  auto sig = nt::sigma_table(trunc - 1, 3);
  QSeries alt(1, trunc);
  for (long n = 1; n < trunc; ++n) {
    mpz_class v = sig[static_cast<size_t>(n)];
    if (n % 2 == 0) v -= sig[static_cast<size_t>(n / 2)];
    alt.set(n, Rational(v));
  }
  cross_check(r, alt, trunc, "s4_series");
  return r;
}

QSeries delta8_series(long trunc) {
  require_trunc(trunc, 2, "delta8_series");
  auto c = unit_table(trunc - 1);
  QSeries::apply_product_factors(c, 1, 1, 8, -1);
  QSeries::apply_product_factors(c, 2, 2, 8, -1);
  return from_table(c, 1);
}

QSeries j_series(long trunc) {
  require_trunc(trunc, 3, "j_series");
  QSeries e4 = eisenstein_series(4, trunc + 2);
  return e4.pow(3) * delta_series(trunc + 2).inverse();
}

BoundReport check_bp_envelope(long n_max) {
  if (n_max < 1) throw std::invalid_argument("check_bp_envelope: n_max >= 1");
  QSeries j = j_series(n_max + 1);
  Interval worst(0L);  // max over n of |eps_n| * n, certified upper bounds
  for (long n = 1; n <= n_max; ++n) {
    // c(n) = e^{4 pi sqrt n}/(sqrt 2 n^{3/4}) (1 - 3/(32 pi sqrt n) + eps_n)
    Interval nn(n);
    Interval main = exp(Interval::pi() * Interval(4L) * sqrt(nn)) /
                    (sqrt(Interval(2L)) * pow(nn, Interval(3L) / Interval(4L)));
    Interval eps = Interval(j.at(n)) / main - Interval(1L) +
                   Interval(3L) / (Interval(32L) * Interval::pi() * sqrt(nn));
    worst = max(worst, abs(eps) * nn);
  }
  return report_le("j-coefficient relative error envelope: max_n n*|eps_n| over n <= " +
                       std::to_string(n_max),
                   worst.hi_d(), 0.055, "tabulated");
}

FormDescriptor form_by_name(const std::string& name, long trunc) {
  auto make = [&](const char* nm, int w, int lv, QSeries s) {
    FormDescriptor d(nm, w, lv, std::move(s));
    if (d.weight % 2 != 0 || (d.level != 1 && d.level != 2))
      throw std::logic_error("form_by_name: descriptor invariant violated");
    return d;
  };
  if (name == "delta") return make("delta", 12, 1, delta_series(trunc));
  if (name == "eta24") return make("eta24", 12, 1, delta_series(trunc));
  if (name == "psi") return make("psi", 0, 2, psi_series(trunc));
  if (name == "phi") return make("phi", 0, 2, phi_series(trunc));
  if (name == "F2") return make("F2", 2, 2, f2_series(trunc));
  if (name == "S4") return make("S4", 4, 2, s4_series(trunc));
  if (name == "delta8") return make("delta8", 8, 2, delta8_series(trunc));
  if (name == "j") return make("j", 0, 1, j_series(trunc));
  if (name.size() >= 2 && name[0] == 'E') {
    int k = 0;
    try {
      k = std::stoi(name.substr(1));
    } catch (...) {
      throw std::invalid_argument("unknown form: " + name);
    }
    return make(name.c_str(), k, 1, eisenstein_series(k, trunc));
  }
  throw std::invalid_argument("unknown form: " + name);
}

}  // namespace l2b
