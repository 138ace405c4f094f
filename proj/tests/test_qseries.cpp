#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "l2b/ntfunctions.hpp"
#include "l2b/qseries.hpp"
#include "l2b/rational.hpp"

using namespace l2b;

TEST_CASE("window semantics: reading past the truncation is a hard error") {
  QSeries s(0, 5);
  s.set(2, Rational(7));
  CHECK(s.at(2) == Rational(7));
  CHECK(s.at(4) == Rational(0));
  CHECK(s.at(-3) == Rational(0));  // below the window is known zero
  CHECK_THROWS_AS((void)s.at(5), QSeriesError);
  CHECK_THROWS_AS((void)s.at(100), QSeriesError);
  CHECK_THROWS_AS(QSeries(3, 3), QSeriesError);  // empty window
}

TEST_CASE("addition intersects windows pessimistically") {
  QSeries a(0, 10), b(2, 6);
  a.set(3, Rational(1));
  b.set(3, Rational(2));
  QSeries c = a + b;
  CHECK(c.valuation() == 0);
  CHECK(c.trunc() == 6);
  CHECK(c.at(3) == Rational(3));
  CHECK_THROWS_AS((void)c.at(6), QSeriesError);
  // disjoint windows still work: the later series contributes known zeros
  QSeries d(0, 3), e(5, 9);
  e.set(5, Rational(1));
  QSeries f = d + e;
  CHECK(f.valuation() == 0);
  CHECK(f.trunc() == 3);
  CHECK(f.at(0) == Rational(0));
}

TEST_CASE("multiplication window is the worst case of the two truncations") {
  // (q^{-1} + 1 + q + ...)(q^2 + ...) knows nothing past min(Ta+vb, Tb+va)
  QSeries a(-1, 4), b(2, 7);
  for (long n = -1; n < 4; ++n) a.set(n, Rational(1));
  b.set(2, Rational(1));
  QSeries p = a * b;
  CHECK(p.valuation() == 1);
  CHECK(p.trunc() == 6);  // min(4+2, 7-1)
  CHECK(p.at(1) == Rational(1));
  CHECK(p.at(5) == Rational(1));
}

TEST_CASE("multiplication convolves correctly") {
  // (1+q)^2 (1+q)^3 = (1+q)^5
  QSeries one_q(0, 12);
  one_q.set(0, Rational(1));
  one_q.set(1, Rational(1));
  QSeries p = one_q.pow(2) * one_q.pow(3);
  long pascal[6] = {1, 5, 10, 10, 5, 1};
  for (long n = 0; n <= 5; ++n) CHECK(p.at(n) == Rational(pascal[n]));
}

TEST_CASE("inverse reproduces the geometric series") {
  QSeries s(0, 9);
  s.set(0, Rational(1));
  s.set(1, Rational(-1));
  QSeries inv = s.inverse();  // 1/(1-q) = 1 + q + q^2 + ...
  CHECK(inv.valuation() == 0);
  for (long n = 0; n < 9; ++n) CHECK(inv.at(n) == Rational(1));
  QSeries check = s * inv;
  CHECK(check.at(0) == Rational(1));
  for (long n = 1; n < check.trunc(); ++n) CHECK(check.at(n) == Rational(0));
}

TEST_CASE("inverse of a Laurent series flips the valuation") {
  QSeries s(-1, 4);  // q^{-1}(1 - 24 q)
  s.set(-1, Rational(1));
  s.set(0, Rational(-24));
  QSeries inv = s.inverse();
  CHECK(inv.valuation() == 1);
  CHECK(inv.at(1) == Rational(1));
  CHECK(inv.at(2) == Rational(24));
  CHECK(inv.at(3) == Rational(576));
  CHECK_THROWS_AS(QSeries(0, 3).inverse(), QSeriesError);  // zero series
}

TEST_CASE("pow uses binary powering and handles zero exponent") {
  QSeries s(1, 6);
  s.set(1, Rational(1));
  s.set(2, Rational(5));
  QSeries p0 = s.pow(0);
  CHECK(p0.at(0) == Rational(1));
  QSeries p3 = s.pow(3);
  CHECK(p3.valuation() == 3);
  CHECK(p3.at(3) == Rational(1));
  CHECK(p3.at(4) == Rational(15));
}

TEST_CASE("operator V_d stretches exponents") {
  QSeries s(-1, 3);
  s.set(-1, Rational(2));
  s.set(1, Rational(3));
  QSeries v = s.apply_Vd(2);
  CHECK(v.valuation() == -2);
  CHECK(v.trunc() == 6);
  CHECK(v.at(-2) == Rational(2));
  CHECK(v.at(2) == Rational(3));
  CHECK(v.at(-1) == Rational(0));
  CHECK_THROWS_AS(s.apply_Vd(0), QSeriesError);
}

TEST_CASE("theta operator multiplies by the exponent") {
  QSeries s(-1, 3);
  for (long n = -1; n < 3; ++n) s.set(n, Rational(1));
  QSeries t = s.theta();
  CHECK(t.at(-1) == Rational(-1));
  CHECK(t.at(0) == Rational(0));
  CHECK(t.at(2) == Rational(2));
}

TEST_CASE("shift scale truncate normalize") {
  QSeries s(0, 4);
  s.set(0, Rational(0));
  s.set(1, Rational(6));
  QSeries sh = s.shifted(3);
  CHECK(sh.valuation() == 3);
  CHECK(sh.at(4) == Rational(6));
  QSeries sc = s.scaled(Rational(1, 2));
  CHECK(sc.at(1) == Rational(3));
  QSeries tr = s.truncated(2);
  CHECK(tr.trunc() == 2);
  CHECK_THROWS_AS(s.truncated(10), QSeriesError);  // cannot invent coefficients
  QSeries nm = s.normalized();
  CHECK(nm.valuation() == 1);
}

TEST_CASE("csv round trip") {
  QSeries s(-1, 2);
  s.set(-1, Rational(1));
  s.set(0, Rational(-24));
  s.set(1, Rational(1, 3));
  std::string text = s.csv();
  CHECK(text == "-1,1\n0,-24\n1,1/3\n");
  QSeries back = QSeries::from_csv(text);
  CHECK(back == s);
  CHECK_THROWS_AS(QSeries::from_csv("0,1\n2,5\n"), QSeriesError);  // gap
}

TEST_CASE("product factor table: Euler products") {
  // prod (1-q^n) = 1 - q - q^2 + q^5 + q^7 - q^12 - ... (pentagonal numbers)
  std::vector<mpz_class> c(16, mpz_class(0));
  c[0] = 1;
  QSeries::apply_product_factors(c, 1, 1, 1, -1);
  long expect[16] = {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1};
  for (int i = 0; i < 16; ++i) CHECK(c[i] == expect[i]);
}

TEST_CASE("product factor table: distinct part counts") {
  // prod (1+q^n): 1,1,1,2,2,3,4,5,6,8,10
  std::vector<mpz_class> c(11, mpz_class(0));
  c[0] = 1;
  QSeries::apply_product_factors(c, 1, 1, 1, +1);
  long expect[11] = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10};
  for (int i = 0; i < 11; ++i) CHECK(c[i] == expect[i]);
}

TEST_CASE("bernoulli numbers") {
  CHECK(nt::bernoulli(0) == Rational(1));
  CHECK(nt::bernoulli(1) == Rational(-1, 2));
  CHECK(nt::bernoulli(2) == Rational(1, 6));
  CHECK(nt::bernoulli(4) == Rational(-1, 30));
  CHECK(nt::bernoulli(12) == Rational(-691, 2730));
  CHECK(nt::bernoulli(3) == Rational(0));
}

TEST_CASE("divisor sums") {
  CHECK(nt::sigma(6, 1) == 12);
  CHECK(nt::sigma(2, 3) == 9);
  CHECK(nt::sigma_odd(12) == 4);  // 1 + 3
  CHECK(nt::divisor_count(12) == 6);
  CHECK_THROWS(nt::sigma(0, 1));
  auto tab = nt::sigma_table(20, 3);
  for (unsigned long n = 1; n <= 20; ++n) CHECK(tab[n] == nt::sigma(n, 3));
  auto odd = nt::sigma_odd_table(20);
  for (unsigned long n = 1; n <= 20; ++n) CHECK(odd[n] == nt::sigma_odd(n));
}
