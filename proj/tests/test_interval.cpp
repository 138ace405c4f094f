#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "l2b/cball.hpp"
#include "l2b/interval.hpp"
#include "l2b/prec.hpp"
#include "l2b/rational.hpp"

using namespace l2b;

TEST_CASE("point and rational constructors") {
  Interval two(2L);
  CHECK(two.lo_d() == 2.0);
  CHECK(two.hi_d() == 2.0);
  CHECK(two.contains(Rational(2)));

  Interval third((Rational(1, 3)));
  CHECK(third.contains(Rational(1, 3)));
  CHECK(third.width_d() > 0.0);  // 1/3 is not representable, so the hull widens
  CHECK(third.width_d() < 1e-55);
}

TEST_CASE("from_decimal is exact") {
  Interval x = Interval::from_decimal("0.055");
  CHECK(x.contains(Rational(11, 200)));
  CHECK(x.width_d() < 1e-55);
  Interval y = Interval::from_decimal("-254.52626");
  CHECK(y.contains(Rational(-25452626, 100000)));
  CHECK_THROWS(Interval::from_decimal("12.x"));
}

TEST_CASE("arithmetic keeps the true value inside") {
  Interval a((Rational(1, 3))), b((Rational(1, 7)));
  CHECK((a + b).contains(Rational(10, 21)));
  CHECK((a - b).contains(Rational(4, 21)));
  CHECK((a * b).contains(Rational(1, 21)));
  CHECK((a / b).contains(Rational(7, 3)));
  CHECK((-a).contains(Rational(-1, 3)));
}

TEST_CASE("division by a straddling interval throws") {
  Interval num(1L);
  Interval straddle = Interval(1L) - Interval(1L);  // contains 0
  CHECK(straddle.contains_zero());
  CHECK_THROWS(num / straddle);
}

TEST_CASE("multiplication sign cases") {
  Interval neg = Interval::from_endpoints(Interval(-3L), Interval(-2L));
  Interval pos = Interval::from_endpoints(Interval(5L), Interval(7L));
  Interval mix = Interval::from_endpoints(Interval(-1L), Interval(2L));
  CHECK((neg * pos).contains(Rational(-15)));
  CHECK((neg * pos).contains(Rational(-21)));
  CHECK((neg * neg).contains(Rational(4)));
  CHECK((neg * neg).contains(Rational(9)));
  CHECK((mix * pos).contains(Rational(-7)));
  CHECK((mix * pos).contains(Rational(14)));
}

TEST_CASE("pi is enclosed tightly") {
  Interval pi = Interval::pi();
  CHECK(definitely_lt(Interval::from_decimal("3.14159265358979"), pi));
  CHECK(definitely_lt(pi, Interval::from_decimal("3.14159265358980")));
  CHECK(pi.width_d() < 1e-55);
}

TEST_CASE("transcendental enclosures") {
  Interval two(2L);
  CHECK(exp(log(two)).contains(Rational(2)));
  CHECK(sqrt(Interval(4L)).contains(Rational(2)));
  // 4 atan(1) encloses pi
  Interval four_atan = Interval(4L) * atan(Interval(1L));
  CHECK(!definitely_lt(four_atan, Interval::pi()));
  CHECK(!definitely_lt(Interval::pi(), four_atan));
  CHECK(pow(Interval(4L), Interval(Rational(1, 2))).contains(Rational(2)));
  CHECK(pow(Interval(2L), Interval(10L)).contains(Rational(1024)));
  CHECK_THROWS(log(Interval(0L)));
  CHECK_THROWS(sqrt(Interval(-1L)));
}

TEST_CASE("integer powers handle straddling bases") {
  Interval mix = Interval::from_endpoints(Interval(-1L), Interval(2L));
  Interval sq = pow_ui(mix, 2);
  CHECK(sq.lo_d() >= 0.0);  // even power of a straddling interval never dips below 0
  CHECK(sq.contains(Rational(4)));
  CHECK(sq.contains(Rational(0)));
  Interval cube = pow_ui(mix, 3);
  CHECK(cube.contains(Rational(-1)));
  CHECK(cube.contains(Rational(8)));
  CHECK(pow_ui(mix, 0).contains(Rational(1)));
}

TEST_CASE("abs min max hull") {
  Interval m = Interval::from_endpoints(Interval(-3L), Interval(2L));
  Interval am = abs(m);
  CHECK(am.lo_d() == 0.0);
  CHECK(am.contains(Rational(3)));
  Interval a(1L), b(5L);
  CHECK(min(a, b).contains(Rational(1)));
  CHECK(max(a, b).contains(Rational(5)));
  Interval h = hull(a, b);
  CHECK(h.contains(Rational(1)));
  CHECK(h.contains(Rational(3)));
  CHECK(h.contains(Rational(5)));
}

TEST_CASE("trig enclosures stay within [-1,1] and track known points") {
  CHECK(cos_enclosure(Interval(0L)).contains(Rational(1)));
  CHECK(sin_enclosure(Interval(0L)).contains(Rational(0)));
  Interval pi = Interval::pi();
  CHECK(sin_enclosure(pi).contains(Rational(0)));
  CHECK(cos_enclosure(pi).contains(Rational(-1)));
  // half angle
  CHECK(sin_enclosure(pi / Interval(2L)).contains(Rational(1)));
  // wide argument: result must still be clamped
  Interval wide = Interval::from_endpoints(Interval(-100L), Interval(100L));
  Interval c = cos_enclosure(wide);
  CHECK(c.lo_d() >= -1.0);
  CHECK(c.hi_d() <= 1.0);
}

TEST_CASE("comparison predicates") {
  Interval a(1L), b(2L);
  CHECK(definitely_lt(a, b));
  CHECK(definitely_le(a, b));
  CHECK(!definitely_lt(b, a));
  CHECK(a.definitely_positive());
  CHECK((-a).definitely_negative());
  CHECK(!(a - a).definitely_positive());
  CHECK((a - a).contains_zero());
}

TEST_CASE("higher precision tightens enclosures") {
  double w200 = Interval::pi().width_d();
  PrecisionGuard guard(400);
  double w400 = Interval::pi().width_d();
  CHECK(w400 < w200);
  CHECK(w400 > 0.0);
}

TEST_CASE("factorial") {
  CHECK(factorial(0).contains(Rational(1)));
  CHECK(factorial(5).contains(Rational(120)));
  CHECK(factorial(10).contains(Rational(3628800)));
}

TEST_CASE("complex box products") {
  // (1+2i)(3+4i) = -5+10i
  CBall a{Interval(1L), Interval(2L)};
  CBall b{Interval(3L), Interval(4L)};
  CBall p = a * b;
  CHECK(p.re.contains(Rational(-5)));
  CHECK(p.im.contains(Rational(10)));
  CBall q = p / b;
  CHECK(q.re.contains(Rational(1)));
  CHECK(q.im.contains(Rational(2)));
  CHECK(p.abs_sq().contains(Rational(125)));
}

TEST_CASE("complex absolute value bounds") {
  CBall threefour{Interval(3L), Interval(4L)};
  CHECK(threefour.abs_enclosure().contains(Rational(5)));
  CHECK(threefour.abs_upper().hi_d() >= 5.0);
  CHECK(threefour.abs_lower().lo_d() <= 5.0);
  // box containing zero: lower bound collapses to 0
  CBall z{Interval(1L) - Interval(1L), Interval(0L)};
  CHECK(z.contains_zero());
  CHECK(z.abs_lower().lo_d() == 0.0);
  CHECK_THROWS(z.inverse());
}

TEST_CASE("unit q power matches e^{2 pi i s z}") {
  // z = i: e^{2 pi i z} = e^{-2 pi}, real
  CBall q = unit_q_power(Rational(0), Rational(1), Rational(1));
  CHECK(q.im.contains(Rational(0)));
  CHECK(definitely_lt(Interval::from_decimal("0.00186"), q.re));
  CHECK(definitely_lt(q.re, Interval::from_decimal("0.00187")));
  // z = 1/2 + i: real part flips sign via cos(pi) = -1
  CBall h = unit_q_power(Rational(1, 2), Rational(1), Rational(1));
  CHECK(h.im.contains(Rational(0)));
  CHECK(h.re.definitely_negative());
  // scale 1/2 turns q into w = e^{pi i z}
  CBall w = unit_q_power(Rational(0), Rational(1), Rational(1, 2));
  CHECK(definitely_lt(Interval::from_decimal("0.0432"), w.re));
  CHECK(definitely_lt(w.re, Interval::from_decimal("0.0433")));
}
