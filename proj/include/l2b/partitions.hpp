#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "l2b/interval.hpp"
#include "l2b/rational.hpp"
#include "l2b/report.hpp"

namespace l2b::parts {

// Q_k(0..N): partitions into distinct parts, parts in k colors; coefficients
// of prod (1+q^m)^k. Supported k: 1, 2, 4, 8, 16, 24.
std::vector<mpz_class> q_table(int k, long N);

// Distinct odd parts in k colors: coefficients of prod (1+q^{2m-1})^k.
// k = 24 carries |s(n)| at index n+1; k = 1 counts distinct-odd-part partitions.
std::vector<mpz_class> odd_q_table(int k, long N);

// Signed table: coefficients of prod (1-q^{2m-1}); |g(n)| <= Q_1(n).
std::vector<mpz_class> g_table(long N);

// pi/(2 sqrt(3n)) e^{pi sqrt(n/3)}, a strict upper bound for Q_1(n), n >= 1.
Interval bound_q1(long n);

// Certified upper bound for sum_{1 <= k <= x} 1/sqrt(kt - k^2):
//   2 arctan(sqrt x / sqrt(t-x)) + 1/sqrt(t-1) + 2 sqrt x / (t sqrt(t-x)).
// Requires 1 <= x < t.
Interval partial_sum_bound(const Interval& x, const Interval& t);

// c * n^p * e^{pi sqrt(r n)} as an interval.
Interval envelope_value(const Interval& c, int p, const Rational& r, long n);

// One level of the doubling chain: the envelope Q_k(n) <= constant * n^power *
// e^{pi sqrt(exponent_r * n)}, valid for every n >= 1. derived_sup bounds the
// ratio for all n above the table threshold; table_sup is the exact-table
// ratio maximum below it; constant_r = emitted constant as an exact rational
// (two decimals, rounded up), used verbatim by envelope checks downstream.
struct ChainLevel {
  int k = 0;
  Rational constant_r;
  double constant = 0.0;
  int n_power = 0;
  std::string exponent;
  Rational exponent_r;
  double derived_sup = 0.0;
  double table_sup = 0.0;
  double reference = 0.0;
};

// Recomputes the chain Q_2 -> Q_4 -> Q_8 -> Q_16 -> Q_24 by convolution
// splitting, emitting certified constants for the tabulated envelope shapes
// (n-powers 0,1,3,7,11 and exponents pi*sqrt(2n/3), 2pi*sqrt(n/3),
// 2pi*sqrt(2n/3), 4pi*sqrt(n/3), 2pi*sqrt(2n)).
std::vector<ChainLevel> chain_constants();

// Certifies value < c * n^p * e^{pi sqrt(r n)}, escalating precision on
// indeterminate overlap up to the cap; false only if the inequality could not
// be certified at the cap.
bool certified_below_envelope(const mpz_class& value, const Rational& c, int p,
                              const Rational& r, long n);

// Checks |s(n)| < 0.9 n^11 e^{2 pi sqrt(2n)} and b(n) < 0.08 n^11 e^{2 pi
// sqrt(2n)} for 1 <= n <= N from exact tables; the report's certified value is
// the largest coefficient/envelope ratio encountered.
BoundReport verify_thm3(long N);

// Leading-term profile c * n^alpha * e^{A sqrt n} with c, A > 0.
struct AsymptoticProfile {
  Interval c;
  Rational alpha;
  Interval A;
};

// Product-asymptotics composition: multiplying two generating functions with
// profiles (c1, a1, A1), (c2, a2, A2) yields
//   c1 c2 2 sqrt(2 pi) A1^{2a1+1} A2^{2a2+1} / (A1^2+A2^2)^{5/4+a1+a2},
// n-power a1+a2+3/4, exponent sqrt(A1^2+A2^2).
AsymptoticProfile dm_compose(const AsymptoticProfile& p, const AsymptoticProfile& r);

// 24-fold compositions: from the distinct-part profile to b(n)'s
// (2^{1/4}/8192, -3/4, 2 pi sqrt 2), and from the distinct-odd-part profile to
// |s(n)|'s (1/2, -3/4, 2 pi).
AsymptoticProfile b_profile();
AsymptoticProfile s_profile();

struct RatioRow {
  long n = 0;
  double b_ratio = 0.0;  // exact b(n) / profile value
  double s_ratio = 0.0;  // exact |s(n)| / profile value
};

// Ratios at n = N/4, N/2, N; each successive ratio must approach 1.
std::vector<RatioRow> verify_thm2_trend(long N);

}  // namespace l2b::parts
