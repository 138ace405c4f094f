#include "l2b/ntfunctions.hpp"

#include <map>
#include <stdexcept>

namespace l2b {
namespace nt {

Rational bernoulli(unsigned n) {
  static std::map<unsigned, Rational> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, B_0 = 1.
  if (cache.empty()) cache[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    if (cache.count(m)) continue;
    Rational s = 0;
    mpz_class binom;
    for (unsigned j = 0; j < m; ++j) {
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
      s += Rational(binom) * cache[j];
    }
    mpz_bin_uiui(binom.get_mpz_t(), m + 1, m);
    cache[m] = -s / Rational(binom);
  }
  return cache[n];
}

mpz_class sigma(unsigned long n, unsigned p) {
  if (n == 0) throw std::domain_error("sigma(0)");
  mpz_class s = 0, dp;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    mpz_ui_pow_ui(dp.get_mpz_t(), d, p);
    s += dp;
    unsigned long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(dp.get_mpz_t(), e, p);
      s += dp;
    }
  }
  return s;
}

mpz_class sigma_odd(unsigned long n) {
  if (n == 0) throw std::domain_error("sigma_odd(0)");
  mpz_class s = 0;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    if (d % 2) s += d;
    unsigned long e = n / d;
    if (e != d && e % 2) s += e;
  }
  return s;
}

unsigned long divisor_count(unsigned long n) {
  if (n == 0) throw std::domain_error("divisor_count(0)");
  unsigned long c = 0;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    c += (d * d == n) ? 1 : 2;
  }
  return c;
}

std::vector<mpz_class> sigma_table(unsigned long N, unsigned p) {
  // sieve: add d^p to every multiple of d
  std::vector<mpz_class> t(N + 1, mpz_class(0));
  mpz_class dp;
  for (unsigned long d = 1; d <= N; ++d) {
    mpz_ui_pow_ui(dp.get_mpz_t(), d, p);
    for (unsigned long m = d; m <= N; m += d) t[m] += dp;
  }
  return t;
}

std::vector<mpz_class> sigma_odd_table(unsigned long N) {
  std::vector<mpz_class> t(N + 1, mpz_class(0));
  for (unsigned long d = 1; d <= N; d += 2)
    for (unsigned long m = d; m <= N; m += d) t[m] += d;
  return t;
}

}  // namespace nt
}  // namespace l2b
