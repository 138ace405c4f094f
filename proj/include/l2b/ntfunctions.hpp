#pragma once

#include <gmpxx.h>

#include <vector>

#include "l2b/rational.hpp"

namespace l2b {
namespace nt {

// Bernoulli number B_n with B_1 = -1/2.
Rational bernoulli(unsigned n);

// sum of p-th powers of divisors of n (n >= 1)
mpz_class sigma(unsigned long n, unsigned p = 1);

// sum of odd divisors of n
mpz_class sigma_odd(unsigned long n);

unsigned long divisor_count(unsigned long n);

// sigma tables for 1..N (index 0 unused)
std::vector<mpz_class> sigma_table(unsigned long N, unsigned p = 1);
std::vector<mpz_class> sigma_odd_table(unsigned long N);

}  // namespace nt
}  // namespace l2b
