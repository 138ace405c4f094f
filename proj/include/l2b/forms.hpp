#pragma once

#include <string>

#include "l2b/qseries.hpp"
#include "l2b/report.hpp"

namespace l2b {

// A named series plus its modular metadata. weight is 0 for the weight-0
// Hauptmodul-type objects (psi, phi, j); level is 1 or 2; valuation is the
// q-exponent of the first nonzero coefficient (-1 for psi and j).
struct FormDescriptor {
  std::string name;
  int weight;
  int level;
  long valuation;
  QSeries series;

  FormDescriptor(std::string n, int w, int lv, QSeries s)
      : name(std::move(n)),
        weight(w),
        level(lv),
        valuation(s.valuation()),
        series(std::move(s)) {}
};

// delta = q prod (1-q^n)^24, the 24th power of the eta product without its
// fractional prefactor. Integer coefficients, valuation 1.
QSeries delta_series(long trunc);

// psi = q^{-1} prod (1-q^{2n-1})^24. Built by the odd Euler product; every call
// cross-checks the first min(trunc, 64) coefficients against the quotient
// construction delta(z)/delta(2z), which must agree coefficient-exactly.
QSeries psi_series(long trunc);
// The quotient construction itself (O(T^2) exact-rational division).
QSeries psi_series_quotient(long trunc);

// phi = 1/psi = q prod (1+q^n)^24, positive integer coefficients. Product
// route with a bounded cross-check against series inversion of psi.
QSeries phi_series(long trunc);
QSeries phi_series_inverse(long trunc);

// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, k even >= 2 (k = 2 is the
// quasimodular case; callers treat it like the rest).
QSeries eisenstein_series(int k, long trunc);

// F_2 = 2E_2(2z) - E_2(z) = 1 + 24 sum (sum of odd divisors of n) q^n.
// Both constructions are computed and compared in full.
QSeries f2_series(long trunc);

// S_4 = (E_4(z) - E_4(2z))/240 = sum (sigma_3(n) - sigma_3(n/2)) q^n.
// Both constructions are computed and compared in full.
QSeries s4_series(long trunc);

// (eta(z) eta(2z))^8 = q prod (1-q^n)^8 (1-q^{2n})^8, the weight-8 level-2
// cusp generator. Its cube is delta(z)*delta(2z).
QSeries delta8_series(long trunc);

// j = E_4^3 / delta = q^{-1} + 744 + 196884 q + ...
QSeries j_series(long trunc);

// Checks that the coefficients c(n) of j satisfy the two-sided envelope
//   c(n) = e^{4 pi sqrt n} / (sqrt 2 n^{3/4}) (1 + eps_n),  |eps_n| <= 0.055/n
// for 1 <= n <= n_max, with certified transcendental evaluation. Reports the
// largest |eps_n|*n seen.
BoundReport check_bp_envelope(long n_max);

// Lookup by CLI name: delta, eta24, psi, phi, E2, E4, E6, ..., F2, S4,
// delta8, j. Throws std::invalid_argument for unknown names.
FormDescriptor form_by_name(const std::string& name, long trunc);

}  // namespace l2b
