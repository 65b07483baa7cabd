#pragma once

#include "qcong/qcore.hpp"

#include <complex>

namespace qcong {

// Index of a cyclotomic polynomial; must be >= 1.
using CycIndex = long long;

// Canonical representative of f modulo Phi_n: exponents are folded mod n
// first (sound because q^n = 1 mod Phi_n, and only there), then the fold is
// reduced by divrem. Result has degree < deg Phi_n. Exponent folding uses
// exact integer arithmetic, so exponents of any magnitude are safe.
LaurentPoly reduce_mod_phi(const LaurentPoly& f, CycIndex n);

// True iff modulus divides q^M (f - g), where q^M clears all negative
// exponents. Sound for any modulus that is an ordinary polynomial with
// leading coefficient +-1 and constant term +-1 (q is then a unit modulo it);
// anything else is rejected. This path never folds exponents, so it is valid
// for Phi_n powers and for product moduli.
bool congruent(const LaurentPoly& f, const LaurentPoly& g, const LaurentPoly& modulus);

// congruent(f, g, Phi_n), via canonical representatives.
bool congruent_mod_phi(const LaurentPoly& f, const LaurentPoly& g, CycIndex n);

// congruent(f, g, Phi_n^e). The exponent-fold shortcut is never applied here:
// q^n is not 1 modulo Phi_n^e for e >= 2.
bool congruent_mod_phi_power(const LaurentPoly& f, const LaurentPoly& g, CycIndex n, long long e);

// |f(omega) - expected| < tol at omega = e^{2 pi i m / n}, gcd(m, n) = 1.
// f is reduced mod Phi_n exactly before floating evaluation so that huge
// integer coefficients cannot poison the tolerance.
bool root_check(const LaurentPoly& f, long long n, long long m, std::complex<double> expected,
                double tol);

} // namespace qcong
