#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcong {

using Int = mpz_class;
using Rat = mpq_class;

// Exponent arithmetic for Laurent polynomials. Desk-scale exponents fit in
// 64 bits with lots of headroom; overflow throws instead of wrapping.
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow (add)");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow (mul)");
    return r;
}

// Floor division/remainder; b > 0, remainder in [0, b).
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long long floor_mod(long long a, long long b) {
    long long r = a % b;
    if (r < 0) r += (b < 0 ? -b : b);
    return r;
}

// C(k,2) = k(k-1)/2 for any integer k.
inline long long choose2(long long k) {
    long long t = checked_mul(k, k - 1);
    return t / 2;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline long long ll_pow(long long base, unsigned e) {
    long long r = 1;
    for (unsigned i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
}

inline long long to_ll(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("bigint does not fit in 64 bits: " + v.get_str());
    return v.get_si();
}

inline Int ll_to_int(long long v) { return Int(static_cast<long>(v)); }

} // namespace qcong
