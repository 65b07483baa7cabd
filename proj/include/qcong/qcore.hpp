#pragma once

#include "qcong/zpoly.hpp"

namespace qcong {

// Jacobi/Legendre symbol value.
class SymbolValue {
public:
    explicit SymbolValue(int v) : v_(v) {
        if (v < -1 || v > 1) throw std::invalid_argument("SymbolValue: must be -1, 0 or +1");
    }
    int value() const noexcept { return v_; }
    operator int() const noexcept { return v_; }

private:
    int v_;
};

// Gaussian binomial [n;k]_q as an ordinary polynomial; 0 unless 0 <= k <= n.
// Pascal recurrence [n;k] = [n-1;k-1] + q^k [n-1;k], rows memoized.
LaurentPoly qbinom(long long n, long long k);

// (sign*q^j; q^step)_n = prod_{i=0}^{n-1} (1 - sign*q^{j+i*step}); empty product is 1.
LaurentPoly qpoch(int sign, long long j, long long n, long long step = 1);

// n-th cyclotomic polynomial, by exact division of q^n - 1 by the proper
// divisors' product; memoized.
LaurentPoly cyclotomic(long long n);

// (1 - q^{p^a})/(1 - q) = 1 + q + ... + q^{p^a - 1} for prime p; construction
// is cross-checked against prod_{j<=a} Phi_{p^j}.
LaurentPoly geom_modulus(long long p, long long a);

// Jacobi symbol (n / m) for odd m >= 3; 0 iff gcd(n, m) > 1.
SymbolValue jacobi(long long n, long long m);

// q-Fibonacci polynomial F_n(t): F_0 = 0, F_1 = 1,
// F_n = F_{n-1} + q^{n-2} t F_{n-2}.
BivariatePoly qfib(long long n);

// Central binomial coefficient C(2k, k) by the integer recurrence
// C(2k+2, k+1) = C(2k, k) * 2(2k+1)/(k+1).
Int central_binom(long long k);

// Ordinary binomial coefficient (nonnegative n).
Int binom(unsigned long n, unsigned long k);

// Deterministic trial division; all parameters at desk scale are tiny.
bool is_prime(long long n);

} // namespace qcong
