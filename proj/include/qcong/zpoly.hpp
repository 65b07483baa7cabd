#pragma once

#include "qcong/ints.hpp"

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qcong {

// Univariate Laurent polynomial over arbitrary-precision integers.
//
// Stored densely from min_exp_; canonical form keeps the first and last
// stored coefficients nonzero (the zero polynomial stores nothing), so
// equal polynomials have identical representations. Interior zeros are
// storage only: term iteration and term_count see nonzero terms.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(long long c) : LaurentPoly(ll_to_int(c)) {}
    explicit LaurentPoly(Int c);

    static LaurentPoly monomial(Int c, long long e);
    static LaurentPoly from_coeffs(long long min_exp, std::vector<Int> coeffs);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    long long valuation() const; // throws std::domain_error on the zero polynomial
    long long degree() const;    // throws std::domain_error on the zero polynomial
    std::size_t term_count() const noexcept;

    Int coeff(long long e) const;
    Int leading_coeff() const;
    Int constant_term() const { return coeff(0); }

    // Raw dense view (offset + contiguous coefficients); may expose interior zeros.
    long long min_exp() const noexcept { return min_exp_; }
    const std::vector<Int>& raw() const noexcept { return coeffs_; }

    template <class F>
    void for_each_term(F&& fn) const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (sgn(coeffs_[i]) != 0) fn(min_exp_ + static_cast<long long>(i), coeffs_[i]);
    }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs) { *this = *this * rhs; return *this; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // In-place multiply / exact-divide by (1 -+ q^e), e >= 1. These are the
    // workhorses of the q-binomial product recurrences; divide throws
    // std::logic_error if the division is not exact.
    void mul_one_minus_q(long long e);
    void mul_one_plus_q(long long e);
    void divexact_one_minus_q(long long e);
    void divexact_one_plus_q(long long e);

    // In-place exact division of every coefficient by a nonzero constant.
    void divexact_const(const Int& c);

    // += scale * q^sh * f
    void add_scaled(const LaurentPoly& f, long long sh, long long scale);

private:
    long long min_exp_ = 0;
    std::vector<Int> coeffs_;

    void trim();
    friend std::pair<LaurentPoly, LaurentPoly> divrem(const LaurentPoly&, const LaurentPoly&);
};

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly sub(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly neg(const LaurentPoly& f);

// Multiply by q^e.
LaurentPoly shift(const LaurentPoly& f, long long e);

// Ring homomorphism q -> q^j, j != 0.
LaurentPoly substitute_power(const LaurentPoly& f, long long j);

LaurentPoly pow(const LaurentPoly& f, unsigned long e);

// Exact evaluation; integer whenever f has no negative exponents or x = +-1.
// x = 0 with negative valuation is rejected.
Rat eval_int(const LaurentPoly& f, const Int& x);

// Floating evaluation at the primitive n-th root of unity e^{2 pi i m / n},
// gcd(m, n) = 1. Exponents are folded mod n (exactly, in bignums) first.
std::complex<double> eval_complex(const LaurentPoly& f, long long n, long long m);

// Euclidean division: f = g*quot + rem with deg(rem) < deg(g). Requires f with
// valuation >= 0 and g a nonzero ordinary polynomial with leading coefficient
// +-1, so everything stays in Z[q].
std::pair<LaurentPoly, LaurentPoly> divrem(const LaurentPoly& f, const LaurentPoly& g);

// divrem with the remainder required to vanish.
LaurentPoly divexact(const LaurentPoly& f, const LaurentPoly& g);

// Coefficients of f grouped by exponent residue mod n: slot r holds the sum of
// coefficients of q^e over e = r (mod n). Exact; used for q^n = 1 folds.
std::vector<Int> fold_exponents_mod(const LaurentPoly& f, long long n);

std::string to_string(const LaurentPoly& f, std::size_t max_terms = static_cast<std::size_t>(-1));
std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

// Formal power series in q truncated at order N: coefficients of q^0..q^{N-1}.
class TruncatedSeries {
public:
    explicit TruncatedSeries(long long order);
    static TruncatedSeries one(long long order);
    static TruncatedSeries from_poly(const LaurentPoly& f, long long order);

    long long order() const noexcept { return static_cast<long long>(coeffs_.size()); }
    const Int& coeff(long long i) const;
    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

private:
    std::vector<Int> coeffs_;
    friend TruncatedSeries series_mul(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries series_add(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries series_sub(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries series_inverse(const TruncatedSeries&);
    friend TruncatedSeries qpoch_inf(int sign, long long j, long long step, long long order);
};

TruncatedSeries series_from(const LaurentPoly& f, long long order);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);

// Multiplicative inverse; requires constant term +-1 (then exact over Z).
TruncatedSeries series_inverse(const TruncatedSeries& s);

// (sign*q^j; q^step)_infinity truncated to the given order: the factors
// (1 - sign*q^{j + i*step}) are multiplied while j + i*step < order.
TruncatedSeries qpoch_inf(int sign, long long j, long long step, long long order);

std::string to_string(const TruncatedSeries& s);

// Polynomial in an auxiliary variable t whose coefficients are Laurent
// polynomials in q; trailing zero coefficients are trimmed.
class BivariatePoly {
public:
    BivariatePoly() = default;
    static BivariatePoly from_tcoeffs(std::vector<LaurentPoly> tc);
    static BivariatePoly constant(LaurentPoly c);

    bool is_zero() const noexcept { return tc_.empty(); }
    long long t_degree() const noexcept { return static_cast<long long>(tc_.size()) - 1; }
    const LaurentPoly& t_coeff(long long j) const;

    BivariatePoly shifted_t(long long d) const;                 // * t^d
    BivariatePoly scaled_t(int sign, long long e) const;        // t -> sign * q^e * t
    BivariatePoly times_poly(const LaurentPoly& c) const;

    friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b);
    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b);
    friend bool operator!=(const BivariatePoly& a, const BivariatePoly& b) { return !(a == b); }

private:
    std::vector<LaurentPoly> tc_;
    void trim();
};

std::string to_string(const BivariatePoly& f);

} // namespace qcong
