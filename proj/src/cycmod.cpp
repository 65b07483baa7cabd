#include "qcong/cycmod.hpp"

namespace qcong {

LaurentPoly reduce_mod_phi(const LaurentPoly& f, CycIndex n) {
    if (n < 1) throw std::invalid_argument("reduce_mod_phi: n must be >= 1");
    LaurentPoly folded = LaurentPoly::from_coeffs(0, fold_exponents_mod(f, n));
    return divrem(folded, cyclotomic(n)).second;
}

bool congruent(const LaurentPoly& f, const LaurentPoly& g, const LaurentPoly& modulus) {
    if (modulus.is_zero()) throw std::invalid_argument("congruent: zero modulus");
    if (modulus.valuation() != 0)
        throw std::invalid_argument("congruent: modulus constant term must be +-1");
    Int c0 = modulus.constant_term();
    Int lead = modulus.leading_coeff();
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument("congruent: modulus constant term must be +-1");
    if (lead != 1 && lead != -1)
        throw std::invalid_argument("congruent: modulus leading coefficient must be +-1");
    LaurentPoly d = f - g;
    if (d.is_zero()) return true;
    if (d.valuation() < 0) d = shift(d, -d.valuation());
    return divrem(d, modulus).second.is_zero();
}

bool congruent_mod_phi(const LaurentPoly& f, const LaurentPoly& g, CycIndex n) {
    return reduce_mod_phi(f, n) == reduce_mod_phi(g, n);
}

bool congruent_mod_phi_power(const LaurentPoly& f, const LaurentPoly& g, CycIndex n, long long e) {
    if (e < 1) throw std::invalid_argument("congruent_mod_phi_power: e must be >= 1");
    if (n < 1) throw std::invalid_argument("congruent_mod_phi_power: n must be >= 1");
    return congruent(f, g, pow(cyclotomic(n), static_cast<unsigned long>(e)));
}

bool root_check(const LaurentPoly& f, long long n, long long m, std::complex<double> expected,
                double tol) {
    if (tol <= 0) throw std::invalid_argument("root_check: tolerance must be positive");
    std::complex<double> v = eval_complex(reduce_mod_phi(f, n), n, m);
    return std::abs(v - expected) < tol;
}

} // namespace qcong
