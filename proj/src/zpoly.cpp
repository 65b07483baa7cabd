#include "qcong/zpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

namespace qcong {

namespace {
constexpr double kTau = 6.283185307179586476925286766559;
}

LaurentPoly::LaurentPoly(Int c) {
    if (sgn(c) != 0) {
        min_exp_ = 0;
        coeffs_.push_back(std::move(c));
    }
}

LaurentPoly LaurentPoly::monomial(Int c, long long e) {
    LaurentPoly p;
    if (sgn(c) != 0) {
        p.min_exp_ = e;
        p.coeffs_.push_back(std::move(c));
    }
    return p;
}

LaurentPoly LaurentPoly::from_coeffs(long long min_exp, std::vector<Int> coeffs) {
    LaurentPoly p;
    p.min_exp_ = min_exp;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

void LaurentPoly::trim() {
    std::size_t hi = coeffs_.size();
    while (hi > 0 && sgn(coeffs_[hi - 1]) == 0) --hi;
    coeffs_.resize(hi);
    std::size_t lo = 0;
    while (lo < coeffs_.size() && sgn(coeffs_[lo]) == 0) ++lo;
    if (lo > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lo));
        min_exp_ = checked_add(min_exp_, static_cast<long long>(lo));
    }
    if (coeffs_.empty()) min_exp_ = 0;
}

long long LaurentPoly::valuation() const {
    if (is_zero()) throw std::domain_error("valuation of zero polynomial");
    return min_exp_;
}

long long LaurentPoly::degree() const {
    if (is_zero()) throw std::domain_error("degree of zero polynomial");
    return min_exp_ + static_cast<long long>(coeffs_.size()) - 1;
}

std::size_t LaurentPoly::term_count() const noexcept {
    std::size_t n = 0;
    for (const Int& c : coeffs_)
        if (sgn(c) != 0) ++n;
    return n;
}

Int LaurentPoly::coeff(long long e) const {
    if (is_zero() || e < min_exp_) return Int(0);
    long long i = e - min_exp_;
    if (i >= static_cast<long long>(coeffs_.size())) return Int(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Int LaurentPoly::leading_coeff() const {
    if (is_zero()) return Int(0);
    return coeffs_.back();
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (Int& c : r.coeffs_) c = -c;
    return r;
}

namespace {

LaurentPoly add_impl(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    if (a.is_zero()) return subtract ? -b : b;
    if (b.is_zero()) return a;
    long long lo = std::min(a.min_exp(), b.min_exp());
    long long hi = std::max(a.degree(), b.degree());
    std::vector<Int> out(static_cast<std::size_t>(hi - lo + 1));
    const auto& ar = a.raw();
    for (std::size_t i = 0; i < ar.size(); ++i) out[static_cast<std::size_t>(a.min_exp() - lo) + i] = ar[i];
    const auto& br = b.raw();
    std::size_t off = static_cast<std::size_t>(b.min_exp() - lo);
    for (std::size_t i = 0; i < br.size(); ++i) {
        if (subtract)
            out[off + i] -= br[i];
        else
            out[off + i] += br[i];
    }
    return LaurentPoly::from_coeffs(lo, std::move(out));
}

} // namespace

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return add_impl(a, b, false); }
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return add_impl(a, b, true); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) { *this = *this + rhs; return *this; }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { *this = *this - rhs; return *this; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    const LaurentPoly& sparse = a.term_count() <= b.term_count() ? a : b;
    const LaurentPoly& dense = (&sparse == &a) ? b : a;
    long long lo = checked_add(a.min_exp(), b.min_exp());
    std::size_t span = a.raw().size() + b.raw().size() - 1;
    std::vector<Int> out(span);
    const auto& dr = dense.raw();
    sparse.for_each_term([&](long long e, const Int& c) {
        std::size_t off = static_cast<std::size_t>(e + dense.min_exp() - lo);
        for (std::size_t i = 0; i < dr.size(); ++i) {
            if (sgn(dr[i]) != 0) mpz_addmul(out[off + i].get_mpz_t(), c.get_mpz_t(), dr[i].get_mpz_t());
        }
    });
    return LaurentPoly::from_coeffs(lo, std::move(out));
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
}

void LaurentPoly::mul_one_minus_q(long long e) {
    if (e < 1) throw std::invalid_argument("mul_one_minus_q: e must be >= 1");
    if (is_zero()) return;
    std::size_t old = coeffs_.size();
    coeffs_.resize(old + static_cast<std::size_t>(e));
    // result[j] = f[j] - f[j-e]; descending keeps f[j-e] unmodified when read
    for (std::size_t j = coeffs_.size(); j-- > static_cast<std::size_t>(e);) {
        std::size_t k = j - static_cast<std::size_t>(e);
        if (k < old) coeffs_[j] -= coeffs_[k];
    }
    trim();
}

void LaurentPoly::mul_one_plus_q(long long e) {
    if (e < 1) throw std::invalid_argument("mul_one_plus_q: e must be >= 1");
    if (is_zero()) return;
    std::size_t old = coeffs_.size();
    coeffs_.resize(old + static_cast<std::size_t>(e));
    for (std::size_t j = coeffs_.size(); j-- > static_cast<std::size_t>(e);) {
        std::size_t k = j - static_cast<std::size_t>(e);
        if (k < old) coeffs_[j] += coeffs_[k];
    }
    trim();
}

void LaurentPoly::divexact_one_minus_q(long long e) {
    if (e < 1) throw std::invalid_argument("divexact_one_minus_q: e must be >= 1");
    if (is_zero()) return;
    if (static_cast<long long>(coeffs_.size()) <= e) throw std::logic_error("inexact division by 1-q^e");
    // quotient g: g[j] = f[j] + g[j-e], ascending; top e slots must vanish
    for (std::size_t j = static_cast<std::size_t>(e); j < coeffs_.size(); ++j)
        coeffs_[j] += coeffs_[j - static_cast<std::size_t>(e)];
    for (std::size_t j = coeffs_.size() - static_cast<std::size_t>(e); j < coeffs_.size(); ++j)
        if (sgn(coeffs_[j]) != 0) throw std::logic_error("inexact division by 1-q^e");
    coeffs_.resize(coeffs_.size() - static_cast<std::size_t>(e));
    trim();
}

void LaurentPoly::divexact_one_plus_q(long long e) {
    if (e < 1) throw std::invalid_argument("divexact_one_plus_q: e must be >= 1");
    if (is_zero()) return;
    if (static_cast<long long>(coeffs_.size()) <= e) throw std::logic_error("inexact division by 1+q^e");
    // quotient g: g[j] = f[j] - g[j-e], ascending
    for (std::size_t j = static_cast<std::size_t>(e); j < coeffs_.size(); ++j)
        coeffs_[j] -= coeffs_[j - static_cast<std::size_t>(e)];
    for (std::size_t j = coeffs_.size() - static_cast<std::size_t>(e); j < coeffs_.size(); ++j)
        if (sgn(coeffs_[j]) != 0) throw std::logic_error("inexact division by 1+q^e");
    coeffs_.resize(coeffs_.size() - static_cast<std::size_t>(e));
    trim();
}

void LaurentPoly::add_scaled(const LaurentPoly& f, long long sh, long long scale) {
    if (f.is_zero() || scale == 0) return;
    LaurentPoly t = shift(f, sh);
    if (scale != 1) t = t * LaurentPoly(ll_to_int(scale));
    *this += t;
}

void LaurentPoly::divexact_const(const Int& c) {
    if (sgn(c) == 0) throw std::invalid_argument("divexact_const: zero divisor");
    if (c == 1) return;
    for (Int& x : coeffs_) {
        if (sgn(x) == 0) continue;
        if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
            throw std::logic_error("inexact division by constant");
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
}

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }
LaurentPoly sub(const LaurentPoly& f, const LaurentPoly& g) { return f - g; }
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }
LaurentPoly neg(const LaurentPoly& f) { return -f; }

LaurentPoly shift(const LaurentPoly& f, long long e) {
    if (f.is_zero()) return f;
    return LaurentPoly::from_coeffs(checked_add(f.min_exp(), e), f.raw());
}

LaurentPoly substitute_power(const LaurentPoly& f, long long j) {
    if (j == 0) throw std::invalid_argument("substitute_power: exponent multiplier must be nonzero");
    if (f.is_zero()) return f;
    LaurentPoly out;
    long long lo = j > 0 ? checked_mul(j, f.valuation()) : checked_mul(j, f.degree());
    long long hi = j > 0 ? checked_mul(j, f.degree()) : checked_mul(j, f.valuation());
    std::vector<Int> coeffs(static_cast<std::size_t>(hi - lo + 1));
    f.for_each_term([&](long long e, const Int& c) {
        coeffs[static_cast<std::size_t>(checked_mul(j, e) - lo)] = c;
    });
    return LaurentPoly::from_coeffs(lo, std::move(coeffs));
}

LaurentPoly pow(const LaurentPoly& f, unsigned long e) {
    LaurentPoly r(1);
    for (unsigned long i = 0; i < e; ++i) r = r * f;
    return r;
}

Rat eval_int(const LaurentPoly& f, const Int& x) {
    if (f.is_zero()) return Rat(0);
    if (sgn(x) == 0) {
        if (f.valuation() < 0) throw std::invalid_argument("eval_int: x = 0 with negative valuation");
        return Rat(f.coeff(0));
    }
    Rat acc(0);
    f.for_each_term([&](long long e, const Int& c) {
        if (e >= 0) {
            acc += Rat(c * int_pow(x, static_cast<unsigned long>(e)));
        } else {
            Rat t(c);
            t /= Rat(int_pow(x, static_cast<unsigned long>(-e)));
            acc += t;
        }
    });
    acc.canonicalize();
    return acc;
}

std::vector<Int> fold_exponents_mod(const LaurentPoly& f, long long n) {
    if (n < 1) throw std::invalid_argument("fold_exponents_mod: n must be >= 1");
    std::vector<Int> slots(static_cast<std::size_t>(n));
    f.for_each_term([&](long long e, const Int& c) {
        slots[static_cast<std::size_t>(floor_mod(e, n))] += c;
    });
    return slots;
}

std::complex<double> eval_complex(const LaurentPoly& f, long long n, long long m) {
    if (n < 1) throw std::invalid_argument("eval_complex: n must be >= 1");
    long long mm = floor_mod(m, n);
    if (std::gcd(mm == 0 ? n : mm, n) != 1) throw std::invalid_argument("eval_complex: gcd(m, n) must be 1");
    std::vector<Int> slots = fold_exponents_mod(f, n);
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
    for (long long t = 0; t < n; ++t)
        roots[static_cast<std::size_t>(t)] = std::polar(1.0, kTau * static_cast<double>(t) / static_cast<double>(n));
    std::complex<double> acc(0.0, 0.0);
    for (long long t = 0; t < n; ++t) {
        const Int& c = slots[static_cast<std::size_t>(t)];
        if (sgn(c) == 0) continue;
        acc += c.get_d() * roots[static_cast<std::size_t>(floor_mod(t * mm, n))];
    }
    return acc;
}

std::pair<LaurentPoly, LaurentPoly> divrem(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("divrem: division by zero polynomial");
    if (g.valuation() < 0) throw std::invalid_argument("divrem: divisor must be an ordinary polynomial");
    Int lead = g.leading_coeff();
    if (lead != 1 && lead != -1) throw std::invalid_argument("divrem: divisor leading coefficient must be +-1");
    if (f.is_zero()) return {LaurentPoly(), LaurentPoly()};
    if (f.valuation() < 0) throw std::invalid_argument("divrem: dividend must have valuation >= 0");

    long long df = f.degree();
    long long dg = g.degree();
    std::vector<Int> work(static_cast<std::size_t>(df + 1));
    f.for_each_term([&](long long e, const Int& c) { work[static_cast<std::size_t>(e)] = c; });
    if (df < dg) return {LaurentPoly(), f};

    std::vector<Int> quot(static_cast<std::size_t>(df - dg + 1));
    // nonzero divisor terms at absolute exponents
    std::vector<std::pair<long long, const Int*>> gt;
    g.for_each_term([&](long long e, const Int& c) { gt.emplace_back(e, &c); });
    bool lead_pos = (lead == 1);
    for (long long i = df - dg; i >= 0; --i) {
        Int& top = work[static_cast<std::size_t>(i + dg)];
        if (sgn(top) == 0) continue;
        Int qi = lead_pos ? top : Int(-top);
        for (const auto& [e, c] : gt)
            mpz_submul(work[static_cast<std::size_t>(i + e)].get_mpz_t(), qi.get_mpz_t(), c->get_mpz_t());
        quot[static_cast<std::size_t>(i)] = std::move(qi);
    }
    work.resize(static_cast<std::size_t>(dg));
    return {LaurentPoly::from_coeffs(0, std::move(quot)), LaurentPoly::from_coeffs(0, std::move(work))};
}

LaurentPoly divexact(const LaurentPoly& f, const LaurentPoly& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) throw std::logic_error("divexact: division not exact");
    return q;
}

std::string to_string(const LaurentPoly& f, std::size_t max_terms) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    std::size_t printed = 0;
    bool truncated = false;
    f.for_each_term([&](long long e, const Int& c) {
        if (printed >= max_terms) {
            truncated = true;
            return;
        }
        Int a = c;
        if (printed == 0) {
            if (sgn(a) < 0) { os << "-"; a = -a; }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
        ++printed;
    });
    if (truncated) os << " + ...";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << to_string(f); }

// ---------------------------------------------------------------------------

TruncatedSeries::TruncatedSeries(long long order) {
    if (order < 1) throw std::invalid_argument("TruncatedSeries: order must be positive");
    coeffs_.resize(static_cast<std::size_t>(order));
}

TruncatedSeries TruncatedSeries::one(long long order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::from_poly(const LaurentPoly& f, long long order) {
    TruncatedSeries s(order);
    if (!f.is_zero() && f.valuation() < 0)
        throw std::invalid_argument("TruncatedSeries: polynomial has negative valuation");
    f.for_each_term([&](long long e, const Int& c) {
        if (e < order) s.coeffs_[static_cast<std::size_t>(e)] = c;
    });
    return s;
}

const Int& TruncatedSeries::coeff(long long i) const {
    if (i < 0 || i >= order()) throw std::out_of_range("TruncatedSeries::coeff");
    return coeffs_[static_cast<std::size_t>(i)];
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

TruncatedSeries series_from(const LaurentPoly& f, long long order) {
    return TruncatedSeries::from_poly(f, order);
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series_mul: order mismatch");
    long long n = a.order();
    TruncatedSeries out(n);
    for (long long i = 0; i < n; ++i) {
        if (sgn(a.coeffs_[static_cast<std::size_t>(i)]) == 0) continue;
        for (long long j = 0; i + j < n; ++j) {
            if (sgn(b.coeffs_[static_cast<std::size_t>(j)]) == 0) continue;
            mpz_addmul(out.coeffs_[static_cast<std::size_t>(i + j)].get_mpz_t(),
                       a.coeffs_[static_cast<std::size_t>(i)].get_mpz_t(),
                       b.coeffs_[static_cast<std::size_t>(j)].get_mpz_t());
        }
    }
    return out;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series_add: order mismatch");
    TruncatedSeries out = a;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
    return out;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series_sub: order mismatch");
    TruncatedSeries out = a;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] -= b.coeffs_[i];
    return out;
}

TruncatedSeries series_inverse(const TruncatedSeries& s) {
    const Int& c0 = s.coeffs_[0];
    if (c0 != 1 && c0 != -1) throw std::invalid_argument("series_inverse: constant term must be +-1");
    long long n = s.order();
    TruncatedSeries out(n);
    out.coeffs_[0] = c0; // 1/c0 = c0 for +-1
    for (long long k = 1; k < n; ++k) {
        Int acc(0);
        for (long long j = 1; j <= k; ++j) {
            if (sgn(s.coeffs_[static_cast<std::size_t>(j)]) == 0) continue;
            mpz_addmul(acc.get_mpz_t(), s.coeffs_[static_cast<std::size_t>(j)].get_mpz_t(),
                       out.coeffs_[static_cast<std::size_t>(k - j)].get_mpz_t());
        }
        out.coeffs_[static_cast<std::size_t>(k)] = (c0 == 1) ? Int(-acc) : acc;
    }
    return out;
}

TruncatedSeries qpoch_inf(int sign, long long j, long long step, long long order) {
    if (order < 1) throw std::invalid_argument("qpoch_inf: order must be positive");
    if (step < 1) throw std::invalid_argument("qpoch_inf: step must be positive");
    if (j < 0) throw std::invalid_argument("qpoch_inf: j must be nonnegative");
    if (sign != 1 && sign != -1) throw std::invalid_argument("qpoch_inf: sign must be +-1");
    TruncatedSeries out = TruncatedSeries::one(order);
    for (long long e = j; e < order; e += step) {
        // multiply by (1 - sign*q^e), in place, descending
        for (long long i = order - 1; i >= e; --i) {
            Int& hi = out.coeffs_[static_cast<std::size_t>(i)];
            const Int& lo = out.coeffs_[static_cast<std::size_t>(i - e)];
            if (sign == 1)
                hi -= lo;
            else
                hi += lo;
        }
    }
    return out;
}

std::string to_string(const TruncatedSeries& s) {
    LaurentPoly p = LaurentPoly::from_coeffs(0, s.coeffs());
    std::ostringstream os;
    os << to_string(p) << " + O(q^" << s.order() << ")";
    return os.str();
}

// ---------------------------------------------------------------------------

BivariatePoly BivariatePoly::from_tcoeffs(std::vector<LaurentPoly> tc) {
    BivariatePoly b;
    b.tc_ = std::move(tc);
    b.trim();
    return b;
}

BivariatePoly BivariatePoly::constant(LaurentPoly c) {
    return from_tcoeffs({std::move(c)});
}

void BivariatePoly::trim() {
    while (!tc_.empty() && tc_.back().is_zero()) tc_.pop_back();
}

const LaurentPoly& BivariatePoly::t_coeff(long long j) const {
    static const LaurentPoly zero;
    if (j < 0 || j >= static_cast<long long>(tc_.size())) return zero;
    return tc_[static_cast<std::size_t>(j)];
}

BivariatePoly BivariatePoly::shifted_t(long long d) const {
    if (d < 0) throw std::invalid_argument("shifted_t: negative t-shift");
    if (is_zero()) return *this;
    std::vector<LaurentPoly> out(static_cast<std::size_t>(d));
    out.insert(out.end(), tc_.begin(), tc_.end());
    return from_tcoeffs(std::move(out));
}

BivariatePoly BivariatePoly::scaled_t(int sign, long long e) const {
    if (sign != 1 && sign != -1) throw std::invalid_argument("scaled_t: sign must be +-1");
    std::vector<LaurentPoly> out = tc_;
    for (std::size_t j = 0; j < out.size(); ++j) {
        long long jj = static_cast<long long>(j);
        out[j] = shift(out[j], checked_mul(e, jj));
        if (sign == -1 && (jj % 2) != 0) out[j] = -out[j];
    }
    return from_tcoeffs(std::move(out));
}

BivariatePoly BivariatePoly::times_poly(const LaurentPoly& c) const {
    std::vector<LaurentPoly> out = tc_;
    for (auto& p : out) p = p * c;
    return from_tcoeffs(std::move(out));
}

BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
    std::vector<LaurentPoly> out(std::max(a.tc_.size(), b.tc_.size()));
    for (std::size_t j = 0; j < out.size(); ++j) {
        if (j < a.tc_.size()) out[j] += a.tc_[j];
        if (j < b.tc_.size()) out[j] += b.tc_[j];
    }
    return BivariatePoly::from_tcoeffs(std::move(out));
}

bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.tc_ == b.tc_; }

std::string to_string(const BivariatePoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long long j = 0; j <= f.t_degree(); ++j) {
        const LaurentPoly& c = f.t_coeff(j);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(c) << ")";
        if (j == 1) os << "*t";
        if (j > 1) os << "*t^" << j;
    }
    return os.str();
}

} // namespace qcong
