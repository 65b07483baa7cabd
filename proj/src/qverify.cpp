#include "qcong/qverify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

namespace qcong {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

// ---------------------------------------------------------------------------
// exact accumulation over a fixed exponent window

class Accum {
public:
    Accum(long long lo, long long hi) : lo_(lo) {
        if (hi < lo) throw std::logic_error("Accum: empty window");
        c_.resize(static_cast<std::size_t>(hi - lo + 1));
    }

    // += scale * q^sh * f
    void add(const LaurentPoly& f, long long sh, long long scale) {
        if (f.is_zero() || scale == 0) return;
        long long base = checked_add(f.min_exp(), sh) - lo_;
        const auto& raw = f.raw();
        if (base < 0 || base + static_cast<long long>(raw.size()) > static_cast<long long>(c_.size()))
            throw std::logic_error("Accum: term exceeds window");
        Int s = ll_to_int(scale);
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (sgn(raw[i]) == 0) continue;
            std::size_t j = static_cast<std::size_t>(base) + i;
            if (scale == 1)
                c_[j] += raw[i];
            else if (scale == -1)
                c_[j] -= raw[i];
            else
                mpz_addmul(c_[j].get_mpz_t(), s.get_mpz_t(), raw[i].get_mpz_t());
        }
    }

    LaurentPoly take() { return LaurentPoly::from_coeffs(lo_, std::move(c_)); }

private:
    long long lo_;
    std::vector<Int> c_;
};

// ---------------------------------------------------------------------------
// exact q-binomial streams (product-form ratio recurrences)

// [2k; k+d] for fixed d, k ascending from |d|.
class CentralStream {
public:
    explicit CentralStream(long long d) : d_(d < 0 ? -d : d), k_(d_), cur_(1) {}

    long long k() const noexcept { return k_; }
    const LaurentPoly& value() const noexcept { return cur_; }

    void advance() {
        long long k = k_;
        cur_.mul_one_minus_q(2 * k + 1);
        cur_.mul_one_minus_q(2 * k + 2);
        cur_.divexact_one_minus_q(k + 1 + d_);
        cur_.divexact_one_minus_q(k + 1 - d_);
        ++k_;
    }

private:
    long long d_, k_;
    LaurentPoly cur_;
};

// [2k-1; k] for k ascending from 1.
class OddCentralStream {
public:
    OddCentralStream() : k_(1), cur_(1) {}

    long long k() const noexcept { return k_; }
    const LaurentPoly& value() const noexcept { return cur_; }

    void advance() {
        long long k = k_;
        cur_.mul_one_minus_q(2 * k);
        cur_.mul_one_minus_q(2 * k + 1);
        cur_.divexact_one_minus_q(k);
        cur_.divexact_one_minus_q(k + 1);
        ++k_;
    }

private:
    long long k_;
    LaurentPoly cur_;
};

// [n-k; k] for fixed n, k ascending from 0; valid while 2k <= n.
class LemmaStream {
public:
    explicit LemmaStream(long long n) : n_(n), k_(0), cur_(1) {}

    long long k() const noexcept { return k_; }
    const LaurentPoly& value() const noexcept { return cur_; }

    void advance() {
        long long k1 = k_ + 1;
        if (2 * k1 > n_) throw std::logic_error("LemmaStream: past the diagonal");
        cur_.mul_one_minus_q(n_ - 2 * k1 + 1);
        cur_.mul_one_minus_q(n_ - 2 * k1 + 2);
        cur_.divexact_one_minus_q(k1);
        cur_.divexact_one_minus_q(n_ - k1 + 1);
        ++k_;
    }

private:
    long long n_, k_;
    LaurentPoly cur_;
};

// [n; k] for fixed n, k ascending from 0.
class RowStream {
public:
    explicit RowStream(long long n) : n_(n), k_(0), cur_(1) {}

    long long k() const noexcept { return k_; }
    const LaurentPoly& value() const noexcept { return cur_; }

    void advance() {
        long long k1 = k_ + 1;
        if (k1 > n_) throw std::logic_error("RowStream: k exceeds n");
        cur_.mul_one_minus_q(n_ - k1 + 1);
        cur_.divexact_one_minus_q(k1);
        ++k_;
    }

private:
    long long n_, k_;
    LaurentPoly cur_;
};

LaurentPoly sign_monomial(int s, long long e) {
    if (s == 0) return LaurentPoly();
    return LaurentPoly::monomial(Int(s), e);
}

// 1 - q^e
LaurentPoly one_minus_qe(long long e) {
    return LaurentPoly(1) - LaurentPoly::monomial(Int(1), e);
}

// (1 - q^len)/(1 + q) for even len: 1 - q + q^2 - ... - q^{len-1}
LaurentPoly alt_geom(long long len) {
    std::vector<Int> c(static_cast<std::size_t>(len));
    for (long long i = 0; i < len; ++i) c[static_cast<std::size_t>(i)] = (i % 2 == 0) ? 1 : -1;
    return LaurentPoly::from_coeffs(0, std::move(c));
}

} // namespace

// ---------------------------------------------------------------------------
// builders

namespace builders {

LaurentPoly central_qbinom(long long k, long long d) {
    long long ad = d < 0 ? -d : d;
    if (k < ad) return LaurentPoly();
    CentralStream cs(d);
    while (cs.k() < k) cs.advance();
    return cs.value();
}

LaurentPoly sum_central_alt_tri(long long n) {
    if (n <= 0) return LaurentPoly();
    long long lo = -choose2(n);
    long long hi = std::max(0LL, choose2(n - 1));
    Accum acc(lo, hi);
    CentralStream cs(0);
    for (long long k = 0; k < n; ++k) {
        acc.add(cs.value(), -choose2(k + 1), (k % 2 != 0) ? -1 : 1);
        cs.advance();
    }
    return acc.take();
}

LaurentPoly sum_central_alt_tri0(long long n) {
    if (n <= 0) return LaurentPoly();
    long long lo = -std::max(0LL, choose2(n - 1));
    long long hi = std::max(0LL, choose2(n));
    Accum acc(lo, hi);
    CentralStream cs(0);
    for (long long k = 0; k < n; ++k) {
        acc.add(cs.value(), -choose2(k), (k % 2 != 0) ? -1 : 1);
        cs.advance();
    }
    return acc.take();
}

LaurentPoly sum_central_qk(long long n, long long d) {
    if (n <= 0) return LaurentPoly();
    long long ad = d < 0 ? -d : d;
    if (n <= ad) return LaurentPoly();
    long long hi = (n - 1) + std::max(0LL, (n - 1) * (n - 1) - d * d);
    Accum acc(0, std::max(hi, n - 1));
    CentralStream cs(d);
    for (long long k = ad; k < n; ++k) {
        acc.add(cs.value(), k, 1);
        cs.advance();
    }
    return acc.take();
}

LaurentPoly sum_central_q2k1(long long n) {
    if (n <= 0) return LaurentPoly();
    long long hi = 2 * (n - 1) + 1 + (n - 1) * (n - 1);
    Accum acc(1, hi);
    CentralStream cs(0);
    for (long long k = 0; k < n; ++k) {
        acc.add(cs.value(), 2 * k + 1, 1);
        cs.advance();
    }
    return acc.take();
}

LaurentPoly greene_lhs(long long n) {
    if (n <= 0) return LaurentPoly();
    long long lo = std::min(0LL, -choose2(n - 1));
    long long hi = std::max(0LL, choose2(n - 1));
    Accum acc(lo, hi);
    acc.add(LaurentPoly(1), 0, 1);
    OddCentralStream os;
    for (long long k = 1; k < n; ++k) {
        acc.add(os.value(), -choose2(k), (k % 2 != 0) ? -2 : 2);
        os.advance();
    }
    return acc.take();
}

LaurentPoly lemma_nkk_lhs(long long n) {
    if (n < 0) return LaurentPoly();
    long long hi = 0;
    for (long long k = 0; 2 * k <= n; ++k)
        hi = std::max(hi, choose2(k) + k * (n - 2 * k));
    Accum acc(0, hi);
    LemmaStream ls(n);
    for (long long k = 0; 2 * k <= n; ++k) {
        acc.add(ls.value(), choose2(k), (k % 2 != 0) ? -1 : 1);
        if (2 * (k + 1) <= n) ls.advance();
    }
    return acc.take();
}

} // namespace builders

// ---------------------------------------------------------------------------
// verdict helpers

namespace {

std::string diff_witness(const Params& params, const LaurentPoly& diff, const std::string& where) {
    std::ostringstream os;
    os << "at " << params_to_string(params) << ": nonzero difference " << where << ", leading terms "
       << to_string(diff, 5);
    return os.str();
}

CheckResult exact_verdict(const std::string& id, const Params& params, const std::string& tag,
                          const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly d = lhs - rhs;
    if (d.is_zero()) return CheckResult::pass(id, params, tag);
    return CheckResult::fail(id, params, tag, diff_witness(params, d, "(exact comparison)"));
}

CheckResult phi_verdict(const std::string& id, const Params& params, const std::string& tag,
                        const LaurentPoly& lhs, const LaurentPoly& rhs, long long n,
                        bool conjectural = false) {
    LaurentPoly a = reduce_mod_phi(lhs, n);
    LaurentPoly b = reduce_mod_phi(rhs, n);
    if (a == b)
        return CheckResult::pass(id, params, tag,
                                 conjectural ? std::optional<std::string>("conjectural") : std::nullopt);
    std::string w = diff_witness(params, a - b, "mod Phi_" + std::to_string(n));
    if (conjectural) w = "conjectural; " + w;
    return CheckResult::fail(id, params, tag, w);
}

CheckResult modulus_verdict(const std::string& id, const Params& params, const std::string& tag,
                            const LaurentPoly& lhs, const LaurentPoly& rhs,
                            const LaurentPoly& modulus, const std::string& modulus_name,
                            bool conjectural = false) {
    if (congruent(lhs, rhs, modulus))
        return CheckResult::pass(id, params, tag,
                                 conjectural ? std::optional<std::string>("conjectural") : std::nullopt);
    LaurentPoly d = lhs - rhs;
    if (!d.is_zero() && d.valuation() < 0) d = shift(d, -d.valuation());
    std::string w = diff_witness(params, divrem(d, modulus).second, "mod " + modulus_name);
    if (conjectural) w = "conjectural; " + w;
    return CheckResult::fail(id, params, tag, w);
}

CheckResult numeric_verdict(const std::string& id, const Params& params, const std::string& tag,
                            const LaurentPoly& f, long long n, long long m,
                            std::complex<double> expected, double tol) {
    std::complex<double> v = eval_complex(reduce_mod_phi(f, n), n, m);
    double err = std::abs(v - expected);
    if (err < tol) return CheckResult::pass(id, params, tag);
    std::ostringstream os;
    os << "at " << params_to_string(params) << ": value " << v.real() << (v.imag() < 0 ? "" : "+")
       << v.imag() << "i, expected " << expected.real() << (expected.imag() < 0 ? "" : "+")
       << expected.imag() << "i, |error| = " << err << " >= tol " << tol;
    return CheckResult::fail(id, params, tag, os.str());
}

bool coprime(long long m, long long n) {
    long long mm = floor_mod(m, n);
    return std::gcd(mm == 0 ? n : mm, n) == 1;
}

long long get(const Params& p, const std::string& name) { return p.at(name); }

// ---------------------------------------------------------------------------
// identity registry

// multiply by (1 + q^e) with the e = 0 case meaning the constant factor 2
void mul_poch_factor(LaurentPoly& f, long long e) {
    if (e == 0)
        f = f * LaurentPoly(2);
    else
        f.mul_one_plus_q(e);
}

void div_poch_factor(LaurentPoly& f, long long e) {
    if (e == 0)
        f.divexact_const(Int(2));
    else
        f.divexact_one_plus_q(e);
}

// LHS of eq. families "sum_k (+-1)^{n-k} q^{w(k)} [n;k][2k;k+d] (-q^{k+o}; q)_{n-k}"
// which = 1..4 selects weight and poch offset. The term polynomial
// T_k = [n;k][2k;k+d](-q^{k+o};q)_{n-k} is carried along the sum by its exact
// binomial-factor ratio, never rebuilt from scratch.
LaurentPoly qser_lhs(int which, long long n, long long d) {
    long long o = (which == 1 || which == 3) ? 1 : 0;
    auto weight = [&](long long k) { return (which <= 2) ? choose2(n - k) : (n - k); };
    auto poch_deg = [&](long long k) { // deg (-q^{k+o};q)_{n-k}
        return (n - k) * (k + o) + (n - k) * (n - k - 1) / 2;
    };
    long long hi = 0;
    for (long long k = d; k <= n; ++k)
        hi = std::max(hi, weight(k) + k * (n - k) + (k * k - d * d) + poch_deg(k));
    Accum acc(0, std::max(hi, 0LL));

    // T_d = [n;d] * (-q^{d+o};q)_{n-d}
    RowStream row(n);
    while (row.k() < d) row.advance();
    LaurentPoly term = row.value();
    for (long long i = 0; i < n - d; ++i) mul_poch_factor(term, d + o + i);

    for (long long k = d; k <= n; ++k) {
        acc.add(term, weight(k), ((n - k) % 2 != 0) ? -1 : 1);
        if (k == n) break;
        term.mul_one_minus_q(n - k);
        term.mul_one_minus_q(2 * k + 1);
        term.mul_one_minus_q(2 * k + 2);
        term.divexact_one_minus_q(k + 1);
        term.divexact_one_minus_q(k + 1 + d);
        term.divexact_one_minus_q(k + 1 - d);
        div_poch_factor(term, k + o);
    }
    return acc.take();
}

LaurentPoly qser_rhs(int which, long long n, long long d) {
    auto sub2 = [](const LaurentPoly& f) { return substitute_power(f, 2); };
    if ((n - d) % 2 == 0) {
        LaurentPoly b = sub2(qbinom(n, (n - d) / 2));
        if (which == 1 || which == 2) return shift(b, (n * n - d * d) / 2);
        return b;
    }
    LaurentPoly b = sub2(qbinom(n - 1, (n - d - 1) / 2));
    switch (which) {
        case 1: return LaurentPoly();
        case 2: return shift((LaurentPoly::monomial(Int(1), n) - LaurentPoly(1)) * b,
                             (n * n - d * d - 1) / 2);
        case 3: return one_minus_qe(2 * n) * b;
        default: return one_minus_qe(n) * b;
    }
}

CheckResult qser_check(int which, const std::string& id, const Params& pr) {
    long long n = get(pr, "n"), d = get(pr, "d");
    if (n < 1) return CheckResult::skip(id, pr, "theorem", "n must be >= 1");
    if (d < 0 || d > n) return CheckResult::skip(id, pr, "theorem", "d must be in [0, n]");
    return exact_verdict(id, pr, "theorem", qser_lhs(which, n, d), qser_rhs(which, n, d));
}

// LHS of the corollary families
// sum_{k<n} q^{w(k)} [2k;k+d] (-q^{k+o}; q)_{n-k-1}, w selected by kind.
// Same term-ratio scheme as qser_lhs: T_k = [2k;k+d](-q^{k+o};q)_{n-k-1}.
enum class CorWeight { qk, qk2k3, neg_tri, q2k };

LaurentPoly cor_lhs(CorWeight kind, long long o, long long n, long long d) {
    auto weight = [&](long long k) -> long long {
        switch (kind) {
            case CorWeight::qk: return k;
            case CorWeight::qk2k3: return -(k * (k + 3)) / 2;
            case CorWeight::neg_tri: return -choose2(k + 1);
            default: return 2 * k;
        }
    };
    auto poch_deg = [&](long long k) { // deg (-q^{k+o};q)_{n-k-1}
        return (n - k - 1) * (k + o) + (n - k - 1) * (n - k - 2) / 2;
    };
    long long lo = 0, hi = 0;
    for (long long k = d; k < n; ++k) {
        lo = std::min(lo, weight(k));
        hi = std::max(hi, weight(k) + (k * k - d * d) + poch_deg(k));
    }
    Accum acc(lo, std::max(hi, lo));

    // T_d = (-q^{d+o};q)_{n-d-1}
    LaurentPoly term(1);
    for (long long i = 0; i < n - d - 1; ++i) mul_poch_factor(term, d + o + i);

    for (long long k = d; k < n; ++k) {
        acc.add(term, weight(k), 1);
        if (k == n - 1) break;
        term.mul_one_minus_q(2 * k + 1);
        term.mul_one_minus_q(2 * k + 2);
        term.divexact_one_minus_q(k + 1 + d);
        term.divexact_one_minus_q(k + 1 - d);
        div_poch_factor(term, k + o);
    }
    return acc.take();
}

int par_sign(long long e) { return (e % 2 != 0) ? -1 : 1; } // (-1)^e for e >= 0

CheckResult cor_check(const std::string& id, const Params& pr) {
    long long n = get(pr, "n"), d = get(pr, "d");
    if (n < 1) return CheckResult::skip(id, pr, "corollary", "n must be >= 1");
    if (d < 0 || d >= n) return CheckResult::skip(id, pr, "corollary", "d must be in [0, n-1]");
    bool even = ((n - d) % 2 == 0);
    LaurentPoly lhs, rhs;
    if (id == "2k-first") {
        lhs = cor_lhs(CorWeight::qk, 1, n, d);
        rhs = even ? LaurentPoly()
                   : shift(LaurentPoly(par_sign((n + d - 1) / 2)),
                           (d * (2 * n - 3 * d) - (n + 1) * (n + 1)) / 4);
    } else if (id == "2k-second") {
        lhs = cor_lhs(CorWeight::qk, 0, n, d);
        rhs = even ? shift(alt_geom(n - d) * LaurentPoly(par_sign((n + d) / 2)),
                           (d * (2 * n - 3 * d) - n * n + 2 * d) / 4)
                   : shift(LaurentPoly(par_sign((n + d - 1) / 2)),
                           (d * (2 * n - 3 * d) - (n + 1) * (n + 1)) / 4);
    } else if (id == "2k-third") {
        lhs = cor_lhs(CorWeight::qk2k3, 1, n, d);
        rhs = even ? shift(one_minus_qe(n - d) * LaurentPoly(par_sign((n + d - 2) / 2)),
                           (5 - (n - d + 1) * (n - d + 1)) / 4)
                   : shift(LaurentPoly(par_sign((n + d - 1) / 2)), (5 - (n - d) * (n - d)) / 4);
    } else if (id == "2k-fourth") {
        lhs = cor_lhs(CorWeight::qk2k3, 0, n, d);
        rhs = even ? shift(alt_geom(n - d) * LaurentPoly(par_sign((n + d - 2) / 2)),
                           (9 - (n - d + 1) * (n - d + 1)) / 4)
                   : shift(LaurentPoly(par_sign((n + d - 1) / 2)), (5 - (n - d) * (n - d)) / 4);
    } else if (id == "2k-first-inv") {
        lhs = cor_lhs(CorWeight::neg_tri, 1, n, d);
        rhs = even ? LaurentPoly()
                   : shift(LaurentPoly(par_sign((n + d - 1) / 2)), (1 - (n - d) * (n - d)) / 4);
    } else { // 2k-third-inv
        lhs = cor_lhs(CorWeight::q2k, 1, n, d);
        rhs = even ? shift(one_minus_qe(n - d) * LaurentPoly(par_sign((n + d) / 2)),
                           (d * (2 * n - 3 * d) - n * n + 2 * d - 4) / 4)
                   : shift(LaurentPoly(par_sign((n + d - 1) / 2)),
                           (d * (2 * n - 3 * d) - (n + 1) * (n + 1) - 4) / 4);
    }
    return phi_verdict(id, pr, "corollary", lhs, rhs, n);
}

// Andrews-type series checks with a = s1 q^alpha, b = s2 q^beta.
CheckResult andrews_check(bool second, const std::string& id, const Params& pr) {
    long long s1 = get(pr, "s1"), alpha = get(pr, "alpha");
    long long s2 = get(pr, "s2"), beta = get(pr, "beta");
    long long N = get(pr, "N");
    if ((s1 != 1 && s1 != -1) || (s2 != 1 && s2 != -1))
        return CheckResult::skip(id, pr, "identity", "s1 and s2 must be +-1");
    if (alpha < 0 || alpha > 3 || beta < 0 || beta > 3)
        return CheckResult::skip(id, pr, "identity", "alpha and beta must be in [0, 3]");
    if (N < 1) return CheckResult::skip(id, pr, "identity", "N must be >= 1");
    int is1 = static_cast<int>(s1), is2 = static_cast<int>(s2);
    int is12 = is1 * is2;

    TruncatedSeries lhs(N);
    for (long long k = 0;; ++k) {
        long long val = second ? choose2(k) : choose2(k + 1);
        if (val >= N) break;
        LaurentPoly num = qpoch(is1, alpha, k) * qpoch(is2, beta, k);
        num = shift(num, val);
        LaurentPoly den = qpoch(1, 1, k) * qpoch(is12, alpha + beta + 1, k, 2);
        lhs = series_add(lhs, series_mul(series_from(num, N), series_inverse(series_from(den, N))));
    }

    TruncatedSeries common =
        series_mul(qpoch_inf(-1, 1, 1, N), series_inverse(qpoch_inf(is12, alpha + beta + 1, 2, N)));
    TruncatedSeries rhs = series_mul(series_mul(common, qpoch_inf(is1, alpha + 1, 2, N)),
                                     qpoch_inf(is2, beta + 1, 2, N));
    if (second)
        rhs = series_add(rhs, series_mul(series_mul(common, qpoch_inf(is1, alpha, 2, N)),
                                         qpoch_inf(is2, beta, 2, N)));
    if (lhs == rhs) return CheckResult::pass(id, pr, "identity");
    long long bad = -1;
    for (long long i = 0; i < N; ++i)
        if (lhs.coeff(i) != rhs.coeff(i)) { bad = i; break; }
    std::ostringstream os;
    os << "at " << params_to_string(pr) << ": series differ first at q^" << bad << " (lhs "
       << lhs.coeff(bad).get_str() << ", rhs " << rhs.coeff(bad).get_str() << ")";
    return CheckResult::fail(id, pr, "identity", os.str());
}

std::vector<RegEntry> identity_checks() {
    std::vector<RegEntry> es;

    es.push_back(RegEntry{
        "lemma-nkk", EntryKind::identity, "lemma",
        "sum_{k=0..n} (-1)^k q^{C(k,2)} [n-k,k] == (-1)^n ((n+1)|3) q^{n(n-1)/6}",
        {{"n"}},
        false,
        [](const Params& pr, double) {
            long long n = get(pr, "n");
            if (n < 0) return CheckResult::skip("lemma-nkk", pr, "lemma", "n must be >= 0");
            int s = jacobi(n + 1, 3) * ((n % 2 != 0) ? -1 : 1);
            LaurentPoly rhs;
            if (s != 0) {
                if ((n * (n - 1)) % 6 != 0)
                    throw std::logic_error("lemma-nkk: exponent n(n-1)/6 not integral");
                rhs = sign_monomial(s, n * (n - 1) / 6);
            }
            return exact_verdict("lemma-nkk", pr, "lemma", builders::lemma_nkk_lhs(n), rhs);
        }});

    for (int which = 1; which <= 4; ++which) {
        std::string id = "qser-" + std::to_string(which);
        std::string stmt;
        switch (which) {
            case 1:
                stmt = "sum_k (-1)^{n-k} q^{C(n-k,2)} [n,k][2k,k+d] (-q^{k+1};q)_{n-k} == "
                       "[even: q^{(n^2-d^2)/2} [n,(n-d)/2]_{q^2} | odd: 0]";
                break;
            case 2:
                stmt = "sum_k (-1)^{n-k} q^{C(n-k,2)} [n,k][2k,k+d] (-q^k;q)_{n-k} == "
                       "[even: q^{(n^2-d^2)/2} [n,(n-d)/2]_{q^2} | odd: q^{(n^2-d^2-1)/2}(q^n-1)[n-1,(n-d-1)/2]_{q^2}]";
                break;
            case 3:
                stmt = "sum_k (-q)^{n-k} [n,k][2k,k+d] (-q^{k+1};q)_{n-k} == "
                       "[even: [n,(n-d)/2]_{q^2} | odd: (1-q^{2n})[n-1,(n-d-1)/2]_{q^2}]";
                break;
            default:
                stmt = "sum_k (-q)^{n-k} [n,k][2k,k+d] (-q^k;q)_{n-k} == "
                       "[even: [n,(n-d)/2]_{q^2} | odd: (1-q^n)[n-1,(n-d-1)/2]_{q^2}]";
                break;
        }
        es.push_back(RegEntry{id, EntryKind::identity, "theorem", stmt, {{"n"}, {"d"}}, false,
                              [which, id](const Params& pr, double) { return qser_check(which, id, pr); }});
    }

    es.push_back(RegEntry{
        "qfib-explicit", EntryKind::identity, "identity",
        "F_n(t) from the recurrence == sum_k q^{k^2} [n-k-1,k] t^k",
        {{"n"}},
        false,
        [](const Params& pr, double) {
            long long n = get(pr, "n");
            if (n < 0) return CheckResult::skip("qfib-explicit", pr, "identity", "n must be >= 0");
            BivariatePoly lhs = qfib(n);
            std::vector<LaurentPoly> tc;
            for (long long k = 0; n - k - 1 >= k; ++k)
                tc.push_back(shift(qbinom(n - k - 1, k), k * k));
            BivariatePoly rhs = BivariatePoly::from_tcoeffs(std::move(tc));
            if (lhs == rhs) return CheckResult::pass("qfib-explicit", pr, "identity");
            return CheckResult::fail("qfib-explicit", pr, "identity",
                                     "at " + params_to_string(pr) + ": recurrence gives " +
                                         to_string(lhs) + ", explicit sum gives " + to_string(rhs));
        }});

    es.push_back(RegEntry{
        "andrews", EntryKind::identity, "identity",
        "sum_k (a;q)_k (b;q)_k q^{C(k+1,2)} / ((q;q)_k (abq;q^2)_k) == "
        "(-q;q)_inf (aq;q^2)_inf (bq;q^2)_inf / (abq;q^2)_inf, a = s1 q^alpha, b = s2 q^beta",
        {{"s1"}, {"alpha"}, {"s2"}, {"beta"}, {"N", true, 60}},
        false,
        [](const Params& pr, double) { return andrews_check(false, "andrews", pr); }});

    es.push_back(RegEntry{
        "andrews-2", EntryKind::identity, "identity",
        "sum_k (a;q)_k (b;q)_k q^{C(k,2)} / ((q;q)_k (abq;q^2)_k) == "
        "(-q;q)_inf ((aq;q^2)_inf (bq;q^2)_inf + (a;q^2)_inf (b;q^2)_inf) / (abq;q^2)_inf",
        {{"s1"}, {"alpha"}, {"s2"}, {"beta"}, {"N", true, 60}},
        false,
        [](const Params& pr, double) { return andrews_check(true, "andrews-2", pr); }});

    es.push_back(RegEntry{
        "greene-krammer", EntryKind::identity, "theorem",
        "1 + 2 sum_{k=1}^{n-1} (-1)^k q^{-C(k,2)} [2k-1,k] at q=e^{2 pi i m/n} == "
        "[(m|5) sqrt(5) if 5|n, else (n|5)]",
        {{"n"}, {"m"}},
        true,
        [](const Params& pr, double tol) {
            long long n = get(pr, "n"), m = get(pr, "m");
            if (n < 1) return CheckResult::skip("greene-krammer", pr, "theorem", "n must be >= 1");
            if (!coprime(m, n))
                return CheckResult::skip("greene-krammer", pr, "theorem", "gcd(m, n) must be 1");
            std::complex<double> expected =
                (n % 5 == 0) ? std::complex<double>(jacobi(m, 5) * std::sqrt(5.0), 0.0)
                             : std::complex<double>(jacobi(n, 5), 0.0);
            return numeric_verdict("greene-krammer", pr, "theorem", builders::greene_lhs(n), n, m,
                                   expected, tol);
        }});

    es.push_back(RegEntry{
        "dual-3n", EntryKind::identity, "theorem",
        "sum_{k<n} q^{2k+1} [2k,k] at q=e^{2 pi i m/n} == [(m|3) i sqrt(3) if 3|n, else (n|3)]",
        {{"n"}, {"m"}},
        true,
        [](const Params& pr, double tol) {
            long long n = get(pr, "n"), m = get(pr, "m");
            if (n < 1) return CheckResult::skip("dual-3n", pr, "theorem", "n must be >= 1");
            if (!coprime(m, n)) return CheckResult::skip("dual-3n", pr, "theorem", "gcd(m, n) must be 1");
            std::complex<double> expected =
                (n % 3 == 0) ? std::complex<double>(0.0, jacobi(m, 3) * std::sqrt(3.0))
                             : std::complex<double>(jacobi(n, 3), 0.0);
            return numeric_verdict("dual-3n", pr, "theorem", builders::sum_central_q2k1(n), n, m,
                                   expected, tol);
        }});

    es.push_back(RegEntry{
        "pimod5", EntryKind::identity, "theorem",
        "sum_{k<n} (-1)^k w^{-C(k+1,2)} [2k,k]_w at w=e^{2 pi i m/n}, by residue of n mod 5: "
        "0 | w^{-floor(n/5)} | -w^{-floor(3n/5)} | -w^{-floor(2n/5)} | w^{-floor(4n/5)}",
        {{"n"}, {"m"}},
        true,
        [](const Params& pr, double tol) {
            long long n = get(pr, "n"), m = get(pr, "m");
            if (n < 1) return CheckResult::skip("pimod5", pr, "theorem", "n must be >= 1");
            if (!coprime(m, n)) return CheckResult::skip("pimod5", pr, "theorem", "gcd(m, n) must be 1");
            int s = 0;
            long long e = 0;
            switch (n % 5) {
                case 0: s = 0; break;
                case 1: s = 1; e = n / 5; break;
                case 2: s = -1; e = (3 * n) / 5; break;
                case 3: s = -1; e = (2 * n) / 5; break;
                default: s = 1; e = (4 * n) / 5; break;
            }
            std::complex<double> expected(0.0, 0.0);
            if (s != 0) {
                long long a = floor_mod(-e * floor_mod(m, n), n);
                expected = static_cast<double>(s) *
                           std::polar(1.0, kTau * static_cast<double>(a) / static_cast<double>(n));
            }
            return numeric_verdict("pimod5", pr, "theorem", builders::sum_central_alt_tri(n), n, m,
                                   expected, tol);
        }});

    es.push_back(RegEntry{
        "lem2.1-transform", EntryKind::identity, "lemma",
        "q^{-C(k+1,2)} [2k,k] == (-1)^k q^{k^2} [n-k-1,k]  (mod Phi_n), 0 <= k < n",
        {{"n"}, {"k"}},
        false,
        [](const Params& pr, double) {
            long long n = get(pr, "n"), k = get(pr, "k");
            if (n < 1) return CheckResult::skip("lem2.1-transform", pr, "lemma", "n must be >= 1");
            if (k < 0 || k >= n)
                return CheckResult::skip("lem2.1-transform", pr, "lemma", "k must be in [0, n-1]");
            LaurentPoly lhs = shift(qbinom(2 * k, k), -choose2(k + 1));
            LaurentPoly rhs = shift(qbinom(n - k - 1, k), k * k);
            if (k % 2 != 0) rhs = -rhs;
            return phi_verdict("lem2.1-transform", pr, "lemma", lhs, rhs, n);
        }});

    es.push_back(RegEntry{
        "qlucas", EntryKind::identity, "lemma",
        "[m,k] == C(m div d, k div d) * [m mod d, k mod d]  (mod Phi_d)",
        {{"d"}, {"m"}, {"k"}},
        false,
        [](const Params& pr, double) {
            long long d = get(pr, "d"), m = get(pr, "m"), k = get(pr, "k");
            if (d < 1) return CheckResult::skip("qlucas", pr, "lemma", "d must be >= 1");
            if (m < 0 || k < 0) return CheckResult::skip("qlucas", pr, "lemma", "m and k must be >= 0");
            LaurentPoly lhs = qbinom(m, k);
            Int c = binom(static_cast<unsigned long>(m / d), static_cast<unsigned long>(k / d));
            LaurentPoly rhs = LaurentPoly(c) * qbinom(m % d, k % d);
            return phi_verdict("qlucas", pr, "lemma", lhs, rhs, d);
        }});

    return es;
}

// ---------------------------------------------------------------------------
// congruence registry

// -floor(n^4/5) computed in bignums, then range-checked into the shift.
long long mod5_rhs_exponent(long long n) {
    Int n4 = int_pow(ll_to_int(n), 4);
    return to_ll(n4 / 5);
}

CheckResult mod5_check(bool inverted, const std::string& id, const Params& pr) {
    long long n = get(pr, "n");
    if (n < 0) return CheckResult::skip(id, pr, "theorem", "n must be >= 0");
    LaurentPoly lhs =
        inverted ? builders::sum_central_alt_tri0(n) : builders::sum_central_alt_tri(n);
    int s = (n == 0) ? 0 : static_cast<int>(jacobi(n, 5));
    LaurentPoly rhs;
    if (s != 0) {
        long long e = mod5_rhs_exponent(n);
        rhs = sign_monomial(s, inverted ? e : -e);
    }
    if (n == 0) return exact_verdict(id, pr, "theorem", lhs, rhs); // Phi_0 degenerate: exact
    return phi_verdict(id, pr, "theorem", lhs, rhs, n);
}

std::vector<RegEntry> congruence_checks() {
    std::vector<RegEntry> es;

    es.push_back(RegEntry{
        "mod5", EntryKind::congruence, "theorem",
        "sum_{k<n} (-1)^k q^{-C(k+1,2)} [2k,k] == (n|5) q^{-floor(n^4/5)}  (mod Phi_n)",
        {{"n"}},
        false,
        [](const Params& pr, double) { return mod5_check(false, "mod5", pr); }});

    es.push_back(RegEntry{
        "mod5-inv", EntryKind::congruence, "theorem",
        "sum_{k<n} (-1)^k q^{-C(k,2)} [2k,k] == (n|5) q^{floor(n^4/5)}  (mod Phi_n)",
        {{"n"}},
        false,
        [](const Params& pr, double) { return mod5_check(true, "mod5-inv", pr); }});

    es.push_back(RegEntry{
        "tauraso-kd", EntryKind::congruence, "theorem",
        "sum_{k<n} q^k [2k,k+d] == ((n-|d|)|3) q^{3r(r+1)/2 + |d|(2r+1)}, r = floor(2(n-|d|)/3)  "
        "(mod Phi_n)",
        {{"n"}, {"d"}},
        false,
        [](const Params& pr, double) {
            long long n = get(pr, "n"), d = get(pr, "d");
            if (n < 1) return CheckResult::skip("tauraso-kd", pr, "theorem", "n must be >= 1");
            long long ad = d < 0 ? -d : d;
            if (ad >= n) return CheckResult::skip("tauraso-kd", pr, "theorem", "|d| must be < n");
            long long r = (2 * (n - ad)) / 3;
            LaurentPoly rhs = sign_monomial(jacobi(n - ad, 3), 3 * r * (r + 1) / 2 + ad * (2 * r + 1));
            return phi_verdict("tauraso-kd", pr, "theorem", builders::sum_central_qk(n, d), rhs, n);
        }});

    es.push_back(RegEntry{
        "mn-to3", EntryKind::congruence, "theorem",
        "sum_{k<mn} q^k [2k,k] == (sum_{j<m} C(2j,j)) * sum_{k<n} q^k [2k,k]  (mod Phi_n)",
        {{"m"}, {"n"}},
        false,
        [](const Params& pr, double) {
            long long m = get(pr, "m"), n = get(pr, "n");
            if (m < 1 || n < 1)
                return CheckResult::skip("mn-to3", pr, "theorem", "m and n must be >= 1");
            Int scalar(0);
            ExactCentralStream cs;
            for (long long j = 0; j < m; ++j) { scalar += cs.value(); cs.advance(); }
            LaurentPoly lhs = builders::sum_central_qk(checked_mul(m, n));
            LaurentPoly rhs = LaurentPoly(scalar) * builders::sum_central_qk(n);
            return phi_verdict("mn-to3", pr, "theorem", lhs, rhs, n);
        }});

    es.push_back(RegEntry{
        "mn-to5", EntryKind::congruence, "theorem",
        "sum_{k<mn} (-1)^k q^{-C(k+1,2)} [2k,k] == (sum_{j<m} (-1)^j C(2j,j)) * "
        "sum_{k<n} (-1)^k q^{-C(k+1,2)} [2k,k]  (mod Phi_n)",
        {{"m"}, {"n"}},
        false,
        [](const Params& pr, double) {
            long long m = get(pr, "m"), n = get(pr, "n");
            if (m < 1 || n < 1)
                return CheckResult::skip("mn-to5", pr, "theorem", "m and n must be >= 1");
            Int scalar(0);
            ExactCentralStream cs;
            for (long long j = 0; j < m; ++j) {
                if (j % 2 != 0)
                    scalar -= cs.value();
                else
                    scalar += cs.value();
                cs.advance();
            }
            LaurentPoly lhs = builders::sum_central_alt_tri(checked_mul(m, n));
            LaurentPoly rhs = LaurentPoly(scalar) * builders::sum_central_alt_tri(n);
            return phi_verdict("mn-to5", pr, "theorem", lhs, rhs, n);
        }});

    es.push_back(RegEntry{
        "phi3", EntryKind::congruence, "theorem",
        "sum_{k<3^a m} q^k [2k,k] == 0  (mod (1-q^{3^a})/(1-q))",
        {{"a"}, {"m"}},
        false,
        [](const Params& pr, double) {
            long long a = get(pr, "a"), m = get(pr, "m");
            if (a < 1 || m < 1) return CheckResult::skip("phi3", pr, "theorem", "a and m must be >= 1");
            long long k_end = checked_mul(ll_pow(3, static_cast<unsigned>(a)), m);
            return modulus_verdict("phi3", pr, "theorem", builders::sum_central_qk(k_end),
                                   LaurentPoly(), geom_modulus(3, a),
                                   "(1-q^{3^" + std::to_string(a) + "})/(1-q)");
        }});

    es.push_back(RegEntry{
        "phi5", EntryKind::congruence, "theorem",
        "sum_{k<5^a m} (-1)^k q^{-C(k+1,2)} [2k,k] == 0  (mod (1-q^{5^a})/(1-q))",
        {{"a"}, {"m"}},
        false,
        [](const Params& pr, double) {
            long long a = get(pr, "a"), m = get(pr, "m");
            if (a < 1 || m < 1) return CheckResult::skip("phi5", pr, "theorem", "a and m must be >= 1");
            long long k_end = checked_mul(ll_pow(5, static_cast<unsigned>(a)), m);
            return modulus_verdict("phi5", pr, "theorem", builders::sum_central_alt_tri(k_end),
                                   LaurentPoly(), geom_modulus(5, a),
                                   "(1-q^{5^" + std::to_string(a) + "})/(1-q)");
        }});

    es.push_back(RegEntry{
        "2kbrack", EntryKind::congruence, "theorem",
        "3 | n  =>  sum_{k<n} q^k [2k,k] == 0  (mod Phi_n)",
        {{"n"}},
        false,
        [](const Params& pr, double) {
            long long n = get(pr, "n");
            if (n < 1) return CheckResult::skip("2kbrack", pr, "theorem", "n must be >= 1");
            if (n % 3 != 0) return CheckResult::skip("2kbrack", pr, "theorem", "requires 3 | n");
            return phi_verdict("2kbrack", pr, "theorem", builders::sum_central_qk(n), LaurentPoly(), n);
        }});

    es.push_back(RegEntry{
        "cor36", EntryKind::congruence, "corollary",
        "gcd(n,3) = 1  =>  sum_{k<n} q^{2k+1} [2k,k] == (n|3)  (mod Phi_n)",
        {{"n"}},
        false,
        [](const Params& pr, double) {
            long long n = get(pr, "n");
            if (n < 1) return CheckResult::skip("cor36", pr, "corollary", "n must be >= 1");
            if (n % 3 == 0) return CheckResult::skip("cor36", pr, "corollary", "requires gcd(n, 3) = 1");
            LaurentPoly rhs = sign_monomial(jacobi(n, 3), 0);
            return phi_verdict("cor36", pr, "corollary", builders::sum_central_q2k1(n), rhs, n);
        }});

    for (const char* id : {"2k-first", "2k-second", "2k-third", "2k-fourth", "2k-first-inv",
                           "2k-third-inv"}) {
        std::string stmt;
        std::string sid = id;
        if (sid == "2k-first")
            stmt = "sum_{k<n} q^k [2k,k+d] (-q^{k+1};q)_{n-k-1} == [even: 0 | odd: "
                   "(-1)^{(n+d-1)/2} q^{(d(2n-3d)-(n+1)^2)/4}]  (mod Phi_n)";
        else if (sid == "2k-second")
            stmt = "sum_{k<n} q^k [2k,k+d] (-q^k;q)_{n-k-1} == [even: (-1)^{(n+d)/2} "
                   "q^{(d(2n-3d)-n^2+2d)/4} (1-q^{n-d})/(1+q) | odd: as 2k-first]  (mod Phi_n)";
        else if (sid == "2k-third")
            stmt = "sum_{k<n} q^{-k(k+3)/2} [2k,k+d] (-q^{k+1};q)_{n-k-1} == [even: "
                   "(-1)^{(n+d-2)/2} q^{(5-(n-d+1)^2)/4} (1-q^{n-d}) | odd: (-1)^{(n+d-1)/2} "
                   "q^{(5-(n-d)^2)/4}]  (mod Phi_n)";
        else if (sid == "2k-fourth")
            stmt = "sum_{k<n} q^{-k(k+3)/2} [2k,k+d] (-q^k;q)_{n-k-1} == [even: (-1)^{(n+d-2)/2} "
                   "q^{(9-(n-d+1)^2)/4} (1-q^{n-d})/(1+q) | odd: as 2k-third]  (mod Phi_n)";
        else if (sid == "2k-first-inv")
            stmt = "sum_{k<n} q^{-C(k+1,2)} [2k,k+d] (-q^{k+1};q)_{n-k-1} == [even: 0 | odd: "
                   "(-1)^{(n+d-1)/2} q^{(1-(n-d)^2)/4}]  (mod Phi_n)";
        else
            stmt = "sum_{k<n} q^{2k} [2k,k+d] (-q^{k+1};q)_{n-k-1} == [even: (-1)^{(n+d)/2} "
                   "q^{(d(2n-3d)-n^2+2d-4)/4} (1-q^{n-d}) | odd: (-1)^{(n+d-1)/2} "
                   "q^{(d(2n-3d)-(n+1)^2-4)/4}]  (mod Phi_n)";
        es.push_back(RegEntry{sid, EntryKind::congruence, "corollary", stmt, {{"n"}, {"d"}}, false,
                              [sid](const Params& pr, double) { return cor_check(sid, pr); }});
    }

    es.push_back(RegEntry{
        "qfib-remark", EntryKind::congruence, "theorem",
        "sum_{k<n} q^{-C(k-d,2)} [2k,k+d] t^k == t^d F_{2(n-d)}(-t q^{2d+1})  (mod Phi_n), "
        "coefficientwise in t",
        {{"n"}, {"d"}},
        false,
        [](const Params& pr, double) {
            long long n = get(pr, "n"), d = get(pr, "d");
            if (n < 1) return CheckResult::skip("qfib-remark", pr, "theorem", "n must be >= 1");
            if (d < 0 || d >= n)
                return CheckResult::skip("qfib-remark", pr, "theorem", "requires n > d >= 0");
            std::vector<LaurentPoly> tc(static_cast<std::size_t>(n));
            CentralStream cen(d);
            for (long long k = d; k < n; ++k) {
                while (cen.k() < k) cen.advance();
                tc[static_cast<std::size_t>(k)] = shift(cen.value(), -choose2(k - d));
            }
            BivariatePoly lhs = BivariatePoly::from_tcoeffs(std::move(tc));
            BivariatePoly rhs = qfib(2 * (n - d)).scaled_t(-1, 2 * d + 1).shifted_t(d);
            long long tmax = std::max(lhs.t_degree(), rhs.t_degree());
            for (long long j = 0; j <= tmax; ++j) {
                if (!congruent_mod_phi(lhs.t_coeff(j), rhs.t_coeff(j), n)) {
                    LaurentPoly diff =
                        reduce_mod_phi(lhs.t_coeff(j), n) - reduce_mod_phi(rhs.t_coeff(j), n);
                    return CheckResult::fail(
                        "qfib-remark", pr, "theorem",
                        "at " + params_to_string(pr) + ": t^" + std::to_string(j) +
                            " coefficients differ mod Phi_n, leading terms " + to_string(diff, 5));
                }
            }
            return CheckResult::pass("qfib-remark", pr, "theorem");
        }});

    es.push_back(RegEntry{
        "conj37-q", EntryKind::congruence, "conjecture",
        "sum_{k<3^a m} q^k [2k,k] == 0  (mod prod_{j<=a} Phi_{3^j}^2)",
        {{"a"}, {"m"}},
        false,
        [](const Params& pr, double) {
            long long a = get(pr, "a"), m = get(pr, "m");
            if (a < 1 || m < 1)
                return CheckResult::skip("conj37-q", pr, "conjecture", "a and m must be >= 1");
            long long k_end = checked_mul(ll_pow(3, static_cast<unsigned>(a)), m);
            LaurentPoly modulus = pow(geom_modulus(3, a), 2);
            return modulus_verdict("conj37-q", pr, "conjecture", builders::sum_central_qk(k_end),
                                   LaurentPoly(), modulus,
                                   "((1-q^{3^" + std::to_string(a) + "})/(1-q))^2", true);
        }});

    es.push_back(RegEntry{
        "conj38-a", EntryKind::congruence, "conjecture",
        "sum_{k<p^a} q^k [2k,k] == (p^a|3) q^{floor(p^a/2 - (p^a|3) p^a/6) + floor(p^a/3) p^a}  "
        "(mod Phi_{p^a}^2)",
        {{"p"}, {"a"}},
        false,
        [](const Params& pr, double) {
            long long p = get(pr, "p"), a = get(pr, "a");
            if (!is_prime(p)) return CheckResult::skip("conj38-a", pr, "conjecture", "p must be prime");
            if (a < 1) return CheckResult::skip("conj38-a", pr, "conjecture", "a must be >= 1");
            long long pa = ll_pow(p, static_cast<unsigned>(a));
            int s = jacobi(pa, 3);
            LaurentPoly rhs;
            if (s != 0) {
                long long e = floor_div(pa * (3 - s), 6) + (pa / 3) * pa;
                rhs = sign_monomial(s, e);
            }
            LaurentPoly lhs = builders::sum_central_qk(pa);
            LaurentPoly modulus = pow(cyclotomic(pa), 2);
            return modulus_verdict("conj38-a", pr, "conjecture", lhs, rhs, modulus,
                                   "Phi_" + std::to_string(pa) + "^2", true);
        }});

    es.push_back(RegEntry{
        "conj38-b", EntryKind::congruence, "conjecture",
        "p != 3: sum_{k<p^a} q^{2k+1} [2k,k] == (p^a|3) q^{(floor((p^a+1)/3) + (p^a|3)) p^a}  "
        "(mod Phi_{p^a}^2)",
        {{"p"}, {"a"}},
        false,
        [](const Params& pr, double) {
            long long p = get(pr, "p"), a = get(pr, "a");
            if (!is_prime(p)) return CheckResult::skip("conj38-b", pr, "conjecture", "p must be prime");
            if (p == 3) return CheckResult::skip("conj38-b", pr, "conjecture", "requires p != 3");
            if (a < 1) return CheckResult::skip("conj38-b", pr, "conjecture", "a must be >= 1");
            long long pa = ll_pow(p, static_cast<unsigned>(a));
            int s = jacobi(pa, 3);
            LaurentPoly rhs = sign_monomial(s, ((pa + 1) / 3 + s) * pa);
            LaurentPoly lhs = builders::sum_central_q2k1(pa);
            LaurentPoly modulus = pow(cyclotomic(pa), 2);
            return modulus_verdict("conj38-b", pr, "conjecture", lhs, rhs, modulus,
                                   "Phi_" + std::to_string(pa) + "^2", true);
        }});

    return es;
}

// ---------------------------------------------------------------------------
// unified registry

std::vector<RegEntry> build_all_checks() {
    std::vector<RegEntry> es = identity_checks();
    std::vector<RegEntry> cs = congruence_checks();
    std::vector<RegEntry> is = integer_checks();
    es.insert(es.end(), std::make_move_iterator(cs.begin()), std::make_move_iterator(cs.end()));
    es.insert(es.end(), std::make_move_iterator(is.begin()), std::make_move_iterator(is.end()));
    return es;
}

Params fill_defaults(const RegEntry& e, const Params& given) {
    Params full;
    for (const ParamSpec& ps : e.sig) {
        auto it = given.find(ps.name);
        if (it != given.end()) {
            full[ps.name] = it->second;
        } else if (ps.has_default) {
            full[ps.name] = ps.default_value;
        } else {
            throw std::invalid_argument("check '" + e.id + "': missing parameter '" + ps.name + "'");
        }
    }
    for (const auto& [k, v] : given)
        if (!full.count(k))
            throw std::invalid_argument("check '" + e.id + "': unknown parameter '" + k + "'");
    return full;
}

} // namespace

const std::vector<RegEntry>& all_checks() {
    static const std::vector<RegEntry> checks = build_all_checks();
    return checks;
}

const RegEntry* find_check(const std::string& id) {
    for (const RegEntry& e : all_checks())
        if (e.id == id) return &e;
    return nullptr;
}

CheckResult run_check(const std::string& id, const Params& params, std::optional<double> tol) {
    const RegEntry* e = find_check(id);
    if (!e) throw std::invalid_argument("unknown check id: " + id);
    Params full = fill_defaults(*e, params);
    CheckResult r = [&] {
        try {
            return e->run(full, tol.value_or(kDefaultTol));
        } catch (const std::exception& ex) {
            return CheckResult::fail(id, full, e->tag, std::string("error: ") + ex.what());
        }
    }();
    if (const char* corrupt = std::getenv("QCONG_SELFTEST_FAIL");
        corrupt && id == corrupt && r.status == CheckStatus::pass) {
        r = CheckResult::fail(id, full, e->tag,
                              "self-test harness: verification re-run with corrupted RHS");
    }
    return r;
}

namespace {

CheckResult run_kind_checked(const std::string& id, const Params& params, std::optional<double> tol,
                             EntryKind kind) {
    const RegEntry* e = find_check(id);
    if (!e) throw std::invalid_argument("unknown check id: " + id);
    if (e->kind != kind)
        throw std::invalid_argument("check '" + id + "' is registered as " + to_string(e->kind) +
                                    ", not " + to_string(kind));
    return run_check(id, params, tol);
}

} // namespace

CheckResult verify_identity(const std::string& id, const Params& params, std::optional<double> tol) {
    return run_kind_checked(id, params, tol, EntryKind::identity);
}

CheckResult verify_congruence(const std::string& id, const Params& params, std::optional<double> tol) {
    return run_kind_checked(id, params, tol, EntryKind::congruence);
}

CheckResult verify_integer(const std::string& id, const Params& params) {
    return run_kind_checked(id, params, std::nullopt, EntryKind::integer);
}

std::vector<CheckResult> run_suite(std::vector<std::string> ids, const Ranges& ranges, int jobs,
                                   std::optional<double> tol) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    struct Point {
        const RegEntry* entry;
        Params params;
    };
    std::vector<Point> points;
    for (const std::string& id : ids) {
        const RegEntry* e = find_check(id);
        if (!e) throw std::invalid_argument("unknown check id: " + id);
        std::vector<std::vector<long long>> axes;
        bool empty_axis = false;
        for (const ParamSpec& ps : e->sig) {
            auto it = ranges.find(ps.name);
            if (it != ranges.end()) {
                std::vector<long long> vals = it->second;
                std::sort(vals.begin(), vals.end());
                vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
                if (vals.empty()) empty_axis = true;
                axes.push_back(std::move(vals));
            } else if (ps.has_default) {
                axes.push_back({ps.default_value});
            } else {
                throw std::invalid_argument("check '" + id + "': missing range for parameter '" +
                                            ps.name + "'");
            }
        }
        if (empty_axis) continue; // no points for this id
        std::vector<std::size_t> idx(axes.size(), 0);
        bool done = false;
        while (!done) {
            Params p;
            for (std::size_t i = 0; i < axes.size(); ++i) p[e->sig[i].name] = axes[i][idx[i]];
            points.push_back(Point{e, std::move(p)});
            // odometer increment, last axis fastest
            if (axes.empty()) break;
            std::size_t i = axes.size();
            while (i-- > 0) {
                if (++idx[i] < axes[i].size()) break;
                idx[i] = 0;
                if (i == 0) done = true;
            }
        }
    }

    std::vector<CheckResult> results(points.size());
    if (jobs < 1) jobs = 1;
    auto worker_body = [&](std::atomic<std::size_t>& next) {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= points.size()) break;
            results[i] = run_check(points[i].entry->id, points[i].params, tol);
        }
    };
    if (jobs == 1 || points.size() <= 1) {
        std::atomic<std::size_t> next{0};
        worker_body(next);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        int nw = std::min<long long>(jobs, static_cast<long long>(points.size()));
        pool.reserve(static_cast<std::size_t>(nw));
        for (int w = 0; w < nw; ++w) pool.emplace_back([&] { worker_body(next); });
        for (auto& t : pool) t.join();
    }
    return results;
}

} // namespace qcong
