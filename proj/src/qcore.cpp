#include "qcong/qcore.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace qcong {

namespace {

std::mutex qbinom_mutex;
std::map<long long, std::vector<LaurentPoly>> qbinom_rows;

const std::vector<LaurentPoly>& qbinom_row_locked(long long n) {
    auto it = qbinom_rows.find(n);
    if (it != qbinom_rows.end()) return it->second;
    long long lo = n;
    while (lo > 0 && !qbinom_rows.count(lo - 1)) --lo;
    if (lo == 0 && !qbinom_rows.count(0)) qbinom_rows[0] = {LaurentPoly(1)};
    for (long long m = lo == 0 ? 1 : lo; m <= n; ++m) {
        const auto& prev = qbinom_rows[m - 1];
        std::vector<LaurentPoly> row(static_cast<std::size_t>(m + 1));
        row[0] = LaurentPoly(1);
        row[static_cast<std::size_t>(m)] = LaurentPoly(1);
        for (long long k = 1; k < m; ++k)
            row[static_cast<std::size_t>(k)] =
                prev[static_cast<std::size_t>(k - 1)] + shift(prev[static_cast<std::size_t>(k)], k);
        qbinom_rows[m] = std::move(row);
    }
    return qbinom_rows[n];
}

std::mutex cyc_mutex;
std::map<long long, LaurentPoly> cyc_memo;

std::vector<long long> divisors_of(long long n) {
    std::vector<long long> d;
    for (long long i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i) d.push_back(n / i);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

LaurentPoly qbinom(long long n, long long k) {
    if (k < 0 || k > n) return LaurentPoly();
    std::lock_guard<std::mutex> lock(qbinom_mutex);
    return qbinom_row_locked(n)[static_cast<std::size_t>(k)];
}

LaurentPoly qpoch(int sign, long long j, long long n, long long step) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("qpoch: sign must be +-1");
    if (n < 0) throw std::invalid_argument("qpoch: n must be nonnegative");
    if (step < 1) throw std::invalid_argument("qpoch: step must be positive");
    LaurentPoly r(1);
    for (long long i = 0; i < n; ++i) {
        long long e = checked_add(j, checked_mul(i, step));
        r = r - shift(LaurentPoly(sign), e) * r;
    }
    return r;
}

LaurentPoly cyclotomic(long long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be >= 1");
    std::lock_guard<std::mutex> lock(cyc_mutex);
    auto it = cyc_memo.find(n);
    if (it != cyc_memo.end()) return it->second;
    for (long long m : divisors_of(n)) {
        if (cyc_memo.count(m)) continue;
        // q^m - 1
        std::vector<Int> c(static_cast<std::size_t>(m + 1));
        c[0] = -1;
        c[static_cast<std::size_t>(m)] = 1;
        LaurentPoly num = LaurentPoly::from_coeffs(0, std::move(c));
        for (long long d : divisors_of(m))
            if (d != m) num = divexact(num, cyc_memo.at(d));
        cyc_memo[m] = std::move(num);
    }
    return cyc_memo.at(n);
}

LaurentPoly geom_modulus(long long p, long long a) {
    if (!is_prime(p)) throw std::invalid_argument("geom_modulus: p must be prime");
    if (a < 1) throw std::invalid_argument("geom_modulus: a must be >= 1");
    long long pa = ll_pow(p, static_cast<unsigned>(a));
    if (pa > 2'000'000) throw std::invalid_argument("geom_modulus: p^a too large");
    LaurentPoly ones = LaurentPoly::from_coeffs(0, std::vector<Int>(static_cast<std::size_t>(pa), Int(1)));
    LaurentPoly prod(1);
    for (long long j = 1; j <= a; ++j) prod = prod * cyclotomic(ll_pow(p, static_cast<unsigned>(j)));
    if (prod != ones) throw std::logic_error("geom_modulus: cyclotomic product check failed");
    return ones;
}

SymbolValue jacobi(long long n, long long m) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("jacobi: m must be odd and >= 3");
    long long a = floor_mod(n, m);
    int r = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long m8 = m % 8;
            if (m8 == 3 || m8 == 5) r = -r;
        }
        std::swap(a, m);
        if (a % 4 == 3 && m % 4 == 3) r = -r;
        a %= m;
    }
    return SymbolValue(m == 1 ? r : 0);
}

BivariatePoly qfib(long long n) {
    if (n < 0) throw std::invalid_argument("qfib: n must be nonnegative");
    BivariatePoly f0;                                  // F_0 = 0
    BivariatePoly f1 = BivariatePoly::constant(LaurentPoly(1)); // F_1 = 1
    if (n == 0) return f0;
    if (n == 1) return f1;
    for (long long m = 2; m <= n; ++m) {
        BivariatePoly next =
            f1 + f0.times_poly(LaurentPoly::monomial(Int(1), m - 2)).shifted_t(1);
        f0 = std::move(f1);
        f1 = std::move(next);
    }
    return f1;
}

Int central_binom(long long k) {
    if (k < 0) throw std::invalid_argument("central_binom: k must be nonnegative");
    Int c(1);
    for (long long i = 0; i < k; ++i) {
        mpz_mul_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(2 * (2 * i + 1)));
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i + 1));
    }
    return c;
}

Int binom(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

} // namespace qcong
