#include "qcong/arith.hpp"

#include "qcong/qcore.hpp"

#include <cstdlib>
#include <sstream>

namespace qcong {

namespace {

long long remove_p(long long& x, long long p) {
    long long e = 0;
    while (x % p == 0) {
        x /= p;
        ++e;
    }
    return e;
}

Int inv_mod(const Int& x, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::logic_error("inv_mod: not invertible");
    return r;
}

} // namespace

BinomTracker::BinomTracker(long long p, int t, long long d) : d_(d < 0 ? -d : d), k_(d_) {
    if (!is_prime(p)) throw std::invalid_argument("BinomTracker: p must be prime");
    if (t < 1) throw std::invalid_argument("BinomTracker: t must be >= 1");
    pt_ = int_pow(ll_to_int(p), static_cast<unsigned long>(t));
    vr_.p = p;
    vr_.t = t;
    vr_.zero = false;
    vr_.v = 0;
    vr_.u = 1;
}

void BinomTracker::mul_factor(long long x) {
    vr_.v += remove_p(x, vr_.p);
    vr_.u = vr_.u * ll_to_int(x) % pt_;
}

void BinomTracker::div_factor(long long x) {
    vr_.v -= remove_p(x, vr_.p);
    vr_.u = vr_.u * inv_mod(ll_to_int(x) % pt_, pt_) % pt_;
}

void BinomTracker::advance() {
    long long k = k_;
    mul_factor(2 * k + 1);
    mul_factor(2 * k + 2);
    div_factor(k + 1 + d_);
    div_factor(k + 1 - d_);
    ++k_;
    if (vr_.v < 0) throw std::logic_error("BinomTracker: negative valuation");
}

Int BinomTracker::residue(int T) const {
    if (T > vr_.t) throw std::logic_error("BinomTracker: requested precision exceeds tracked precision");
    return valued_residue_mod(vr_, T);
}

Int valued_residue_mod(const ValuedResidue& vr, int T) {
    if (T < 1) throw std::invalid_argument("valued_residue_mod: T must be >= 1");
    if (vr.zero || vr.v >= T) return Int(0);
    Int pT = int_pow(ll_to_int(vr.p), static_cast<unsigned long>(T));
    Int r = vr.u * int_pow(ll_to_int(vr.p), static_cast<unsigned long>(vr.v)) % pT;
    return r;
}

void ExactCentralStream::advance() {
    mpz_mul_ui(c_.get_mpz_t(), c_.get_mpz_t(), static_cast<unsigned long>(2 * (2 * k_ + 1)));
    mpz_divexact_ui(c_.get_mpz_t(), c_.get_mpz_t(), static_cast<unsigned long>(k_ + 1));
    ++k_;
}

// ---------------------------------------------------------------------------
// integer registry

namespace {

long long get(const Params& p, const std::string& name) { return p.at(name); }

std::optional<std::string> need_prime(long long p) {
    if (!is_prime(p)) return "p=" + std::to_string(p) + " is not prime";
    return std::nullopt;
}

// Sum over k < k_end of sign(k) * C(2k, k+d) * weight_base^k mod p^T.
// alt_sign = -1 inserts an extra (-1)^k; a negative weight base contributes
// its own (-1)^k, with the magnitude kept as a modular unit.
Int tracked_central_sum(long long p, int T, long long k_end, long long d = 0,
                        long long alt_sign = 1, long long weight_base = 1) {
    Int modulus = int_pow(ll_to_int(p), static_cast<unsigned long>(T));
    BinomTracker tr(p, T, d);
    long long ad = d < 0 ? -d : d;
    bool weight_neg = weight_base < 0;
    Int wb = ll_to_int(weight_neg ? -weight_base : weight_base) % modulus;
    Int w(1), total(0);
    for (long long k = 0; k < ad && k < k_end; ++k) w = w * wb % modulus;
    for (long long k = ad; k < k_end; ++k) {
        Int term = tr.residue(T) * w % modulus;
        bool negate = (alt_sign == -1 && (k % 2) != 0);
        if (weight_neg && (k % 2) != 0) negate = !negate;
        if (negate)
            total -= term;
        else
            total += term;
        total %= modulus;
        w = w * wb % modulus;
        tr.advance();
    }
    if (sgn(total) < 0) total += modulus;
    return total;
}

std::string residue_witness(const Int& lhs, const Int& rhs, const Int& modulus) {
    std::ostringstream os;
    os << "lhs = " << lhs.get_str() << ", rhs = " << rhs.get_str() << " (mod " << modulus.get_str()
       << ")";
    return os.str();
}

CheckResult residue_verdict(const std::string& id, Params params, const std::string& tag,
                            const Int& lhs, const Int& rhs, const Int& modulus,
                            bool conjectural = false) {
    Int a = lhs % modulus;
    if (sgn(a) < 0) a += modulus;
    Int b = rhs % modulus;
    if (sgn(b) < 0) b += modulus;
    if (a == b)
        return CheckResult::pass(id, std::move(params), tag,
                                 conjectural ? std::optional<std::string>("conjectural") : std::nullopt);
    std::string w = residue_witness(a, b, modulus);
    if (conjectural) w = "conjectural; " + w;
    return CheckResult::fail(id, std::move(params), tag, w);
}

// st-3 case table: p^a vs |d| parity / mod 4.
int st3_expected(long long pa, long long ad) {
    if (floor_mod(pa, 2) == floor_mod(ad, 2)) return 0;
    if (floor_mod(pa, 4) == floor_mod(ad + 1, 4)) return 1;
    if (floor_mod(pa, 4) == floor_mod(ad - 1, 4)) return -1;
    throw std::logic_error("st-3 case table fell through");
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> f;
    if (n < 0) n = -n;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            f.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) f.push_back(n);
    return f;
}

// Exact-bigint sum S = sum_{k=0}^{k_last} C(2k,k) * base^k mod M.
Int exact_weighted_central_sum(long long k_last, long long base, const Int& M) {
    ExactCentralStream cs;
    Int w(1), total(0);
    Int b = ll_to_int(base) % M;
    if (sgn(b) < 0) b += M;
    for (long long k = 0; k <= k_last; ++k) {
        total = (total + cs.value() % M * w) % M;
        w = w * b % M;
        cs.advance();
    }
    return total;
}

CheckResult conj55_point(long long m) {
    Params params{{"m", m}};
    const std::string tag = "conjecture";
    if (m < 1) return CheckResult::skip("conj55", std::move(params), tag, "m must be >= 1");
    if (m == 1)
        return CheckResult::skip("conj55", std::move(params), tag,
                                 "m=1 excluded (4m-1 side degenerate, cf. the m != 1 proviso)");
    std::ostringstream note;
    bool ok = true;
    std::ostringstream bad;

    long long pm = 4 * m - 1;
    Int Mm = ll_to_int(pm) * ll_to_int(pm);
    Int sm = exact_weighted_central_sum(4 * m - 2, m, Mm);
    bool crit_minus = (sm == ll_to_int(pm));
    if (m == 30) {
        note << "4m-1 side excluded at m=30; residue of the sum mod (4m-1)^2 is " << sm.get_str()
             << " (4m-1 = " << pm << ", composite); ";
    } else if (crit_minus && !is_prime(pm)) {
        ok = false;
        bad << "criterion holds mod (4m-1)^2 but 4m-1 = " << pm << " is composite; ";
    }

    long long pp = 4 * m + 1;
    Int Mp = ll_to_int(pp) * ll_to_int(pp);
    Int sp = exact_weighted_central_sum(4 * m, -m, Mp);
    bool crit_plus = (sp == ll_to_int(pp));
    if (crit_plus && !is_prime(pp)) {
        ok = false;
        bad << "criterion holds mod (4m+1)^2 but 4m+1 = " << pp << " is composite; ";
    }

    note << "criterion(4m-1)=" << (crit_minus ? "yes" : "no") << " prime(4m-1)="
         << (is_prime(pm) ? "yes" : "no") << ", criterion(4m+1)=" << (crit_plus ? "yes" : "no")
         << " prime(4m+1)=" << (is_prime(pp) ? "yes" : "no");
    if (!ok)
        return CheckResult::fail("conj55", std::move(params), tag, "conjectural; " + bad.str() + note.str());
    return CheckResult::pass("conj55", std::move(params), tag, "conjectural; " + note.str());
}

} // namespace

PrimalitySweepReport sweep_primality_criterion(long long m_max) {
    if (m_max < 2) throw std::invalid_argument("sweep_primality_criterion: m_max must be >= 2");
    PrimalitySweepReport rep;
    rep.m_max = m_max;
    for (long long m = 1; m <= m_max; ++m) {
        CheckResult r = conj55_point(m);
        if (r.status == CheckStatus::skipped)
            ++rep.skipped;
        else
            ++rep.checked;
        if (r.status == CheckStatus::fail) ++rep.disagreements;
        rep.results.push_back(std::move(r));
    }
    return rep;
}

std::vector<RegEntry> integer_checks() {
    std::vector<RegEntry> es;

    es.push_back(RegEntry{
        "st-1", EntryKind::integer, "theorem",
        "sum_{k<p^a} C(2k,k+d) == ((p^a-|d|)|3)  (mod p)",
        {{"p"}, {"a"}, {"d", true, 0}},
        false,
        [](const Params& pr, double) {
            long long p = get(pr, "p"), a = get(pr, "a"), d = get(pr, "d");
            if (auto why = need_prime(p)) return CheckResult::skip("st-1", pr, "theorem", *why);
            if (a < 1) return CheckResult::skip("st-1", pr, "theorem", "a must be >= 1");
            long long pa = ll_pow(p, static_cast<unsigned>(a));
            long long ad = d < 0 ? -d : d;
            if (ad > pa)
                return CheckResult::skip("st-1", pr, "theorem", "|d| must be <= p^a");
            Int lhs = tracked_central_sum(p, 1, pa, d);
            Int rhs = ll_to_int(jacobi(pa - ad, 3));
            return residue_verdict("st-1", pr, "theorem", lhs, rhs, ll_to_int(p));
        }});

    es.push_back(RegEntry{
        "st-2", EntryKind::integer, "theorem",
        "sum_{k<p^a} (-1)^k C(2k,k) == (p^a|5)  (mod p)",
        {{"p"}, {"a"}},
        false,
        [](const Params& pr, double) {
            long long p = get(pr, "p"), a = get(pr, "a");
            if (auto why = need_prime(p)) return CheckResult::skip("st-2", pr, "theorem", *why);
            if (a < 1) return CheckResult::skip("st-2", pr, "theorem", "a must be >= 1");
            long long pa = ll_pow(p, static_cast<unsigned>(a));
            Int lhs = tracked_central_sum(p, 1, pa, 0, -1);
            Int rhs = ll_to_int(jacobi(pa, 5));
            return residue_verdict("st-2", pr, "theorem", lhs, rhs, ll_to_int(p));
        }});

    es.push_back(RegEntry{
        "st-3", EntryKind::integer, "theorem",
        "sum_{k<p^a} C(2k,k+d) 2^{-k} == [0 | +-1 by p^a vs |d| mod 4]  (mod p), p odd",
        {{"p"}, {"a"}, {"d", true, 0}},
        false,
        [](const Params& pr, double) {
            long long p = get(pr, "p"), a = get(pr, "a"), d = get(pr, "d");
            if (auto why = need_prime(p)) return CheckResult::skip("st-3", pr, "theorem", *why);
            if (p < 3) return CheckResult::skip("st-3", pr, "theorem", "p must be an odd prime");
            if (a < 1) return CheckResult::skip("st-3", pr, "theorem", "a must be >= 1");
            long long pa = ll_pow(p, static_cast<unsigned>(a));
            long long ad = d < 0 ? -d : d;
            if (ad > pa)
                return CheckResult::skip("st-3", pr, "theorem", "|d| must be <= p^a");
            long long inv2 = (p + 1) / 2; // 2^{-1} mod p
            Int lhs = tracked_central_sum(p, 1, pa, d, 1, inv2);
            Int rhs = ll_to_int(st3_expected(pa, ad));
            return residue_verdict("st-3", pr, "theorem", lhs, rhs, ll_to_int(p));
        }});

    es.push_back(RegEntry{
        "ssz", EntryKind::integer, "theorem",
        "sum_{k<3^a m} C(2k,k) == 0  (mod 3^{2a})",
        {{"a"}, {"m"}},
        false,
        [](const Params& pr, double) {
            long long a = get(pr, "a"), m = get(pr, "m");
            if (a < 1 || m < 1)
                return CheckResult::skip("ssz", pr, "theorem", "a and m must be >= 1");
            long long k_end = checked_mul(ll_pow(3, static_cast<unsigned>(a)), m);
            int T = static_cast<int>(2 * a);
            Int lhs = tracked_central_sum(3, T, k_end);
            return residue_verdict("ssz", pr, "theorem", lhs, Int(0),
                                   int_pow(Int(3), static_cast<unsigned long>(T)));
        }});

    es.push_back(RegEntry{
        "newconj2", EntryKind::integer, "theorem",
        "sum_{k<p^a} C(2k,k) == (p^a|3)  (mod p^2)",
        {{"p"}, {"a"}},
        false,
        [](const Params& pr, double) {
            long long p = get(pr, "p"), a = get(pr, "a");
            if (auto why = need_prime(p)) return CheckResult::skip("newconj2", pr, "theorem", *why);
            if (a < 1) return CheckResult::skip("newconj2", pr, "theorem", "a must be >= 1");
            long long pa = ll_pow(p, static_cast<unsigned>(a));
            Int lhs = tracked_central_sum(p, 2, pa);
            Int rhs = ll_to_int(jacobi(pa, 3));
            return residue_verdict("newconj2", pr, "theorem", lhs, rhs, ll_to_int(p) * ll_to_int(p));
        }});

    es.push_back(RegEntry{
        "conj37-int", EntryKind::integer, "conjecture",
        "sum_{k<5^a} (-1)^k C(2k,k) == 5^a  (mod 5^{a+1})",
        {{"a"}},
        false,
        [](const Params& pr, double) {
            long long a = get(pr, "a");
            if (a < 1) return CheckResult::skip("conj37-int", pr, "conjecture", "a must be >= 1");
            long long pa = ll_pow(5, static_cast<unsigned>(a));
            int T = static_cast<int>(a + 1);
            Int lhs = tracked_central_sum(5, T, pa, 0, -1);
            return residue_verdict("conj37-int", pr, "conjecture", lhs, ll_to_int(pa),
                                   int_pow(Int(5), static_cast<unsigned long>(T)), true);
        }});

    es.push_back(RegEntry{
        "conj51", EntryKind::integer, "conjecture",
        "p | 4m-1  =>  sum_{k<p^a n} C(2k,k) m^k == 0  (mod p^a)",
        {{"m"}, {"a"}, {"n"}},
        false,
        [](const Params& pr, double) {
            long long m = get(pr, "m"), a = get(pr, "a"), n = get(pr, "n");
            if (a < 1 || n < 1)
                return CheckResult::skip("conj51", pr, "conjecture", "a and n must be >= 1");
            long long base = 4 * m - 1;
            if (base == 1 || base == -1 || base == 0)
                return CheckResult::skip("conj51", pr, "conjecture", "4m-1 has no prime factor");
            for (long long p : prime_factors(base)) {
                long long k_end = checked_mul(ll_pow(p, static_cast<unsigned>(a)), n);
                Int lhs = tracked_central_sum(p, static_cast<int>(a), k_end, 0, 1, m);
                Int mod = int_pow(ll_to_int(p), static_cast<unsigned long>(a));
                Int r = lhs % mod;
                if (sgn(r) < 0) r += mod;
                if (sgn(r) != 0)
                    return CheckResult::fail("conj51", pr, "conjecture",
                                             "conjectural; p=" + std::to_string(p) + ": " +
                                                 residue_witness(r, Int(0), mod));
            }
            return CheckResult::pass("conj51", pr, "conjecture", "conjectural");
        }});

    es.push_back(RegEntry{
        "conj52", EntryKind::integer, "conjecture",
        "sum_{k<=4m-2} C(2k,k) m^k == 0 (mod 4m-1)  and  sum_{k<=4m} C(2k,k)(-m)^k == 0 (mod 4m+1)",
        {{"m"}},
        false,
        [](const Params& pr, double) {
            long long m = get(pr, "m");
            if (m < 1) return CheckResult::skip("conj52", pr, "conjecture", "m must be >= 1");
            Int Mm = ll_to_int(4 * m - 1);
            Int Mp = ll_to_int(4 * m + 1);
            Int s1 = exact_weighted_central_sum(4 * m - 2, m, Mm);
            Int s2 = exact_weighted_central_sum(4 * m, -m, Mp);
            if (sgn(s1) != 0)
                return CheckResult::fail("conj52", pr, "conjecture",
                                         "conjectural; " + residue_witness(s1, Int(0), Mm));
            if (sgn(s2) != 0)
                return CheckResult::fail("conj52", pr, "conjecture",
                                         "conjectural; " + residue_witness(s2, Int(0), Mp));
            return CheckResult::pass("conj52", pr, "conjecture", "conjectural");
        }});

    es.push_back(RegEntry{
        "conj53", EntryKind::integer, "conjecture",
        "sum_{k<3^a}(-2)^k C(2k,k) == 3^a, sum_{k<3^a}(-5)^k C(2k,k) == 2*3^a (mod 3^{a+1}); "
        "sum_{k<7^a}(-5)^k C(2k,k) == 7^a (mod 7^{a+1})",
        {{"a"}},
        false,
        [](const Params& pr, double) {
            long long a = get(pr, "a");
            if (a < 1) return CheckResult::skip("conj53", pr, "conjecture", "a must be >= 1");
            int T = static_cast<int>(a + 1);
            struct Case { long long p, base, rhs_mult; };
            for (const Case& c : {Case{3, -2, 1}, Case{3, -5, 2}, Case{7, -5, 1}}) {
                long long pa = ll_pow(c.p, static_cast<unsigned>(a));
                Int lhs = tracked_central_sum(c.p, T, pa, 0, 1, c.base);
                Int mod = int_pow(ll_to_int(c.p), static_cast<unsigned long>(T));
                Int rhs = ll_to_int(c.rhs_mult) * ll_to_int(pa) % mod;
                Int l = lhs % mod;
                if (sgn(l) < 0) l += mod;
                if (l != rhs)
                    return CheckResult::fail("conj53", pr, "conjecture",
                                             "conjectural; base " + std::to_string(c.base) + " mod " +
                                                 std::to_string(c.p) + "^" + std::to_string(a + 1) +
                                                 ": " + residue_witness(l, rhs, mod));
            }
            return CheckResult::pass("conj53", pr, "conjecture", "conjectural");
        }});

    es.push_back(RegEntry{
        "conj54", EntryKind::integer, "conjecture",
        "4m-1 prime, m != 1: sum_{k<(4m-1)^a} C(2k,k)m^k == (4m-1)^a (mod (4m-1)^{a+1}); "
        "4m+1 prime: sum_{k<(4m+1)^a} C(2k,k)(-m)^k == (4m+1)^a (mod (4m+1)^{a+1})",
        {{"m"}, {"a"}},
        false,
        [](const Params& pr, double) {
            long long m = get(pr, "m"), a = get(pr, "a");
            if (m < 1 || a < 1)
                return CheckResult::skip("conj54", pr, "conjecture", "m and a must be >= 1");
            int T = static_cast<int>(a + 1);
            bool any = false;
            long long pm = 4 * m - 1, pp = 4 * m + 1;
            if (is_prime(pm) && m != 1) {
                any = true;
                long long pa = ll_pow(pm, static_cast<unsigned>(a));
                Int lhs = tracked_central_sum(pm, T, pa, 0, 1, m);
                Int mod = int_pow(ll_to_int(pm), static_cast<unsigned long>(T));
                Int l = lhs % mod;
                if (sgn(l) < 0) l += mod;
                if (l != ll_to_int(pa))
                    return CheckResult::fail("conj54", pr, "conjecture",
                                             "conjectural; 4m-1 side: " +
                                                 residue_witness(l, ll_to_int(pa), mod));
            }
            if (is_prime(pp)) {
                any = true;
                long long pa = ll_pow(pp, static_cast<unsigned>(a));
                Int lhs = tracked_central_sum(pp, T, pa, 0, 1, -m);
                Int mod = int_pow(ll_to_int(pp), static_cast<unsigned long>(T));
                Int l = lhs % mod;
                if (sgn(l) < 0) l += mod;
                if (l != ll_to_int(pa))
                    return CheckResult::fail("conj54", pr, "conjecture",
                                             "conjectural; 4m+1 side: " +
                                                 residue_witness(l, ll_to_int(pa), mod));
            }
            if (!any)
                return CheckResult::skip("conj54", pr, "conjecture",
                                         "neither 4m-1 (with m != 1) nor 4m+1 is prime");
            return CheckResult::pass("conj54", pr, "conjecture", "conjectural");
        }});

    es.push_back(RegEntry{
        "conj55", EntryKind::integer, "conjecture",
        "criterion sums mod (4m-1)^2 / (4m+1)^2 imply primality of 4m-1 / 4m+1 (m != 30 proviso)",
        {{"m"}},
        false,
        [](const Params& pr, double) { return conj55_point(get(pr, "m")); }});

    es.push_back(RegEntry{
        "conj56", EntryKind::integer, "conjecture",
        "sum_{k<5^a n} C(4k,2k) C(2k,k)^2 == 0 (mod 5^a); for n=1 also == (-1)^a 5^a (mod 5^{a+1})",
        {{"a"}, {"n"}},
        false,
        [](const Params& pr, double) {
            long long a = get(pr, "a"), n = get(pr, "n");
            if (a < 1 || n < 1)
                return CheckResult::skip("conj56", pr, "conjecture", "a and n must be >= 1");
            int T = static_cast<int>(a + 1);
            Int pT = int_pow(Int(5), static_cast<unsigned long>(T));
            long long k_end = checked_mul(ll_pow(5, static_cast<unsigned>(a)), n);
            BinomTracker tr1(5, T, 0);  // C(2k, k)
            BinomTracker tr2(5, T, 0);  // stepped twice per k -> C(4k, 2k)
            Int total(0), total_n1(0);
            long long pa = ll_pow(5, static_cast<unsigned>(a));
            for (long long k = 0; k < k_end; ++k) {
                ValuedResidue term;
                term.p = 5;
                term.t = T;
                term.zero = false;
                term.v = tr2.value().v + 2 * tr1.value().v;
                term.u = tr2.value().u * tr1.value().u % pT * tr1.value().u % pT;
                total = (total + valued_residue_mod(term, T)) % pT;
                if (k + 1 == pa) total_n1 = total;
                tr1.advance();
                tr2.advance();
                tr2.advance();
            }
            Int mod_a = int_pow(Int(5), static_cast<unsigned long>(a));
            Int r = total % mod_a;
            if (sgn(r) < 0) r += mod_a;
            if (sgn(r) != 0)
                return CheckResult::fail("conj56", pr, "conjecture",
                                         "conjectural; mod 5^a part: " +
                                             residue_witness(r, Int(0), mod_a));
            if (n == 1) {
                Int rhs = ll_to_int(a % 2 == 0 ? pa : -pa) % pT;
                if (sgn(rhs) < 0) rhs += pT;
                if (total_n1 != rhs)
                    return CheckResult::fail("conj56", pr, "conjecture",
                                             "conjectural; mod 5^{a+1} refinement: " +
                                                 residue_witness(total_n1, rhs, pT));
            }
            return CheckResult::pass("conj56", pr, "conjecture", "conjectural");
        }});

    return es;
}

} // namespace qcong
