#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qcong/arith.hpp"
#include "qcong/qcore.hpp"
#include "qcong/qverify.hpp"

using namespace qcong;

namespace {

long long p_valuation(Int v, long long p) {
    long long e = 0;
    Int P = ll_to_int(p);
    while (sgn(v) != 0 && v % P == 0) {
        v /= P;
        ++e;
    }
    return e;
}

} // namespace

TEST_CASE("tracker examples") {
    // p=5, t=2, k=5: C(10,5) = 252, 252 mod 25 = 2, valuation 0
    BinomTracker tr5(5, 2);
    while (tr5.k() < 5) tr5.advance();
    CHECK(tr5.value().v == 0);
    CHECK(tr5.value().u == 2);

    BinomTracker tr0(5, 2);
    CHECK(tr0.value().v == 0);
    CHECK(tr0.value().u == 1);

    // p=3, t=1, k=4: C(8,4) = 70, 70 mod 3 = 1
    BinomTracker tr3(3, 1);
    while (tr3.k() < 4) tr3.advance();
    CHECK(tr3.value().v == 0);
    CHECK(tr3.value().u == 1);
    CHECK(tr3.residue(1) == 1);
}

TEST_CASE("tracker matches the exact bigint oracle") {
    for (long long p : {3LL, 5LL, 7LL}) {
        for (int t = 1; t <= 4; ++t) {
            BinomTracker tr(p, t);
            ExactCentralStream ex;
            Int pt = int_pow(ll_to_int(p), static_cast<unsigned long>(t));
            for (long long k = 0; k <= 500; ++k) {
                REQUIRE(tr.k() == k);
                REQUIRE(ex.k() == k);
                Int c = ex.value();
                long long v = p_valuation(c, p);
                CHECK(tr.value().v == v);
                Int unit = c / int_pow(ll_to_int(p), static_cast<unsigned long>(v));
                CHECK(tr.value().u == unit % pt);
                CHECK(tr.residue(t) == c % pt);
                tr.advance();
                ex.advance();
            }
        }
    }
}

TEST_CASE("offset tracker matches binomials C(2k, k+d)") {
    for (long long d : {-3LL, -1LL, 0LL, 2LL, 5LL}) {
        BinomTracker tr(7, 2, d);
        long long ad = d < 0 ? -d : d;
        for (long long k = ad; k <= 60; ++k) {
            Int c = binom(static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k + d));
            CHECK(tr.residue(2) == c % 49);
            tr.advance();
        }
    }
}

TEST_CASE("st-2 example by hand") {
    // p=3, a=1: 1 - 2 + 6 = 5 = -1 = (3|5) mod 3
    auto r = verify_integer("st-2", {{"p", 3}, {"a", 1}});
    CHECK(r.status == CheckStatus::pass);
    CHECK(jacobi(3, 5) == -1);
}

TEST_CASE("st-1 family") {
    for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL}) {
        for (long long a = 1; a <= 2; ++a) {
            for (long long d = -4; d <= 4; ++d) {
                auto r = verify_integer("st-1", {{"p", p}, {"a", a}, {"d", d}});
                long long pa = ll_pow(p, static_cast<unsigned>(a));
                if (std::abs(d) > pa)
                    CHECK(r.status == CheckStatus::skipped);
                else
                    CHECK(r.status == CheckStatus::pass);
            }
        }
    }
    CHECK(verify_integer("st-1", {{"p", 6}, {"a", 1}, {"d", 0}}).status == CheckStatus::skipped);
}

TEST_CASE("st-3 family") {
    for (long long p : {3LL, 5LL, 7LL, 11LL}) {
        for (long long a = 1; a <= 2; ++a) {
            for (long long d = -3; d <= 3; ++d) {
                auto r = verify_integer("st-3", {{"p", p}, {"a", a}, {"d", d}});
                CHECK(r.status == CheckStatus::pass);
            }
        }
    }
    CHECK(verify_integer("st-3", {{"p", 2}, {"a", 1}, {"d", 0}}).status == CheckStatus::skipped);
}

TEST_CASE("ssz examples") {
    // a=1, m=1: 1 + 2 + 6 = 9 = 0 mod 9
    CHECK(verify_integer("ssz", {{"a", 1}, {"m", 1}}).status == CheckStatus::pass);
    for (long long a = 1; a <= 3; ++a)
        for (long long m = 1; m <= 4; ++m)
            CHECK(verify_integer("ssz", {{"a", a}, {"m", m}}).status == CheckStatus::pass);
}

TEST_CASE("newconj2") {
    for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL})
        for (long long a = 1; a <= 2; ++a)
            CHECK(verify_integer("newconj2", {{"p", p}, {"a", a}}).status == CheckStatus::pass);
}

TEST_CASE("conj37-int example: 55 = 5 mod 25") {
    ExactCentralStream cs;
    Int s(0);
    for (long long k = 0; k < 5; ++k) {
        s += (k % 2 != 0) ? Int(-cs.value()) : cs.value();
        cs.advance();
    }
    CHECK(s == 55);
    auto r = verify_integer("conj37-int", {{"a", 1}});
    CHECK(r.status == CheckStatus::pass);
    CHECK(r.witness.has_value()); // tagged conjectural
}

TEST_CASE("conjecture entries at small parameters") {
    CHECK(verify_integer("conj51", {{"m", 1}, {"a", 1}, {"n", 2}}).status == CheckStatus::pass);
    CHECK(verify_integer("conj51", {{"m", 6}, {"a", 2}, {"n", 1}}).status == CheckStatus::pass);
    CHECK(verify_integer("conj52", {{"m", 7}}).status == CheckStatus::pass);
    CHECK(verify_integer("conj53", {{"a", 2}}).status == CheckStatus::pass);
    CHECK(verify_integer("conj54", {{"m", 2}, {"a", 1}}).status == CheckStatus::pass);
    CHECK(verify_integer("conj54", {{"m", 8}, {"a", 1}}).status == CheckStatus::pass); // 4m-1 = 31 prime
    // 4*14-1 = 55 and 4*14+1 = 57 are both composite
    CHECK(verify_integer("conj54", {{"m", 14}, {"a", 1}}).status == CheckStatus::skipped);
    CHECK(verify_integer("conj56", {{"a", 1}, {"n", 1}}).status == CheckStatus::pass);
    CHECK(verify_integer("conj56", {{"a", 2}, {"n", 2}}).status == CheckStatus::pass);
}

TEST_CASE("conj55 sweep behaviour") {
    CHECK(verify_integer("conj55", {{"m", 1}}).status == CheckStatus::skipped);
    auto r30 = verify_integer("conj55", {{"m", 30}});
    CHECK(r30.status == CheckStatus::pass);
    REQUIRE(r30.witness.has_value());
    CHECK(r30.witness->find("excluded at m=30") != std::string::npos);

    PrimalitySweepReport rep = sweep_primality_criterion(40);
    CHECK(rep.disagreements == 0);
    CHECK(rep.skipped == 1);  // m = 1
    CHECK(rep.checked == 39);
    CHECK(rep.results.size() == 40);
}

TEST_CASE("residues are monotone in declared precision") {
    for (long long p : {3LL, 5LL}) {
        for (int t = 1; t <= 3; ++t) {
            BinomTracker lo(p, t), hi(p, t + 1);
            Int pt = int_pow(ll_to_int(p), static_cast<unsigned long>(t));
            Int sum_lo(0), sum_hi(0);
            for (long long k = 0; k < 200; ++k) {
                sum_lo = (sum_lo + lo.residue(t)) % pt;
                sum_hi = sum_hi + hi.residue(t + 1);
                lo.advance();
                hi.advance();
            }
            CHECK(sum_hi % pt == sum_lo);
        }
    }
}

TEST_CASE("block additivity mod p at n = p^a") {
    for (long long p : {3LL, 5LL}) {
        for (long long a = 1; a <= 2; ++a) {
            long long n = ll_pow(p, static_cast<unsigned>(a));
            for (long long m = 1; m <= 4; ++m) {
                // plain and alternating block sums against the factored form
                Int plain0(0), alt0(0);
                {
                    ExactCentralStream cs;
                    for (long long k = 0; k < n; ++k) {
                        plain0 += cs.value();
                        alt0 += (k % 2 != 0) ? Int(-cs.value()) : cs.value();
                        cs.advance();
                    }
                }
                ExactCentralStream cs;
                for (long long j = 0; j < m; ++j) {
                    Int blk_plain(0), blk_alt(0);
                    ExactCentralStream inner;
                    for (long long k = 0; k < j * n; ++k) inner.advance();
                    for (long long k = j * n; k < (j + 1) * n; ++k) {
                        blk_plain += inner.value();
                        blk_alt += (k % 2 != 0) ? Int(-inner.value()) : inner.value();
                        inner.advance();
                    }
                    Int cj = central_binom(j);
                    Int sign = (j % 2 != 0) ? Int(-1) : Int(1);
                    CHECK((blk_plain - cj * plain0) % ll_to_int(p) == 0);
                    CHECK((blk_alt - sign * cj * alt0) % ll_to_int(p) == 0);
                }
            }
        }
    }
}

TEST_CASE("st-2 coincides with the q = 1 shadow of the Phi_n congruence") {
    for (long long p : {3LL, 5LL, 7LL}) {
        for (long long a = 1; a <= 2; ++a) {
            long long n = ll_pow(p, static_cast<unsigned>(a));
            Rat at1 = eval_int(builders::sum_central_alt_tri(n), Int(1));
            REQUIRE(at1.get_den() == 1);
            Int lhs_q = at1.get_num();
            Int lhs_int(0);
            ExactCentralStream cs;
            for (long long k = 0; k < n; ++k) {
                lhs_int += (k % 2 != 0) ? Int(-cs.value()) : cs.value();
                cs.advance();
            }
            CHECK(lhs_q == lhs_int);
            Int want = ll_to_int(jacobi(n, 5));
            CHECK((lhs_int - want) % ll_to_int(p) == 0);
        }
    }
}
