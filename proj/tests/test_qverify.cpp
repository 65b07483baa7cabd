#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qcong/qverify.hpp"

#include <numeric>
#include <set>

using namespace qcong;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<long long, long long>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p += LaurentPoly::monomial(ll_to_int(c), e);
    return p;
}

bool all_pass(const std::vector<CheckResult>& rs, std::size_t* passes = nullptr) {
    std::size_t n = 0;
    for (const auto& r : rs) {
        if (r.status == CheckStatus::fail) return false;
        if (r.status == CheckStatus::pass) ++n;
    }
    if (passes) *passes = n;
    return true;
}

std::vector<long long> seq(long long lo, long long hi) {
    std::vector<long long> v;
    for (long long x = lo; x <= hi; ++x) v.push_back(x);
    return v;
}

} // namespace

TEST_CASE("builders agree with the Pascal-recurrence qbinom") {
    for (long long d : {-2LL, 0LL, 1LL, 3LL})
        for (long long k = std::abs(d); k <= 12; ++k)
            CHECK(builders::central_qbinom(k, d) == qbinom(2 * k, k + d));
    CHECK(builders::central_qbinom(1, 3).is_zero());
}

TEST_CASE("mod5 LHS at n=2 is -q^{-1} and congruent to -q^{-3}") {
    LaurentPoly lhs = builders::sum_central_alt_tri(2);
    CHECK(lhs == poly({{-1, -1}}));
    CHECK(congruent_mod_phi(lhs, poly({{-3, -1}}), 2));
    auto r = verify_congruence("mod5", {{"n", 2}});
    CHECK(r.status == CheckStatus::pass);
}

TEST_CASE("mod5 and mod5-inv pass together") {
    for (long long n = 0; n <= 30; ++n) {
        auto a = verify_congruence("mod5", {{"n", n}});
        auto b = verify_congruence("mod5-inv", {{"n", n}});
        CHECK(a.status == b.status);
        CHECK(a.status == CheckStatus::pass);
    }
}

TEST_CASE("lemma-nkk small values") {
    // n=3: both sides are -q
    CHECK(builders::lemma_nkk_lhs(3) == poly({{1, -1}}));
    auto r = verify_identity("lemma-nkk", {{"n", 3}});
    CHECK(r.status == CheckStatus::pass);
    for (long long n = 0; n <= 40; ++n)
        CHECK(verify_identity("lemma-nkk", {{"n", n}}).status == CheckStatus::pass);
}

TEST_CASE("qser identities, small sweep") {
    // n=1, d=1: single surviving term, both sides 1
    auto r = verify_identity("qser-1", {{"n", 1}, {"d", 1}});
    CHECK(r.status == CheckStatus::pass);
    for (const char* id : {"qser-1", "qser-2", "qser-3", "qser-4"}) {
        auto rs = run_suite({id}, {{"n", seq(1, 10)}, {"d", seq(0, 10)}});
        std::size_t passes = 0;
        CHECK(all_pass(rs, &passes));
        // d > n points are skipped, the rest pass
        CHECK(passes == 10 * 11 - (0 + 1 + 2 + 3 + 4 + 5 + 6 + 7 + 8 + 9));
    }
}

TEST_CASE("qser-1 at d=0 (Andrews' specialization) up to n=30") {
    for (long long n = 1; n <= 30; ++n)
        CHECK(verify_identity("qser-1", {{"n", n}, {"d", 0}}).status == CheckStatus::pass);
}

TEST_CASE("2kbrack at n=3 via direct expansion") {
    LaurentPoly lhs = builders::sum_central_qk(3);
    CHECK(lhs == poly({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 2}, {5, 1}, {6, 1}}));
    // the fold mod 3 is 3 + 3q + 3q^2 = 3 Phi_3
    CHECK(reduce_mod_phi(lhs, 3).is_zero());
    CHECK(verify_congruence("2kbrack", {{"n", 3}}).status == CheckStatus::pass);
    CHECK(verify_congruence("2kbrack", {{"n", 4}}).status == CheckStatus::skipped);
}

TEST_CASE("phi3 example a=1, m=2 against brute-force division") {
    LaurentPoly lhs = builders::sum_central_qk(6);
    LaurentPoly modulus = poly({{0, 1}, {1, 1}, {2, 1}});
    auto [q, r] = divrem(lhs, modulus);
    CHECK(r.is_zero());
    CHECK(verify_congruence("phi3", {{"a", 1}, {"m", 2}}).status == CheckStatus::pass);
}

TEST_CASE("tauraso-kd examples and d-symmetry") {
    for (long long n = 1; n <= 15; ++n)
        for (long long d = -(n - 1); d <= n - 1; ++d)
            CHECK(verify_congruence("tauraso-kd", {{"n", n}, {"d", d}}).status == CheckStatus::pass);
    CHECK(verify_congruence("tauraso-kd", {{"n", 4}, {"d", 4}}).status == CheckStatus::skipped);
}

TEST_CASE("mn transfer against independent Pascal-built expansion") {
    for (long long n : {2LL, 3LL, 5LL, 8LL}) {
        for (long long m : {1LL, 2LL, 3LL}) {
            // independent construction of both sides from qbinom
            LaurentPoly big, small;
            for (long long k = 0; k < m * n; ++k) big += shift(qbinom(2 * k, k), k);
            for (long long k = 0; k < n; ++k) small += shift(qbinom(2 * k, k), k);
            Int scalar(0);
            for (long long j = 0; j < m; ++j) scalar += central_binom(j);
            CHECK(congruent_mod_phi(big, LaurentPoly(scalar) * small, n));
            CHECK(verify_congruence("mn-to3", {{"m", m}, {"n", n}}).status == CheckStatus::pass);
            CHECK(verify_congruence("mn-to5", {{"m", m}, {"n", n}}).status == CheckStatus::pass);
        }
    }
}

TEST_CASE("mn transfer for n <= 24, m <= 4 by rolling-row Pascal expansion") {
    // central q-binomials [2k;k] for k < 96 from the bare Pascal recurrence,
    // one row at a time -- independent of the product-form streams
    const long long kmax = 95;
    std::vector<LaurentPoly> central(static_cast<std::size_t>(kmax) + 1);
    std::vector<LaurentPoly> row{LaurentPoly(1)};
    central[0] = LaurentPoly(1);
    for (long long r = 1; r <= 2 * kmax; ++r) {
        std::vector<LaurentPoly> next(static_cast<std::size_t>(r) + 1);
        next[0] = LaurentPoly(1);
        next[static_cast<std::size_t>(r)] = LaurentPoly(1);
        for (long long k = 1; k < r; ++k)
            next[static_cast<std::size_t>(k)] =
                row[static_cast<std::size_t>(k - 1)] + shift(row[static_cast<std::size_t>(k)], k);
        row = std::move(next);
        if (r % 2 == 0) central[static_cast<std::size_t>(r / 2)] = row[static_cast<std::size_t>(r / 2)];
    }
    for (long long k = 0; k <= 12; ++k) CHECK(central[static_cast<std::size_t>(k)] == builders::central_qbinom(k));

    for (long long n = 1; n <= 24; ++n) {
        for (long long m = 1; m <= 4; ++m) {
            LaurentPoly big3, small3, big5, small5;
            for (long long k = 0; k < m * n; ++k) {
                big3 += shift(central[static_cast<std::size_t>(k)], k);
                big5.add_scaled(central[static_cast<std::size_t>(k)], -choose2(k + 1),
                                (k % 2 != 0) ? -1 : 1);
            }
            for (long long k = 0; k < n; ++k) {
                small3 += shift(central[static_cast<std::size_t>(k)], k);
                small5.add_scaled(central[static_cast<std::size_t>(k)], -choose2(k + 1),
                                  (k % 2 != 0) ? -1 : 1);
            }
            Int s3(0), s5(0);
            for (long long j = 0; j < m; ++j) {
                s3 += central_binom(j);
                s5 += (j % 2 != 0) ? Int(-central_binom(j)) : central_binom(j);
            }
            CHECK(congruent_mod_phi(big3, LaurentPoly(s3) * small3, n));
            CHECK(congruent_mod_phi(big5, LaurentPoly(s5) * small5, n));
        }
    }
}

TEST_CASE("corollary families, small sweep") {
    for (const char* id :
         {"2k-first", "2k-second", "2k-third", "2k-fourth", "2k-first-inv", "2k-third-inv"}) {
        auto rs = run_suite({id}, {{"n", seq(1, 12)}, {"d", seq(0, 11)}});
        CHECK(all_pass(rs));
    }
}

TEST_CASE("cor36 and dual-3n") {
    for (long long n = 1; n <= 20; ++n) {
        auto r = verify_congruence("cor36", {{"n", n}});
        CHECK(r.status == (n % 3 == 0 ? CheckStatus::skipped : CheckStatus::pass));
    }
    for (long long n = 1; n <= 12; ++n)
        for (long long m = 1; m <= n; ++m)
            if (std::gcd(m, n) == 1)
                CHECK(verify_identity("dual-3n", {{"n", n}, {"m", m}}).status == CheckStatus::pass);
}

TEST_CASE("greene-krammer examples") {
    auto r = verify_identity("greene-krammer", {{"n", 5}, {"m", 1}}, 1e-9);
    CHECK(r.status == CheckStatus::pass);
    CHECK(verify_identity("greene-krammer", {{"n", 1}, {"m", 1}}).status == CheckStatus::pass);
    CHECK(verify_identity("greene-krammer", {{"n", 6}, {"m", 2}}).status == CheckStatus::skipped);
    for (long long n = 1; n <= 14; ++n)
        for (long long m = 1; m <= n; ++m)
            if (std::gcd(m, n) == 1)
                CHECK(verify_identity("greene-krammer", {{"n", n}, {"m", m}}).status ==
                      CheckStatus::pass);
}

TEST_CASE("pimod5 case table, small n") {
    for (long long n = 1; n <= 14; ++n)
        for (long long m = 1; m <= n; ++m)
            if (std::gcd(m, n) == 1)
                CHECK(verify_identity("pimod5", {{"n", n}, {"m", m}}).status == CheckStatus::pass);
}

TEST_CASE("lem2.1-transform for all k < n") {
    for (long long n = 1; n <= 25; ++n)
        for (long long k = 0; k < n; ++k)
            CHECK(verify_identity("lem2.1-transform", {{"n", n}, {"k", k}}).status ==
                  CheckStatus::pass);
}

TEST_CASE("qlucas against direct reduction") {
    for (long long d = 1; d <= 6; ++d)
        for (long long m = 0; m <= 14; ++m)
            for (long long k = 0; k <= m; ++k)
                CHECK(verify_identity("qlucas", {{"d", d}, {"m", m}, {"k", k}}).status ==
                      CheckStatus::pass);
}

TEST_CASE("qfib-explicit and qfib-remark") {
    for (long long n = 0; n <= 30; ++n)
        CHECK(verify_identity("qfib-explicit", {{"n", n}}).status == CheckStatus::pass);
    for (long long n = 1; n <= 12; ++n)
        for (long long d = 0; d < n; ++d)
            CHECK(verify_congruence("qfib-remark", {{"n", n}, {"d", d}}).status ==
                  CheckStatus::pass);
}

TEST_CASE("andrews identities at default truncation") {
    for (long long s1 : {-1LL, 1LL})
        for (long long s2 : {-1LL, 1LL})
            for (long long alpha : {0LL, 2LL})
                for (long long beta : {1LL, 3LL}) {
                    Params p{{"s1", s1}, {"alpha", alpha}, {"s2", s2}, {"beta", beta}, {"N", 40}};
                    CHECK(verify_identity("andrews", p).status == CheckStatus::pass);
                    CHECK(verify_identity("andrews-2", p).status == CheckStatus::pass);
                }
    // constraint gate
    CHECK(verify_identity("andrews", {{"s1", 0}, {"alpha", 0}, {"s2", 1}, {"beta", 0}, {"N", 10}})
              .status == CheckStatus::skipped);
    CHECK(verify_identity("andrews", {{"s1", 1}, {"alpha", 4}, {"s2", 1}, {"beta", 0}, {"N", 10}})
              .status == CheckStatus::skipped);
}

TEST_CASE("conjecture entries are tagged conjectural") {
    auto r = verify_congruence("conj37-q", {{"a", 1}, {"m", 1}});
    CHECK(r.status == CheckStatus::pass);
    CHECK(r.tag == "conjecture");
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->find("conjectural") != std::string::npos);

    CHECK(verify_congruence("conj38-a", {{"p", 2}, {"a", 1}}).status == CheckStatus::pass);
    CHECK(verify_congruence("conj38-a", {{"p", 3}, {"a", 1}}).status == CheckStatus::pass);
    CHECK(verify_congruence("conj38-b", {{"p", 2}, {"a", 1}}).status == CheckStatus::pass);
    CHECK(verify_congruence("conj38-b", {{"p", 3}, {"a", 1}}).status == CheckStatus::skipped);
    CHECK(verify_congruence("conj38-a", {{"p", 4}, {"a", 1}}).status == CheckStatus::skipped);
}

TEST_CASE("registry dispatch errors") {
    CHECK_THROWS_AS(run_check("nonsense", {}), std::invalid_argument);
    CHECK_THROWS_AS(verify_identity("mod5", {{"n", 3}}), std::invalid_argument); // wrong kind
    CHECK_THROWS_AS(verify_congruence("mod5", {}), std::invalid_argument);        // missing param
    CHECK_THROWS_AS(verify_congruence("mod5", {{"n", 3}, {"x", 1}}), std::invalid_argument);
}

TEST_CASE("run_suite ordering, determinism and aggregation") {
    auto rs = run_suite({"lemma-nkk"}, {{"n", seq(0, 10)}});
    REQUIRE(rs.size() == 11);
    for (std::size_t i = 0; i < rs.size(); ++i) {
        CHECK(rs[i].status == CheckStatus::pass);
        CHECK(rs[i].params.at("n") == static_cast<long long>(i));
    }

    CHECK(run_suite({"lemma-nkk"}, {{"n", {}}}).empty());

    auto rs1 = run_suite({"mod5", "lemma-nkk"}, {{"n", seq(1, 12)}}, 1);
    auto rs4 = run_suite({"lemma-nkk", "mod5", "mod5"}, {{"n", seq(1, 12)}}, 4);
    REQUIRE(rs1.size() == rs4.size());
    for (std::size_t i = 0; i < rs1.size(); ++i) CHECK(rs1[i] == rs4[i]);
    // sorted by id: lemma-nkk before mod5
    CHECK(rs1.front().id == "lemma-nkk");
    CHECK(rs1.back().id == "mod5");

    auto rs30 = run_suite({"mod5"}, {{"n", seq(1, 30)}});
    std::size_t passes = 0;
    CHECK(all_pass(rs30, &passes));
    CHECK(passes == 30);
}

TEST_CASE("every registered id runs at one representative point") {
    Ranges r{{"n", {6}},     {"d", {1}},    {"k", {2}},  {"m", {2}},     {"a", {1}},
             {"p", {5}},     {"s1", {-1}},  {"s2", {1}}, {"alpha", {1}}, {"beta", {0}},
             {"N", {30}}};
    std::vector<std::string> ids;
    for (const RegEntry& e : all_checks()) ids.push_back(e.id);
    auto rs = run_suite(ids, r);
    CHECK(rs.size() >= ids.size());
    for (const auto& res : rs) CHECK(res.status != CheckStatus::fail);
}

TEST_CASE("list metadata invariants") {
    std::set<std::string> seen;
    for (const RegEntry& e : all_checks()) {
        CHECK(seen.insert(e.id).second); // ids unique
        CHECK(!e.statement.empty());
        CHECK(!e.tag.empty());
    }
    REQUIRE(find_check("mod5") != nullptr);
    CHECK(find_check("mod5")->tag == "theorem");
    REQUIRE(find_check("conj55") != nullptr);
    CHECK(find_check("conj55")->tag == "conjecture");
}
