#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qcong/cycmod.hpp"

#include <numeric>
#include <random>

using namespace qcong;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<long long, long long>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p += LaurentPoly::monomial(ll_to_int(c), e);
    return p;
}

LaurentPoly random_laurent(std::mt19937& rng, long long max_abs_exp = 15) {
    std::uniform_int_distribution<long long> exp(-max_abs_exp, max_abs_exp);
    std::uniform_int_distribution<long long> coef(-20, 20);
    LaurentPoly p;
    int n = static_cast<int>(rng() % 7);
    for (int i = 0; i < n; ++i) p += LaurentPoly::monomial(ll_to_int(coef(rng)), exp(rng));
    return p;
}

} // namespace

TEST_CASE("reduce_mod_phi examples") {
    CHECK(reduce_mod_phi(poly({{3, 1}}), 3) == LaurentPoly(1));     // q^3 = 1 mod Phi_3
    CHECK(reduce_mod_phi(poly({{-1, 1}}), 2) == LaurentPoly(-1));   // q^{-1} folds to q = -1 mod q+1
    CHECK(reduce_mod_phi(poly({{0, 3}, {1, 3}, {2, 3}}), 3).is_zero()); // 3 Phi_3
    // huge exponents fold exactly
    CHECK(reduce_mod_phi(LaurentPoly::monomial(Int(1), -320000000), 200) ==
          reduce_mod_phi(LaurentPoly(1), 200));
}

TEST_CASE("reduce_mod_phi idempotence and soundness") {
    std::mt19937 rng(11);
    for (long long n : {1LL, 2LL, 3LL, 5LL, 12LL, 30LL, 60LL}) {
        for (int i = 0; i < 15; ++i) {
            LaurentPoly f = random_laurent(rng);
            LaurentPoly r = reduce_mod_phi(f, n);
            CHECK(reduce_mod_phi(r, n) == r);
            CHECK(congruent(f, r, cyclotomic(n)));
            if (!r.is_zero()) CHECK(r.degree() < cyclotomic(n).degree());
            if (!r.is_zero()) CHECK(r.valuation() >= 0);
        }
    }
}

TEST_CASE("reduce_mod_phi is multiplicative") {
    std::mt19937 rng(22);
    for (long long n : {2LL, 3LL, 7LL, 12LL}) {
        for (int i = 0; i < 15; ++i) {
            LaurentPoly f = random_laurent(rng), g = random_laurent(rng);
            CHECK(reduce_mod_phi(f * g, n) ==
                  reduce_mod_phi(reduce_mod_phi(f, n) * reduce_mod_phi(g, n), n));
        }
    }
}

TEST_CASE("congruent examples") {
    CHECK(congruent(poly({{-1, -1}}), poly({{-3, -1}}), cyclotomic(2))); // q^2 = 1 mod q+1
    std::mt19937 rng(33);
    for (int i = 0; i < 10; ++i) {
        LaurentPoly f = random_laurent(rng);
        CHECK(congruent(f, f, cyclotomic(3)));
    }
    CHECK(!congruent(LaurentPoly(1), LaurentPoly(), cyclotomic(3)));
}

TEST_CASE("congruent rejects inadmissible moduli") {
    // constant term 2: q is not provably a unit
    CHECK_THROWS_AS(congruent(LaurentPoly(1), LaurentPoly(), poly({{0, 2}, {1, 1}})),
                    std::invalid_argument);
    // leading coefficient 2
    CHECK_THROWS_AS(congruent(LaurentPoly(1), LaurentPoly(), poly({{0, 1}, {1, 2}})),
                    std::invalid_argument);
    // zero constant term (valuation > 0)
    CHECK_THROWS_AS(congruent(LaurentPoly(1), LaurentPoly(), poly({{1, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(congruent(LaurentPoly(1), LaurentPoly(), LaurentPoly()), std::invalid_argument);
    // Phi_1 = q - 1 is admissible (constant term -1)
    CHECK(congruent(poly({{5, 1}}), LaurentPoly(1), cyclotomic(1)));
}

TEST_CASE("congruent_mod_phi_power") {
    LaurentPoly phi3 = cyclotomic(3);
    CHECK(congruent_mod_phi_power(phi3 * phi3, LaurentPoly(), 3, 2));
    CHECK(!congruent_mod_phi_power(phi3, LaurentPoly(), 3, 2));
    CHECK(congruent_mod_phi_power(phi3, LaurentPoly(), 3, 1));

    // e = 1 agrees with the fold-based path on random Laurent pairs
    std::mt19937 rng(44);
    for (long long n : {2LL, 3LL, 5LL, 12LL, 30LL}) {
        for (int i = 0; i < 12; ++i) {
            LaurentPoly f = random_laurent(rng), g = random_laurent(rng);
            CHECK(congruent_mod_phi_power(f, g, n, 1) == congruent_mod_phi(f, g, n));
        }
    }

    // the fold shortcut must NOT hold mod Phi_n^2: q^n != 1 there (n > 1)
    CHECK(!congruent_mod_phi_power(poly({{3, 1}}), LaurentPoly(1), 3, 2));
}

TEST_CASE("root_check examples") {
    CHECK(root_check(cyclotomic(5), 5, 1, {0.0, 0.0}, 1e-9));
    CHECK(root_check(cyclotomic(5), 5, 2, {0.0, 0.0}, 1e-9));
    CHECK(root_check(LaurentPoly(1), 7, 3, {1.0, 0.0}, 1e-12));
    CHECK(!root_check(LaurentPoly(1), 7, 3, {0.0, 0.0}, 1e-3));
    CHECK_THROWS_AS(root_check(LaurentPoly(1), 4, 2, {1.0, 0.0}, 1e-6), std::invalid_argument);
}

TEST_CASE("congruence implies vanishing at every primitive root") {
    std::mt19937 rng(55);
    for (long long n : {2LL, 3LL, 4LL, 5LL, 6LL, 10LL, 12LL, 25LL, 50LL}) {
        for (int i = 0; i < 6; ++i) {
            LaurentPoly f = random_laurent(rng);
            LaurentPoly g = reduce_mod_phi(f, n); // congruent to f by construction
            REQUIRE(congruent_mod_phi(f, g, n));
            for (long long m = 1; m <= n; ++m) {
                if (std::gcd(m, n) != 1) continue;
                CHECK(root_check(f - g, n, m, {0.0, 0.0}, 1e-6));
                CHECK(std::abs(eval_complex(reduce_mod_phi(f - g, n), n, m)) < 1e-6);
            }
        }
    }
}
