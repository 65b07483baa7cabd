#pragma once

#include "qcong/arith.hpp"
#include "qcong/check.hpp"
#include "qcong/cycmod.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcong {

// Every registered check (identity, congruence and integer registries).
const std::vector<RegEntry>& all_checks();
const RegEntry* find_check(const std::string& id);

// Run one check; unknown id throws, defaulted signature parameters are filled
// in, missing required parameters throw. A tolerance override only affects
// numeric root checks.
CheckResult run_check(const std::string& id, const Params& params,
                      std::optional<double> tol = std::nullopt);

// Kind-checked dispatchers.
CheckResult verify_identity(const std::string& id, const Params& params,
                            std::optional<double> tol = std::nullopt);
CheckResult verify_congruence(const std::string& id, const Params& params,
                              std::optional<double> tol = std::nullopt);
CheckResult verify_integer(const std::string& id, const Params& params);

// Parameter ranges for sweeps: name -> list of values (sorted and deduped
// before expansion).
using Ranges = std::map<std::string, std::vector<long long>>;

// Cartesian sweep over each id's signature. Results are ordered by id, then
// by parameter tuple in signature order, independently of `jobs`. Per-check
// errors become failed results; the sweep itself never aborts.
std::vector<CheckResult> run_suite(std::vector<std::string> ids, const Ranges& ranges,
                                   int jobs = 1, std::optional<double> tol = std::nullopt);

// LHS constructors shared by the registry, the tests and the acceptance
// suite. All are exact polynomials built term by term from q-binomials.
namespace builders {

// [2k; k+d], exact, via the product-form recurrence.
LaurentPoly central_qbinom(long long k, long long d = 0);

// sum_{k<n} (-1)^k q^{-C(k+1,2)} [2k;k]
LaurentPoly sum_central_alt_tri(long long n);

// sum_{k<n} (-1)^k q^{-C(k,2)} [2k;k]
LaurentPoly sum_central_alt_tri0(long long n);

// sum_{k<n} q^k [2k;k+d]
LaurentPoly sum_central_qk(long long n, long long d = 0);

// sum_{k<n} q^{2k+1} [2k;k]
LaurentPoly sum_central_q2k1(long long n);

// 1 + 2 sum_{k=1}^{n-1} (-1)^k q^{-C(k,2)} [2k-1;k]
LaurentPoly greene_lhs(long long n);

// sum_{k=0}^{n} (-1)^k q^{C(k,2)} [n-k;k]
LaurentPoly lemma_nkk_lhs(long long n);

} // namespace builders

} // namespace qcong
