#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcong {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

// Integer-valued named parameters of one check point, ordered by name.
using Params = std::map<std::string, long long>;

std::string params_to_string(const Params& p);

// Outcome of one verification. A fail always carries a witness (the parameter
// point and the leading terms of the nonzero difference, or the offending
// residues); a skip carries the reason.
struct CheckResult {
    std::string id;
    Params params;
    CheckStatus status = CheckStatus::skipped;
    std::optional<std::string> witness;
    std::string tag;

    static CheckResult pass(std::string id, Params p, std::string tag,
                            std::optional<std::string> note = std::nullopt);
    static CheckResult fail(std::string id, Params p, std::string tag, std::string witness);
    static CheckResult skip(std::string id, Params p, std::string tag, std::string reason);
};

bool operator==(const CheckResult& a, const CheckResult& b);

// JSON record {id, params, status, witness?, tag}; numbers beyond the 53-bit
// safe-integer range are emitted as decimal strings.
std::string to_json(const CheckResult& r);
std::string to_json(const std::vector<CheckResult>& rs);
std::vector<CheckResult> results_from_json(const std::string& text);

// One line of human-readable output.
std::string to_text_line(const CheckResult& r);

enum class EntryKind { identity, congruence, integer };

std::string to_string(EntryKind k);

struct ParamSpec {
    std::string name;
    bool has_default = false;
    long long default_value = 0;
};

inline constexpr double kDefaultTol = 1e-6;

// A registered check: how to run it and what it claims.
struct RegEntry {
    std::string id;
    EntryKind kind;
    std::string tag;       // theorem | lemma | corollary | identity | conjecture
    std::string statement; // the verified statement, in ASCII math
    std::vector<ParamSpec> sig;
    bool uses_tol = false;
    std::function<CheckResult(const Params&, double tol)> run;
};

} // namespace qcong
