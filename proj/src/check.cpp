#include "qcong/check.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>

namespace qcong {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

std::string params_to_string(const Params& p) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : p) {
        if (!first) os << " ";
        first = false;
        os << k << "=" << v;
    }
    return os.str();
}

CheckResult CheckResult::pass(std::string id, Params p, std::string tag,
                              std::optional<std::string> note) {
    return CheckResult{std::move(id), std::move(p), CheckStatus::pass, std::move(note), std::move(tag)};
}

CheckResult CheckResult::fail(std::string id, Params p, std::string tag, std::string witness) {
    if (witness.empty()) throw std::logic_error("CheckResult: fail requires a witness");
    return CheckResult{std::move(id), std::move(p), CheckStatus::fail, std::move(witness), std::move(tag)};
}

CheckResult CheckResult::skip(std::string id, Params p, std::string tag, std::string reason) {
    return CheckResult{std::move(id), std::move(p), CheckStatus::skipped, std::move(reason), std::move(tag)};
}

bool operator==(const CheckResult& a, const CheckResult& b) {
    return a.id == b.id && a.params == b.params && a.status == b.status && a.witness == b.witness &&
           a.tag == b.tag;
}

namespace {

constexpr long long kSafeMax = (1LL << 53);

nlohmann::ordered_json result_to_json(const CheckResult& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) {
        if (v > kSafeMax || v < -kSafeMax)
            params[k] = std::to_string(v);
        else
            params[k] = v;
    }
    j["params"] = std::move(params);
    j["status"] = to_string(r.status);
    if (r.witness) j["witness"] = *r.witness;
    j["tag"] = r.tag;
    return j;
}

CheckResult result_from_json(const nlohmann::json& j) {
    CheckResult r;
    r.id = j.at("id").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) {
        if (v.is_string())
            r.params[k] = std::stoll(v.get<std::string>());
        else
            r.params[k] = v.get<long long>();
    }
    std::string st = j.at("status").get<std::string>();
    if (st == "pass")
        r.status = CheckStatus::pass;
    else if (st == "fail")
        r.status = CheckStatus::fail;
    else if (st == "skipped")
        r.status = CheckStatus::skipped;
    else
        throw std::invalid_argument("unknown status: " + st);
    if (j.contains("witness")) r.witness = j.at("witness").get<std::string>();
    r.tag = j.at("tag").get<std::string>();
    return r;
}

} // namespace

std::string to_json(const CheckResult& r) { return result_to_json(r).dump(); }

std::string to_json(const std::vector<CheckResult>& rs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) arr.push_back(result_to_json(r));
    return arr.dump(2);
}

std::vector<CheckResult> results_from_json(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    std::vector<CheckResult> out;
    for (const auto& j : arr) out.push_back(result_from_json(j));
    return out;
}

std::string to_text_line(const CheckResult& r) {
    std::ostringstream os;
    switch (r.status) {
        case CheckStatus::pass: os << "pass "; break;
        case CheckStatus::fail: os << "FAIL "; break;
        case CheckStatus::skipped: os << "skip "; break;
    }
    os << r.id;
    std::string ps = params_to_string(r.params);
    if (!ps.empty()) os << "  " << ps;
    if (r.status != CheckStatus::pass && r.witness) os << "  (" << *r.witness << ")";
    return os.str();
}

std::string to_string(EntryKind k) {
    switch (k) {
        case EntryKind::identity: return "identity";
        case EntryKind::congruence: return "congruence";
        case EntryKind::integer: return "integer";
    }
    return "?";
}

} // namespace qcong
