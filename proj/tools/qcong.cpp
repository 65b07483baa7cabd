#include "qcong/qverify.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qcong;

int usage(const std::string& err = "") {
    if (!err.empty()) std::cerr << "error: " << err << "\n\n";
    std::cerr <<
        "usage: qcong <command> [arguments]\n"
        "\n"
        "commands:\n"
        "  list                      print the check catalogue\n"
        "  verify <id...> [params]   run checks at explicit parameter points\n"
        "  sweep  <id...> [params]   run checks over parameter ranges\n"
        "\n"
        "parameters:\n"
        "  --<name> <v>              single value (repeatable)\n"
        "  --<name> <lo>..<hi>       inclusive integer range\n"
        "  --json                    machine-readable output (one JSON array)\n"
        "  --tol <x>                 tolerance override for numeric root checks\n"
        "  --jobs <k>                worker threads for sweeps (default 1)\n"
        "\n"
        "exit status: 0 if every non-skipped check passed, 1 if any failed,\n"
        "2 on usage errors.\n";
    return 2;
}

bool parse_ll(const std::string& s, long long& out) {
    if (s.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(s, &pos);
    } catch (...) {
        return false;
    }
    return pos == s.size();
}

// "v" or "lo..hi" (inclusive).
bool parse_range(const std::string& s, std::vector<long long>& out) {
    std::size_t dots = s.find("..", 1); // allow a leading minus
    if (dots == std::string::npos) {
        long long v;
        if (!parse_ll(s, v)) return false;
        out.push_back(v);
        return true;
    }
    long long lo, hi;
    if (!parse_ll(s.substr(0, dots), lo) || !parse_ll(s.substr(dots + 2), hi)) return false;
    if (hi < lo) return false;
    if (hi - lo > 2'000'000) return false; // refuse absurd sweeps
    for (long long v = lo; v <= hi; ++v) out.push_back(v);
    return true;
}

int cmd_list() {
    std::size_t id_w = 0, tag_w = 0, sig_w = 0;
    std::vector<std::string> sigs;
    for (const RegEntry& e : all_checks()) {
        std::ostringstream ss;
        for (std::size_t i = 0; i < e.sig.size(); ++i) {
            if (i) ss << ",";
            ss << e.sig[i].name;
            if (e.sig[i].has_default) ss << "=" << e.sig[i].default_value;
        }
        sigs.push_back(ss.str());
        id_w = std::max(id_w, e.id.size());
        tag_w = std::max(tag_w, e.tag.size());
        sig_w = std::max(sig_w, sigs.back().size());
    }
    std::size_t i = 0;
    for (const RegEntry& e : all_checks()) {
        std::string pad_id(id_w - e.id.size(), ' ');
        std::string pad_tag(tag_w - e.tag.size(), ' ');
        std::string pad_sig(sig_w - sigs[i].size(), ' ');
        std::cout << e.id << pad_id << "  " << e.tag << pad_tag << "  " << sigs[i] << pad_sig << "  "
                  << e.statement << "\n";
        ++i;
    }
    std::cout << all_checks().size() << " checks registered\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty()) return usage("missing command");
    std::string command = args[0];
    if (command == "list") {
        if (args.size() > 1) return usage("'list' takes no arguments");
        return cmd_list();
    }
    if (command != "verify" && command != "sweep") return usage("unknown command '" + command + "'");

    std::vector<std::string> ids;
    Ranges ranges;
    bool json = false;
    std::optional<double> tol;
    int jobs = 1;

    std::size_t i = 1;
    for (; i < args.size() && args[i].rfind("--", 0) != 0; ++i) ids.push_back(args[i]);
    if (ids.empty()) return usage("no check ids given");
    for (const std::string& id : ids)
        if (!qcong::find_check(id)) return usage("unknown check id '" + id + "'");

    for (; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--json") {
            json = true;
        } else if (a == "--tol") {
            if (++i >= args.size()) return usage("--tol needs a value");
            char* end = nullptr;
            double v = std::strtod(args[i].c_str(), &end);
            if (end == args[i].c_str() || *end != '\0' || v <= 0) return usage("bad --tol value");
            tol = v;
        } else if (a == "--jobs") {
            long long v;
            if (++i >= args.size() || !parse_ll(args[i], v) || v < 1 || v > 1024)
                return usage("bad --jobs value");
            jobs = static_cast<int>(v);
        } else if (a.rfind("--", 0) == 0 && a.size() > 2) {
            std::string name = a.substr(2);
            if (++i >= args.size()) return usage("--" + name + " needs a value");
            if (!parse_range(args[i], ranges[name])) return usage("bad value for --" + name);
        } else {
            return usage("unknown flag '" + a + "'");
        }
    }

    // every id must have all of its required parameters covered
    for (const std::string& id : ids) {
        const qcong::RegEntry* e = qcong::find_check(id);
        for (const qcong::ParamSpec& ps : e->sig)
            if (!ps.has_default && !ranges.count(ps.name))
                return usage("check '" + id + "' needs --" + ps.name);
    }

    std::vector<qcong::CheckResult> results;
    try {
        results = qcong::run_suite(ids, ranges, jobs, tol);
    } catch (const std::exception& ex) {
        return usage(ex.what());
    }

    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const auto& r : results) {
        switch (r.status) {
            case qcong::CheckStatus::pass: ++passed; break;
            case qcong::CheckStatus::fail: ++failed; break;
            case qcong::CheckStatus::skipped: ++skipped; break;
        }
    }

    if (json) {
        std::cout << qcong::to_json(results) << "\n";
    } else {
        for (const auto& r : results) std::cout << qcong::to_text_line(r) << "\n";
        std::cout << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    }
    return failed == 0 ? 0 : 1;
}
