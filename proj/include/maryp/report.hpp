#pragma once

// Self-auditing congruence reports. Every sample carries the argument it was
// computed at and its least nonnegative residue, so a report can be checked
// by eye without rerunning anything.
//
// JSON shape (pinned by golden files):
//   {check, params, modulus, samples: [{n, arg, residue}], violations, verdict}
// Big values are emitted as decimal strings. Anything check-specific
// (expected residue, skipped samples, per-sample moduli) goes under params.

#include <maryp/bigint.hpp>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace maryp {

using Json = nlohmann::ordered_json;

struct Sample {
    long n = 0;
    Int arg;
    Int residue;
};

struct CongruenceReport {
    std::string check;
    Json params = Json::object();
    Int modulus = 1;
    Int expected_residue = 0;
    std::vector<Sample> samples;
    std::vector<long> violations;
    std::vector<long> skipped;

    bool pass() const { return violations.empty(); }
    std::string verdict() const { return pass() ? "pass" : "fail"; }

    // Records value's residue at sample point n; flags a violation when it
    // differs from expected_residue.
    void add_sample(long n, const Int& arg, const Int& value) {
        Int residue = mod_floor(value, modulus);
        if (residue != mod_floor(expected_residue, modulus)) violations.push_back(n);
        samples.push_back({n, arg, std::move(residue)});
    }

    // Same, but checked against an explicit per-sample modulus.
    void add_sample_mod(long n, const Int& arg, const Int& value, const Int& sample_modulus) {
        Int residue = mod_floor(value, sample_modulus);
        if (residue != mod_floor(expected_residue, sample_modulus)) violations.push_back(n);
        samples.push_back({n, arg, std::move(residue)});
    }
};

inline Json to_json(const CongruenceReport& r) {
    Json j;
    j["check"] = r.check;
    Json params = r.params;
    params["expected_residue"] = r.expected_residue.get_str();
    if (!r.skipped.empty()) params["skipped"] = r.skipped;
    j["params"] = params;
    j["modulus"] = r.modulus.get_str();
    Json samples = Json::array();
    for (const Sample& s : r.samples)
        samples.push_back({{"n", s.n}, {"arg", s.arg.get_str()}, {"residue", s.residue.get_str()}});
    j["samples"] = samples;
    j["violations"] = r.violations;
    j["verdict"] = r.verdict();
    return j;
}

inline std::string to_csv(const CongruenceReport& r) {
    std::ostringstream os;
    os << "n,arg,residue,violation\n";
    for (const Sample& s : r.samples) {
        bool bad = false;
        for (long v : r.violations)
            if (v == s.n) bad = true;
        os << s.n << ',' << s.arg.get_str() << ',' << s.residue.get_str() << ','
           << (bad ? 1 : 0) << '\n';
    }
    return os.str();
}

inline std::string to_text(const CongruenceReport& r) {
    std::ostringstream os;
    os << "check:    " << r.check << '\n'
       << "modulus:  " << r.modulus.get_str() << '\n'
       << "expected: " << r.expected_residue.get_str() << '\n'
       << "samples:  " << r.samples.size() << '\n';
    if (!r.skipped.empty()) {
        os << "skipped: ";
        for (long n : r.skipped) os << ' ' << n;
        os << '\n';
    }
    for (const Sample& s : r.samples)
        os << "  n=" << s.n << "  arg=" << s.arg.get_str() << "  residue=" << s.residue.get_str()
           << '\n';
    if (r.violations.empty()) {
        os << "verdict:  pass\n";
    } else {
        os << "violations:";
        for (long v : r.violations) os << ' ' << v;
        os << "\nverdict:  fail\n";
    }
    return os.str();
}

}  // namespace maryp
