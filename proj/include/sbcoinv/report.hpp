#pragma once

/**
 * @file report.hpp
 * @brief Verification reports and their text / JSON renderings.
 */

#include "combinatorics.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace sbcoinv {

enum class Format { text, json };

enum class Status { pass, fail, note };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::note: return "note";
    }
    return "fail";
}

struct CheckRecord {
    std::string name;
    Status status = Status::pass;
    std::string witness;
    std::int64_t ms = 0;
};

struct Report {
    std::string suite;
    int n = 0;
    std::vector<CheckRecord> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (c.status == Status::fail) return false;
        return true;
    }
};

inline nlohmann::ordered_json to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["n"] = r.n;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks)
        j["checks"].push_back({{"name", c.name}, {"status", status_name(c.status)}, {"witness", c.witness}, {"ms", c.ms}});
    j["ok"] = r.ok();
    return j;
}

inline std::string render(const Report& r, Format f) {
    if (f == Format::json) return to_json(r).dump(2) + "\n";
    std::ostringstream os;
    os << "suite " << r.suite << " n=" << r.n << "\n";
    for (const auto& c : r.checks) {
        os << "  [" << status_name(c.status) << "] " << c.name << " (" << c.ms << " ms)";
        if (!c.witness.empty()) os << ": " << c.witness;
        os << "\n";
    }
    os << (r.ok() ? "ok" : "FAILED") << "\n";
    return os.str();
}

inline nlohmann::ordered_json series_json(const BiSeries& s) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [key, c] : s.coeffs()) j[std::to_string(key.first) + "," + std::to_string(key.second)] = c;
    return j;
}

/// The closed series, and when supplied the brute-force one next to it with the first differing bidegree.
inline std::string emit_hilbert(int n, const BiSeries& closed, const std::optional<BiSeries>& brute, Format f) {
    std::optional<BiSeries::Key> diff;
    if (brute) diff = first_difference(closed, *brute);
    if (f == Format::json) {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["closed"] = series_json(closed);
        if (brute) {
            j["brute"] = series_json(*brute);
            j["match"] = !diff.has_value();
            if (diff) j["first_difference"] = std::to_string(diff->first) + "," + std::to_string(diff->second);
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "closed: " << closed.to_string() << "\n";
    if (brute) {
        os << "brute:  " << brute->to_string() << "\n";
        if (diff) {
            os << "differ at (d,k)=(" << diff->first << "," << diff->second << "): closed " << closed.coeff(diff->first, diff->second)
               << " vs brute " << brute->coeff(diff->first, diff->second) << "\n";
        } else {
            os << "match\n";
        }
    }
    return os.str();
}

}  // namespace sbcoinv
