#pragma once

#include <string>
#include <vector>

#include "tdmono/util/json_out.hpp"

namespace tdmono {

struct Failure {
    std::string code;     // stable kebab-case identifier, e.g. "pairing-asymmetry"
    std::string location; // where: stratum, incidence triple, cell, ...
    std::string detail;

    bool operator==(const Failure&) const = default;
};

// Outcome of a validator. Validators collect every failure rather than
// stopping at the first one.
struct CheckReport {
    std::string name;
    std::vector<Failure> failures;
    std::vector<std::string> notes; // certificates and informational lines

    bool passed() const noexcept { return failures.empty(); }
    void fail(std::string code, std::string location, std::string detail = {});
    void note(std::string line) { notes.push_back(std::move(line)); }

    bool has_failure(const std::string& code) const;
    std::string to_text() const;
    util::Json to_json() const;
};

} // namespace tdmono
