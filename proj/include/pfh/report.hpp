#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pfh/f2.hpp"

namespace pfh {

struct ReportGenerator {
    std::string id;
    std::string text;
    long long grade = 0;
    bool operator==(const ReportGenerator&) const = default;
};

struct BettiEntry {
    long long grade = 0;
    long long dim = 0;
    bool operator==(const BettiEntry&) const = default;
};

struct ReportCheck {
    std::string name;
    bool pass = false;
    std::string details;
    bool operator==(const ReportCheck&) const = default;
};

struct Report {
    std::string tool;
    std::string version;
    std::string problem;
    std::vector<ReportGenerator> generators;
    std::vector<std::pair<std::string, std::string>> differential;
    std::vector<BettiEntry> betti;  // nonzero homology dims
    std::vector<ReportCheck> checks;
    bool operator==(const Report&) const = default;
};

extern const char* const kToolVersion;

Report make_report(const std::string& problem);
// generator rows, edge list and betti table of a complex, labels supplied
void attach_complex(Report& r, const ChainComplexF2& cx,
                    const std::vector<std::string>& texts);
void add_check(Report& r, const std::string& name, bool pass,
               const std::string& details);
bool all_checks_pass(const Report& r);

// canonical form: sorted keys, stable row order, trailing newline
std::string report_json(const Report& r);
Report parse_report(const std::string& text);
void write_report(const Report& r, const std::string& path);

}  // namespace pfh
