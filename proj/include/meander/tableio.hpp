#pragma once

#include <string>

#include "meander/enumeration.hpp"

namespace meander {

// CSV with the mandatory header "n,k,count", one row per k = 1..n.
std::string table_to_csv(const DistributionRow& row);
DistributionRow table_from_csv(const std::string& text);

// {"n": n, "counts": [c_1, ..., c_n]}
std::string table_to_json(const DistributionRow& row);
DistributionRow table_from_json(const std::string& text);

// Plain aligned listing with a total line.
std::string table_to_text(const DistributionRow& row, const std::string& title);

std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

}  // namespace meander
