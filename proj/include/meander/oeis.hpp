#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace meander {

// Reference sequences bundled as static data at build time.
enum class OeisId { A008828, A046726, A001006, A005043 };

OeisId parse_oeis_id(std::string_view id);  // throws UnknownSequence
std::string oeis_name(OeisId id);

struct OeisEntry {
    std::string label;  // "n=5 k=3" for triangles, "n=7" for sequences
    std::int64_t computed = 0;
    std::int64_t reference = 0;
    bool match = false;
};

struct OeisComparison {
    OeisId id = OeisId::A008828;
    std::string description;
    std::vector<OeisEntry> entries;

    bool all_match() const;
};

// Compares computed values against the bundled reference up to n_max
// (capped at the bundled range).
OeisComparison compare_oeis(OeisId id, int n_max);

std::string oeis_to_text(const OeisComparison& cmp);
std::string oeis_to_csv(const OeisComparison& cmp);
std::string oeis_to_json(const OeisComparison& cmp);

}  // namespace meander
