#include "meander/oeis.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "meander/enumeration.hpp"
#include "meander/errors.hpp"
#include "meander/paths.hpp"

namespace meander {

namespace detail {
extern const char* const kOeisA008828;
extern const char* const kOeisA046726;
extern const char* const kOeisA001006;
extern const char* const kOeisA005043;
}  // namespace detail

namespace {

// Bundled text: '#' comment lines, then whitespace-separated values.
// Triangles carry one row per line; flat sequences may wrap freely.
std::vector<std::vector<std::int64_t>> parse_rows(const char* text) {
    std::vector<std::vector<std::int64_t>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::vector<std::int64_t> row;
        std::int64_t value = 0;
        while (fields >> value) {
            row.push_back(value);
        }
        if (!row.empty()) {
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<std::int64_t> parse_sequence(const char* text) {
    std::vector<std::int64_t> values;
    for (auto& row : parse_rows(text)) {
        values.insert(values.end(), row.begin(), row.end());
    }
    return values;
}

void compare_triangle(OeisComparison& cmp, const char* data, int n_max,
                      bool pairs) {
    auto rows = parse_rows(data);
    int limit = std::min<int>(n_max, static_cast<int>(rows.size()));
    SweepOptions options;
    options.max_single = std::max(options.max_single, limit);
    options.max_pairs = std::max(options.max_pairs, limit);
    for (int n = 1; n <= limit; ++n) {
        DistributionRow row =
            pairs ? table_pairs(n, options) : table_single(n, options);
        const auto& reference = rows[static_cast<std::size_t>(n - 1)];
        for (int k = 1; k <= n; ++k) {
            OeisEntry entry;
            entry.label = "n=" + std::to_string(n) + " k=" + std::to_string(k);
            entry.computed = row.counts[static_cast<std::size_t>(k - 1)];
            entry.reference = k <= static_cast<int>(reference.size())
                                  ? reference[static_cast<std::size_t>(k - 1)]
                                  : -1;
            entry.match = entry.computed == entry.reference;
            cmp.entries.push_back(std::move(entry));
        }
    }
}

void compare_sequence(OeisComparison& cmp, const char* data, int n_max,
                      bool riordan) {
    auto values = parse_sequence(data);
    int limit = std::min<int>(n_max, static_cast<int>(values.size()) - 1);
    for (int n = 0; n <= limit; ++n) {
        OeisEntry entry;
        entry.label = "n=" + std::to_string(n);
        entry.computed = riordan
                             ? static_cast<std::int64_t>(enumerate_riordan(n).size())
                             : static_cast<std::int64_t>(enumerate_motzkin(n).size());
        entry.reference = values[static_cast<std::size_t>(n)];
        entry.match = entry.computed == entry.reference;
        cmp.entries.push_back(std::move(entry));
    }
}

}  // namespace

OeisId parse_oeis_id(std::string_view id) {
    if (id == "A008828") {
        return OeisId::A008828;
    }
    if (id == "A046726") {
        return OeisId::A046726;
    }
    if (id == "A001006") {
        return OeisId::A001006;
    }
    if (id == "A005043") {
        return OeisId::A005043;
    }
    throw UnknownSequence("unsupported sequence id: " + std::string(id));
}

std::string oeis_name(OeisId id) {
    switch (id) {
        case OeisId::A008828: return "A008828";
        case OeisId::A046726: return "A046726";
        case OeisId::A001006: return "A001006";
        case OeisId::A005043: return "A005043";
    }
    return "?";
}

bool OeisComparison::all_match() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const OeisEntry& e) { return e.match; });
}

OeisComparison compare_oeis(OeisId id, int n_max) {
    OeisComparison cmp;
    cmp.id = id;
    switch (id) {
        case OeisId::A008828:
            cmp.description = "meanders of order n with k components";
            compare_triangle(cmp, detail::kOeisA008828, n_max, /*pairs=*/true);
            break;
        case OeisId::A046726:
            cmp.description = "semimeanders of order n with k components";
            compare_triangle(cmp, detail::kOeisA046726, n_max, /*pairs=*/false);
            break;
        case OeisId::A001006:
            cmp.description = "Motzkin numbers";
            compare_sequence(cmp, detail::kOeisA001006, n_max, /*riordan=*/false);
            break;
        case OeisId::A005043:
            cmp.description = "Riordan numbers";
            compare_sequence(cmp, detail::kOeisA005043, n_max, /*riordan=*/true);
            break;
    }
    return cmp;
}

std::string oeis_to_text(const OeisComparison& cmp) {
    std::ostringstream out;
    out << oeis_name(cmp.id) << ": " << cmp.description << '\n';
    for (const OeisEntry& e : cmp.entries) {
        out << "  " << e.label << "  computed " << e.computed << "  reference "
            << e.reference << "  " << (e.match ? "ok" : "MISMATCH") << '\n';
    }
    out << (cmp.all_match() ? "all values match" : "MISMATCHES PRESENT") << '\n';
    return out.str();
}

std::string oeis_to_csv(const OeisComparison& cmp) {
    std::ostringstream out;
    out << "label,computed,reference,match\n";
    for (const OeisEntry& e : cmp.entries) {
        out << e.label << ',' << e.computed << ',' << e.reference << ','
            << (e.match ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string oeis_to_json(const OeisComparison& cmp) {
    nlohmann::json j;
    j["id"] = oeis_name(cmp.id);
    j["description"] = cmp.description;
    j["all_match"] = cmp.all_match();
    nlohmann::json entries = nlohmann::json::array();
    for (const OeisEntry& e : cmp.entries) {
        entries.push_back({{"label", e.label},
                           {"computed", e.computed},
                           {"reference", e.reference},
                           {"match", e.match}});
    }
    j["entries"] = std::move(entries);
    return j.dump(2);
}

}  // namespace meander
