#include "meander/tableio.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "meander/errors.hpp"

namespace meander {

std::string table_to_csv(const DistributionRow& row) {
    std::ostringstream out;
    out << "n,k,count\n";
    for (int k = 1; k <= row.n; ++k) {
        out << row.n << ',' << k << ',' << row.counts[static_cast<std::size_t>(k - 1)]
            << '\n';
    }
    return out.str();
}

DistributionRow table_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "n,k,count") {
        throw Error("missing CSV header \"n,k,count\"");
    }
    DistributionRow row;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream fields(line);
        std::string n_str;
        std::string k_str;
        std::string count_str;
        if (!std::getline(fields, n_str, ',') || !std::getline(fields, k_str, ',') ||
            !std::getline(fields, count_str)) {
            throw Error("malformed CSV row: " + line);
        }
        int n = std::stoi(n_str);
        int k = std::stoi(k_str);
        std::int64_t count = std::stoll(count_str);
        if (row.n == 0) {
            row.n = n;
            row.counts.assign(static_cast<std::size_t>(n), 0);
        }
        if (n != row.n || k < 1 || k > row.n) {
            throw Error("inconsistent CSV row: " + line);
        }
        row.counts[static_cast<std::size_t>(k - 1)] = count;
    }
    if (row.n == 0) {
        throw Error("empty CSV table");
    }
    return row;
}

std::string table_to_json(const DistributionRow& row) {
    nlohmann::json j;
    j["n"] = row.n;
    j["counts"] = row.counts;
    return j.dump();
}

DistributionRow table_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    DistributionRow row;
    row.n = j.at("n").get<int>();
    row.counts = j.at("counts").get<std::vector<std::int64_t>>();
    if (static_cast<int>(row.counts.size()) != row.n) {
        throw Error("counts length does not match n");
    }
    return row;
}

std::string table_to_text(const DistributionRow& row, const std::string& title) {
    std::ostringstream out;
    out << title << " (n=" << row.n << ")\n";
    out << "  k  count\n";
    for (int k = 1; k <= row.n; ++k) {
        out << std::setw(3) << k << "  " << row.counts[static_cast<std::size_t>(k - 1)]
            << '\n';
    }
    out << "total " << row.total() << '\n';
    return out.str();
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::json j;
    j["all_pass"] = report.all_pass();
    nlohmann::json claims = nlohmann::json::array();
    for (const ClaimResult& c : report.claims) {
        nlohmann::json entry;
        entry["id"] = c.id;
        entry["range"] = c.range;
        entry["pass"] = c.pass;
        entry["detail"] = c.detail;
        if (!c.counterexample.empty()) {
            entry["counterexample"] = c.counterexample;
        }
        claims.push_back(std::move(entry));
    }
    j["claims"] = std::move(claims);
    return j.dump(2);
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream out;
    for (const ClaimResult& c : report.claims) {
        out << (c.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(14) << c.id
            << " [" << c.range << "] " << c.detail;
        if (!c.counterexample.empty()) {
            out << " -- counterexample: " << c.counterexample;
        }
        out << '\n';
    }
    out << (report.all_pass() ? "all claims passed" : "FAILURES PRESENT") << '\n';
    return out.str();
}

}  // namespace meander
