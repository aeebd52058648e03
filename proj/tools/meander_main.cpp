#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "meander/billiards.hpp"
#include "meander/enumeration.hpp"
#include "meander/errors.hpp"
#include "meander/meanders.hpp"
#include "meander/oeis.hpp"
#include "meander/parity.hpp"
#include "meander/render.hpp"
#include "meander/tableio.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBoundExceeded = 3;

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw meander::Error("cannot open output file " + out_path);
    }
    file << text;
}

std::string cycles_string(const meander::BeamPermutation& perm) {
    std::ostringstream out;
    for (const auto& cycle : perm.cycles()) {
        out << '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i > 0) {
                out << ',';
            }
            out << cycle[i];
        }
        out << ')';
    }
    return out.str();
}

std::vector<std::string> split_commas(const std::string& list) {
    std::vector<std::string> parts;
    std::istringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) {
            parts.push_back(item);
        }
    }
    return parts;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Billiard-trajectory statistics on Dyck paths, meanders and semimeanders"};
    app.require_subcommand(1);

    // traj
    std::string traj_p;
    std::string traj_q;
    bool traj_cycles = false;
    CLI::App* traj_cmd =
        app.add_subcommand("traj", "Count billiard trajectories of (P, Q); Q defaults to L_n");
    traj_cmd->add_option("P", traj_p, "upper step word over {N,E}")->required();
    traj_cmd->add_option("Q", traj_q, "lower step word (default: L_n)");
    traj_cmd->add_flag("--cycles,-c", traj_cycles, "also print the cycle decomposition");

    // table
    std::string table_mode;
    int table_n = 0;
    std::string table_format = "text";
    std::string table_out;
    bool table_force = false;
    CLI::App* table_cmd = app.add_subcommand("table", "Trajectory distribution tables");
    table_cmd->add_option("mode", table_mode, "single | pairs | A | B")
        ->required()
        ->check(CLI::IsMember({"single", "pairs", "A", "B"}));
    table_cmd->add_option("n", table_n, "path size")->required();
    table_cmd->add_option("--format", table_format, "csv | json | text")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    table_cmd->add_option("--out", table_out, "output file (default: stdout)");
    table_cmd->add_flag("--force", table_force, "lift the sweep size guard");

    // verify
    int verify_single = 10;
    int verify_pairs = 5;
    int verify_both = 0;
    std::string verify_claims;
    std::string verify_format = "text";
    std::string verify_out;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Re-check every published identity and table");
    verify_cmd->add_option("--n-single", verify_single, "bound for single-path sweeps");
    verify_cmd->add_option("--n-pairs", verify_pairs, "bound for pair sweeps");
    verify_cmd->add_option("--n", verify_both, "set both bounds at once");
    verify_cmd->add_option("--claims", verify_claims, "comma-separated claim ids");
    verify_cmd->add_option("--format", verify_format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    verify_cmd->add_option("--out", verify_out, "output file (default: stdout)");

    // render
    std::string render_kind;
    std::string render_p;
    std::string render_q;
    std::string render_out;
    int render_scale = 24;
    CLI::App* render_cmd = app.add_subcommand("render", "Emit an SVG drawing");
    render_cmd->add_option("kind", render_kind, "polygon | meander | semimeander")
        ->required()
        ->check(CLI::IsMember({"polygon", "meander", "semimeander"}));
    render_cmd->add_option("P", render_p, "upper step word")->required();
    render_cmd->add_option("Q", render_q, "lower step word (polygon/meander only)");
    render_cmd->add_option("--out", render_out, "output file (default: stdout)");
    render_cmd->add_option("--scale", render_scale, "pixels per lattice unit (>= 4)");

    // oeis
    std::string oeis_id;
    int oeis_n_max = 12;
    std::string oeis_format = "text";
    std::string oeis_out;
    CLI::App* oeis_cmd =
        app.add_subcommand("oeis", "Compare computed values against bundled references");
    oeis_cmd->add_option("id", oeis_id, "A008828 | A046726 | A001006 | A005043")
        ->required();
    oeis_cmd->add_option("n_max", oeis_n_max, "largest n to compare");
    oeis_cmd->add_option("--format", oeis_format, "csv | json | text")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    oeis_cmd->add_option("--out", oeis_out, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    }

    try {
        if (traj_cmd->parsed()) {
            meander::DyckPath p = meander::DyckPath::parse(traj_p);
            meander::DyckPath q =
                traj_q.empty()
                    ? meander::special_path(meander::SpecialPath::L, p.size())
                    : meander::DyckPath::parse(traj_q);
            meander::GridPolygon polygon(p, q);
            meander::BeamPermutation perm = meander::beam_permutation(polygon);
            std::cout << perm.cycles().size() << '\n';
            if (traj_cycles) {
                std::cout << cycles_string(perm) << '\n';
            }
            return 0;
        }

        if (table_cmd->parsed()) {
            meander::SweepOptions options;
            if (table_force) {
                options.max_single = std::max(options.max_single, table_n);
                options.max_pairs = std::max(options.max_pairs, table_n);
            }
            meander::DistributionRow row;
            std::string title;
            if (table_mode == "single") {
                row = meander::table_single(table_n, options);
                title = "traj distribution over Dyck paths";
            } else if (table_mode == "pairs") {
                row = meander::table_pairs(table_n, options);
                title = "traj distribution over ordered pairs";
            } else if (table_mode == "A") {
                row = meander::table_A(table_n, options);
                title = "traj distribution over all-odd-peak paths";
            } else {
                row = meander::table_B(table_n, options);
                title = "traj distribution over all-even-peak paths";
            }
            std::string text;
            if (table_format == "csv") {
                text = meander::table_to_csv(row);
            } else if (table_format == "json") {
                text = meander::table_to_json(row) + "\n";
            } else {
                text = meander::table_to_text(row, title);
            }
            write_output(table_out, text);
            return 0;
        }

        if (verify_cmd->parsed()) {
            meander::VerifyOptions options;
            if (verify_both > 0) {
                options.n_single = verify_both;
                options.n_pairs = verify_both;
            } else {
                options.n_single = verify_single;
                options.n_pairs = verify_pairs;
            }
            if (!verify_claims.empty()) {
                options.claims = split_commas(verify_claims);
                std::vector<std::string> known = meander::verify_claim_ids();
                for (const std::string& id : options.claims) {
                    if (std::find(known.begin(), known.end(), id) == known.end()) {
                        std::cerr << "unknown claim id: " << id << '\n';
                        return kExitBadInput;
                    }
                }
            }
            meander::VerificationReport report = meander::verify_all(options);
            std::string text = verify_format == "json"
                                   ? meander::report_to_json(report) + "\n"
                                   : meander::report_to_text(report);
            write_output(verify_out, text);
            return report.all_pass() ? 0 : kExitVerifyFailed;
        }

        if (render_cmd->parsed()) {
            meander::RenderOptions options;
            options.scale = render_scale;
            meander::DyckPath p = meander::DyckPath::parse(render_p);
            std::string svg;
            if (render_kind == "polygon") {
                meander::DyckPath q =
                    render_q.empty()
                        ? meander::special_path(meander::SpecialPath::L, p.size())
                        : meander::DyckPath::parse(render_q);
                svg = meander::render_polygon_svg(p, q, options);
            } else if (render_kind == "meander") {
                meander::DyckPath q =
                    render_q.empty()
                        ? meander::special_path(meander::SpecialPath::L, p.size())
                        : meander::DyckPath::parse(render_q);
                svg = meander::render_meander_svg(meander::meander_from_pair(p, q),
                                                  options);
            } else {
                svg = meander::render_meander_svg(meander::semimeander_from_dyck(p),
                                                  options);
            }
            write_output(render_out, svg);
            return 0;
        }

        if (oeis_cmd->parsed()) {
            meander::OeisComparison cmp =
                meander::compare_oeis(meander::parse_oeis_id(oeis_id), oeis_n_max);
            std::string text;
            if (oeis_format == "csv") {
                text = meander::oeis_to_csv(cmp);
            } else if (oeis_format == "json") {
                text = meander::oeis_to_json(cmp) + "\n";
            } else {
                text = meander::oeis_to_text(cmp);
            }
            write_output(oeis_out, text);
            return cmp.all_match() ? 0 : kExitVerifyFailed;
        }
    } catch (const meander::BoundExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBoundExceeded;
    } catch (const meander::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return 0;
}
