#pragma once

#include <string>
#include <utility>
#include <vector>

#include "meander/paths.hpp"

namespace meander {

// A noncrossing perfect matching on {1..2n}, drawn in one half-plane.
// Arches are stored as (a, b) with a < b, sorted by a.
struct ArchConfiguration {
    int order = 0;
    std::vector<std::pair<int, int>> arches;

    // Validates that `arches` is a noncrossing perfect matching on [2*order].
    static ArchConfiguration from_matching(int order,
                                           std::vector<std::pair<int, int>> arches);

    bool operator==(const ArchConfiguration&) const = default;
};

// Upper/lower pair of arch configurations over the same 2n points.
struct Meander {
    int order = 0;
    ArchConfiguration upper;
    ArchConfiguration lower;

    bool operator==(const Meander&) const = default;
};

// Arches are exactly the matching pairs of P.
ArchConfiguration arch_config_from_dyck(const DyckPath& p);

// Inverse: open at left endpoints, close at right endpoints.
DyckPath dyck_from_arch_config(const ArchConfiguration& c);

// The fully nested matching {(i, 2n+1-i)}.
ArchConfiguration rainbow(int n);

Meander meander_from_pair(const DyckPath& p, const DyckPath& q);

// The meander of (P, L_n): rainbow lower configuration.
Meander semimeander_from_dyck(const DyckPath& p);

// Number of closed curves: connected components of the 2-regular multigraph
// upper + lower (a common arch is a valid 2-edge component).
int comp(const Meander& t);

// {"n": n, "upper": [[a,b],...], "lower": [[a,b],...]}
std::string meander_to_json(const Meander& t);
Meander meander_from_json(const std::string& text);

}  // namespace meander
