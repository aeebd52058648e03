#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "meander/paths.hpp"

namespace meander {

// A corner with its good/bad classification: a peak is good iff its
// y-coordinate is odd, a valley iff its x-coordinate is even.
struct CornerClass {
    Corner corner;
    bool good = false;

    bool operator==(const CornerClass&) const = default;
};

std::vector<CornerClass> classify_corners(const DyckPath& p);

// Step position of the first bad corner, nullopt iff P has none.
std::optional<int> first_bad_corner(const DyckPath& p);

// True iff P has no bad corner (the fixed-point family of phi).
bool is_in_F(const DyckPath& p);

// Sign-reversing involution: swap the two steps of the first bad corner;
// identity on F_n. Off fixed points |traj1(P) - traj1(phi(P))| = 1.
DyckPath phi(const DyckPath& p);

// Pair involution: acts on P first, then on Q if P has no bad corner;
// identity exactly on F_n x F_n.
std::pair<DyckPath, DyckPath> psi(const DyckPath& p, const DyckPath& q);

// Block witness of a no-bad-corner path of size n = 2k+1:
//   P = N^{2a_1+1} E^{2b_1} N^{2a_2} E^{2b_2} ... N^{2a_t} E^{2b_t+1}
// with sum(a) = sum(b) = k. For n = 1 the witness degenerates to
// t = 1, a_1 = b_1 = 0.
struct FnWitness {
    std::vector<int> a;
    std::vector<int> b;

    int block_count() const { return static_cast<int>(a.size()); }
    bool operator==(const FnWitness&) const = default;
};

FnWitness fn_witness(const DyckPath& p);  // throws NotInF
DyckPath fn_path(const FnWitness& w);

// All of F_n via block witnesses (empty for even n).
std::vector<DyckPath> enumerate_F(int n);

// The size-halving bijection F_{2k+1} -> D_k: N^{a_1} E^{b_1} ... N^{a_t} E^{b_t}.
DyckPath halve_F(const DyckPath& p);  // throws NotInF

}  // namespace meander
