#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "meander/paths.hpp"

namespace meander {

// Distribution of a statistic over a family: counts[k-1] objects have
// statistic value k, for k = 1..n.
struct DistributionRow {
    int n = 0;
    std::vector<std::int64_t> counts;

    std::int64_t total() const;
    bool operator==(const DistributionRow&) const = default;
};

// Sweep guards. Pair sweeps cost c_n^2 polygon simulations; the defaults
// keep accidental invocations at desk scale. Raise the limits to go
// further (the hard ceiling rejects c_n^2 > 2^62 regardless).
struct SweepOptions {
    int max_single = 12;
    int max_pairs = 8;
    unsigned threads = 0;  // 0 = hardware concurrency
};

// Distribution of traj1 over D_n. Throws BoundExceeded past the guard.
DistributionRow table_single(int n, const SweepOptions& options = {});

// Distribution of traj over D_n x D_n. Exploits traj(P,Q) = traj(Q,P).
DistributionRow table_pairs(int n, const SweepOptions& options = {});

// Distributions of traj1 over the all-odd / all-even peak-height families.
DistributionRow table_A(int n, const SweepOptions& options = {});
DistributionRow table_B(int n, const SweepOptions& options = {});

// Signed sums sum (-1)^traj, directly from the distribution rows.
std::int64_t signed_sum_single(int n, const SweepOptions& options = {});
std::int64_t signed_sum_pairs(int n, const SweepOptions& options = {});
std::int64_t signed_sum_A(int n, const SweepOptions& options = {});
std::int64_t signed_sum_B(int n, const SweepOptions& options = {});

// Excess of even over odd up-step counts across Motzkin / Riordan paths
// of length n (independent of any traj computation).
std::int64_t motzkin_excess(int n);
std::int64_t riordan_excess(int n);

struct ClaimResult {
    std::string id;
    std::string range;
    bool pass = true;
    std::string detail;          // computed vs expected summary
    std::string counterexample;  // first offending input, empty when passing
};

struct VerificationReport {
    std::vector<ClaimResult> claims;

    bool all_pass() const;
};

struct VerifyOptions {
    int n_single = 10;
    int n_pairs = 5;
    // Empty = run everything; otherwise exact claim ids.
    std::vector<std::string> claims;
    // Test hook: replaces the billiard statistic in every traj-based claim.
    std::function<int(const DyckPath&, const DyckPath&)> traj_fn;
};

// Runs every cross-module identity at the given bounds and reports one
// entry per claim. Failures carry the first counterexample found; nothing
// throws.
VerificationReport verify_all(const VerifyOptions& options = {});

// All claim ids known to verify_all, in report order.
std::vector<std::string> verify_claim_ids();

}  // namespace meander
