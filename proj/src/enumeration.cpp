#include "meander/enumeration.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

#include "meander/bijections.hpp"
#include "meander/billiards.hpp"
#include "meander/errors.hpp"
#include "meander/meanders.hpp"
#include "meander/parity.hpp"

namespace meander {

std::int64_t DistributionRow::total() const {
    std::int64_t sum = 0;
    for (std::int64_t c : counts) {
        sum += c;
    }
    return sum;
}

namespace {

void require_positive(int n) {
    if (n < 1) {
        throw Error("family size must be >= 1, got " + std::to_string(n));
    }
}

// Desk-scale ceiling: reject sweeps whose pair count c_n^2 would not fit
// comfortably in 64-bit counters.
void require_counter_safe(int n) {
    if (catalan(n) > (std::uint64_t{1} << 31)) {
        throw BoundExceeded("c_" + std::to_string(n) + "^2 exceeds 2^62");
    }
}

unsigned worker_count(unsigned requested, std::size_t items) {
    unsigned workers = requested != 0 ? requested : std::thread::hardware_concurrency();
    if (workers == 0) {
        workers = 1;
    }
    if (static_cast<std::size_t>(workers) > items) {
        workers = static_cast<unsigned>(items == 0 ? 1 : items);
    }
    return workers;
}

// Runs body(first, last, slot) over contiguous blocks of [0, items);
// per-worker count vectors are merged by addition, so the result does not
// depend on the schedule.
template <typename Body>
std::vector<std::int64_t> parallel_counts(std::size_t items, int slots, unsigned threads,
                                          Body body) {
    unsigned workers = worker_count(threads, items);
    std::vector<std::vector<std::int64_t>> partial(
        workers, std::vector<std::int64_t>(static_cast<std::size_t>(slots), 0));
    if (workers <= 1) {
        body(std::size_t{0}, items, partial[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        std::size_t chunk = (items + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::size_t first = static_cast<std::size_t>(w) * chunk;
            std::size_t last = std::min(items, first + chunk);
            pool.emplace_back([&body, &partial, w, first, last] {
                body(first, last, partial[w]);
            });
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }
    std::vector<std::int64_t> merged(static_cast<std::size_t>(slots), 0);
    for (const auto& part : partial) {
        for (std::size_t k = 0; k < merged.size(); ++k) {
            merged[k] += part[k];
        }
    }
    return merged;
}

DistributionRow sweep_single(int n, const std::vector<DyckPath>& family,
                             unsigned threads) {
    DistributionRow row;
    row.n = n;
    row.counts = parallel_counts(
        family.size(), n, threads,
        [&](std::size_t first, std::size_t last, std::vector<std::int64_t>& local) {
            for (std::size_t i = first; i < last; ++i) {
                local[static_cast<std::size_t>(traj1(family[i]) - 1)] += 1;
            }
        });
    return row;
}

}  // namespace

DistributionRow table_single(int n, const SweepOptions& options) {
    require_positive(n);
    if (n > options.max_single) {
        throw BoundExceeded("table_single(" + std::to_string(n) + ") exceeds guard " +
                            std::to_string(options.max_single));
    }
    return sweep_single(n, enumerate_dyck(n), options.threads);
}

DistributionRow table_pairs(int n, const SweepOptions& options) {
    require_positive(n);
    if (n > options.max_pairs) {
        throw BoundExceeded("table_pairs(" + std::to_string(n) + ") exceeds guard " +
                            std::to_string(options.max_pairs));
    }
    require_counter_safe(n);
    std::vector<DyckPath> paths = enumerate_dyck(n);
    std::size_t m = paths.size();
    DistributionRow row;
    row.n = n;
    // traj(P,Q) = traj(Q,P): sweep ordered pairs with index(P) <= index(Q)
    // and double the off-diagonal counts.
    row.counts = parallel_counts(
        m, n, options.threads,
        [&](std::size_t first, std::size_t last, std::vector<std::int64_t>& local) {
            for (std::size_t i = first; i < last; ++i) {
                for (std::size_t j = i; j < m; ++j) {
                    int k = traj(paths[i], paths[j]);
                    local[static_cast<std::size_t>(k - 1)] += i == j ? 1 : 2;
                }
            }
        });
    return row;
}

DistributionRow table_A(int n, const SweepOptions& options) {
    require_positive(n);
    if (n > options.max_single) {
        throw BoundExceeded("table_A(" + std::to_string(n) + ") exceeds guard " +
                            std::to_string(options.max_single));
    }
    std::vector<DyckPath> family;
    for (DyckPath& p : enumerate_dyck(n)) {
        if (in_A(p)) {
            family.push_back(std::move(p));
        }
    }
    return sweep_single(n, family, options.threads);
}

DistributionRow table_B(int n, const SweepOptions& options) {
    require_positive(n);
    if (n > options.max_single) {
        throw BoundExceeded("table_B(" + std::to_string(n) + ") exceeds guard " +
                            std::to_string(options.max_single));
    }
    std::vector<DyckPath> family;
    for (DyckPath& p : enumerate_dyck(n)) {
        if (in_B(p)) {
            family.push_back(std::move(p));
        }
    }
    return sweep_single(n, family, options.threads);
}

namespace {

std::int64_t signed_sum(const DistributionRow& row) {
    std::int64_t sum = 0;
    for (int k = 1; k <= row.n; ++k) {
        std::int64_t c = row.counts[static_cast<std::size_t>(k - 1)];
        sum += k % 2 == 0 ? c : -c;
    }
    return sum;
}

}  // namespace

std::int64_t signed_sum_single(int n, const SweepOptions& options) {
    return signed_sum(table_single(n, options));
}

std::int64_t signed_sum_pairs(int n, const SweepOptions& options) {
    return signed_sum(table_pairs(n, options));
}

std::int64_t signed_sum_A(int n, const SweepOptions& options) {
    return signed_sum(table_A(n, options));
}

std::int64_t signed_sum_B(int n, const SweepOptions& options) {
    return signed_sum(table_B(n, options));
}

std::int64_t motzkin_excess(int n) {
    std::int64_t excess = 0;
    for (const MotzkinPath& m : enumerate_motzkin(n)) {
        excess += up_count(m) % 2 == 0 ? 1 : -1;
    }
    return excess;
}

std::int64_t riordan_excess(int n) {
    std::int64_t excess = 0;
    for (const MotzkinPath& m : enumerate_riordan(n)) {
        excess += up_count(m) % 2 == 0 ? 1 : -1;
    }
    return excess;
}

bool VerificationReport::all_pass() const {
    return std::all_of(claims.begin(), claims.end(),
                       [](const ClaimResult& c) { return c.pass; });
}

namespace {

// Paper table literals, rows n = 1..7.
const std::vector<std::vector<std::int64_t>> kTable1 = {
    {1},
    {2, 2},
    {8, 12, 5},
    {42, 84, 56, 14},
    {262, 640, 580, 240, 42},
    {1828, 5236, 5894, 3344, 990, 132},
    {13820, 45164, 60312, 42840, 17472, 4004, 429},
};
const std::vector<std::vector<std::int64_t>> kTable2 = {
    {1},
    {1, 1},
    {2, 2, 1},
    {4, 6, 3, 1},
    {10, 16, 11, 4, 1},
    {24, 48, 37, 17, 5, 1},
    {66, 140, 126, 66, 24, 6, 1},
};

std::string word_of(const DyckPath& p) { return p.word(); }

std::int64_t expected_signed_single(int n) {
    return n % 2 == 0 ? 0 : -static_cast<std::int64_t>(catalan((n - 1) / 2));
}

std::int64_t expected_signed_pairs(int n) {
    if (n % 2 == 0) {
        return 0;
    }
    std::int64_t c = static_cast<std::int64_t>(catalan((n - 1) / 2));
    return -c * c;
}

int parity_sign(int n) { return ((n + 2) / 2) % 2 == 0 ? +1 : -1; }

// Lemma 3.1 within one oriented trajectory: slope-classed segments on one
// line share a direction, and lines whose doubled offsets differ by 2
// (mod 4) run oppositely.
bool segment_law_holds(const Trajectory& t, std::string* why) {
    for (int slope : {+1, -1}) {
        std::map<int, int> line_dir;  // offset2 -> dx
        for (const TrajectorySegment& s : t.segments) {
            if (s.slope() != slope) {
                continue;
            }
            auto [it, fresh] = line_dir.emplace(s.offset2, s.dx);
            if (!fresh && it->second != s.dx) {
                *why = "two directions on one line, offset2=" + std::to_string(s.offset2);
                return false;
            }
        }
        for (const auto& [o1, d1] : line_dir) {
            for (const auto& [o2, d2] : line_dir) {
                int gap = ((o1 - o2) % 4 + 4) % 4;
                if (gap == 2 && d1 != -d2) {
                    *why = "offsets " + std::to_string(o1) + "," + std::to_string(o2) +
                           " move the same way";
                    return false;
                }
                if (gap == 0 && d1 != d2) {
                    *why = "offsets " + std::to_string(o1) + "," + std::to_string(o2) +
                           " move oppositely";
                    return false;
                }
            }
        }
    }
    return true;
}

// Test-only second route for area: each matching pair (i, j) contributes
// the (j - i - 1)/2 unit squares of the diagonal row it encloses.
int area_via_matching_pairs(const DyckPath& p) {
    int total = 0;
    for (const auto& [i, j] : matching_pairs(p)) {
        total += (j - i - 1) / 2;
    }
    return total;
}

struct Verifier {
    explicit Verifier(const VerifyOptions& options) : opt(options) {
        traj_fn = opt.traj_fn ? opt.traj_fn
                              : [](const DyckPath& p, const DyckPath& q) {
                                    return traj(p, q);
                                };
        int n_max = std::max({opt.n_single, opt.n_pairs, 1});
        dyck.resize(static_cast<std::size_t>(n_max + 1));
        for (int n = 0; n <= n_max; ++n) {
            dyck[static_cast<std::size_t>(n)] = enumerate_dyck(n);
        }
    }

    const VerifyOptions& opt;
    std::function<int(const DyckPath&, const DyckPath&)> traj_fn;
    std::vector<std::vector<DyckPath>> dyck;
    VerificationReport report;

    bool enabled(const std::string& id) const {
        return opt.claims.empty() ||
               std::find(opt.claims.begin(), opt.claims.end(), id) != opt.claims.end();
    }

    int traj1_fn(const DyckPath& p) {
        return traj_fn(p, special_path(SpecialPath::L, p.size()));
    }

    void add(std::string id, std::string range, bool pass, std::string detail,
             std::string counterexample) {
        report.claims.push_back(ClaimResult{std::move(id), std::move(range), pass,
                                            std::move(detail), std::move(counterexample)});
    }

    DistributionRow row_single(int n) {
        DistributionRow row;
        row.n = n;
        row.counts.assign(static_cast<std::size_t>(n), 0);
        for (const DyckPath& p : dyck[static_cast<std::size_t>(n)]) {
            row.counts[static_cast<std::size_t>(traj1_fn(p) - 1)] += 1;
        }
        return row;
    }

    DistributionRow row_pairs(int n) {
        DistributionRow row;
        row.n = n;
        row.counts.assign(static_cast<std::size_t>(n), 0);
        for (const DyckPath& p : dyck[static_cast<std::size_t>(n)]) {
            for (const DyckPath& q : dyck[static_cast<std::size_t>(n)]) {
                row.counts[static_cast<std::size_t>(traj_fn(p, q) - 1)] += 1;
            }
        }
        return row;
    }

    void run();

    void claim_catalan();
    void claim_tables();
    void claim_tables_ops();
    void claim_oracle();
    void claim_eq12();
    void claim_thm13();
    void claim_phi();
    void claim_psi();
    void claim_lemma34();
    void claim_lemma35();
    void claim_corner_flip();
    void claim_parity_law();
    void claim_traj_symmetry();
    void claim_segment_law();
    void claim_figure1();
    void claim_lemma_base_values();
    void claim_eq34();
    void claim_parity_lemmas();
    void claim_bijections();
    void claim_comp_props();
    void claim_area_routes();
};

void Verifier::run() {
    claim_catalan();
    claim_tables();
    claim_tables_ops();
    claim_figure1();
    claim_oracle();
    claim_eq12();
    claim_thm13();
    claim_phi();
    claim_psi();
    claim_lemma34();
    claim_lemma35();
    claim_corner_flip();
    claim_parity_law();
    claim_traj_symmetry();
    claim_segment_law();
    claim_lemma_base_values();
    claim_eq34();
    claim_parity_lemmas();
    claim_bijections();
    claim_comp_props();
    claim_area_routes();
}

void Verifier::claim_catalan() {
    if (!enabled("catalan")) {
        return;
    }
    int bound = opt.n_single;
    for (int n = 0; n <= bound; ++n) {
        const auto& family = dyck[static_cast<std::size_t>(n)];
        if (family.size() != catalan(n)) {
            add("catalan", "n<=" + std::to_string(bound), false,
                "|D_" + std::to_string(n) + "| = " + std::to_string(family.size()) +
                    ", expected " + std::to_string(catalan(n)),
                "n=" + std::to_string(n));
            return;
        }
        for (std::size_t i = 1; i < family.size(); ++i) {
            if (!(family[i - 1].steps() < family[i].steps())) {
                add("catalan", "n<=" + std::to_string(bound), false,
                    "enumeration not strictly lexicographic",
                    "n=" + std::to_string(n) + " index=" + std::to_string(i));
                return;
            }
        }
    }
    add("catalan", "n<=" + std::to_string(bound), true,
        "counts and lexicographic order verified", "");
}

void Verifier::claim_tables() {
    if (enabled("table1")) {
        int bound = std::min(opt.n_pairs, 7);
        bool pass = true;
        std::string cex;
        for (int n = 1; n <= bound && pass; ++n) {
            DistributionRow row = row_pairs(n);
            const auto& expect = kTable1[static_cast<std::size_t>(n - 1)];
            for (int k = 1; k <= n; ++k) {
                if (row.counts[static_cast<std::size_t>(k - 1)] !=
                    expect[static_cast<std::size_t>(k - 1)]) {
                    pass = false;
                    cex = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                          ": computed " +
                          std::to_string(row.counts[static_cast<std::size_t>(k - 1)]) +
                          ", published " +
                          std::to_string(expect[static_cast<std::size_t>(k - 1)]);
                    break;
                }
            }
        }
        add("table1", "n<=" + std::to_string(bound), pass,
            pass ? "pair distribution matches the published triangle" : "row mismatch",
            cex);
    }
    if (enabled("table2")) {
        int bound = std::min(opt.n_single, 7);
        bool pass = true;
        std::string cex;
        for (int n = 1; n <= bound && pass; ++n) {
            DistributionRow row = row_single(n);
            const auto& expect = kTable2[static_cast<std::size_t>(n - 1)];
            for (int k = 1; k <= n; ++k) {
                if (row.counts[static_cast<std::size_t>(k - 1)] !=
                    expect[static_cast<std::size_t>(k - 1)]) {
                    pass = false;
                    cex = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                          ": computed " +
                          std::to_string(row.counts[static_cast<std::size_t>(k - 1)]) +
                          ", published " +
                          std::to_string(expect[static_cast<std::size_t>(k - 1)]);
                    break;
                }
            }
        }
        add("table2", "n<=" + std::to_string(bound), pass,
            pass ? "single distribution matches the published triangle" : "row mismatch",
            cex);
    }
}

void Verifier::claim_tables_ops() {
    if (!enabled("tables-ops")) {
        return;
    }
    SweepOptions sweep;
    sweep.max_single = std::max(sweep.max_single, opt.n_single);
    sweep.max_pairs = std::max(sweep.max_pairs, opt.n_pairs);
    bool pass = true;
    std::string cex;
    for (int n = 1; n <= opt.n_single && pass; ++n) {
        if (table_single(n, sweep) != row_single(n)) {
            pass = false;
            cex = "table_single(" + std::to_string(n) + ")";
        }
    }
    for (int n = 1; n <= opt.n_pairs && pass; ++n) {
        if (table_pairs(n, sweep) != row_pairs(n)) {
            pass = false;
            cex = "table_pairs(" + std::to_string(n) + ")";
        }
    }
    add("tables-ops",
        "single n<=" + std::to_string(opt.n_single) + ", pairs n<=" +
            std::to_string(opt.n_pairs),
        pass, pass ? "sweep operations agree with direct recomputation" : "sweep mismatch",
        cex);
}

void Verifier::claim_figure1() {
    if (!enabled("fig1")) {
        return;
    }
    GridPolygon polygon(DyckPath::parse("NNENNENEEE"), DyckPath::parse("NNEENENNEE"));
    auto cycles = beam_permutation(polygon).cycles();
    std::vector<std::vector<int>> partition;
    partition.reserve(cycles.size());
    for (auto& c : cycles) {
        std::sort(c.begin(), c.end());
        partition.push_back(std::move(c));
    }
    std::sort(partition.begin(), partition.end());
    std::vector<std::vector<int>> expected = {
        {1, 4, 7, 8, 9, 10, 11, 12, 13, 14, 17, 20}, {2, 3, 18, 19}, {5, 6, 15, 16}};
    bool pass = partition == expected;
    add("fig1", "n=5 fixture", pass,
        pass ? "cycle partition matches the published decomposition"
             : "cycle partition differs",
        pass ? "" : "P=NNENNENEEE, Q=NNEENENNEE");
}

void Verifier::claim_oracle() {
    if (enabled("thm1.1-pairs")) {
        bool pass = true;
        std::string cex;
        long checked = 0;
        for (int n = 1; n <= opt.n_pairs && pass; ++n) {
            for (const DyckPath& p : dyck[static_cast<std::size_t>(n)]) {
                for (const DyckPath& q : dyck[static_cast<std::size_t>(n)]) {
                    ++checked;
                    if (traj_fn(p, q) != comp(meander_from_pair(p, q))) {
                        pass = false;
                        cex = "P=" + word_of(p) + ", Q=" + word_of(q);
                        break;
                    }
                }
                if (!pass) {
                    break;
                }
            }
        }
        add("thm1.1-pairs", "n<=" + std::to_string(opt.n_pairs), pass,
            pass ? std::to_string(checked) + " pairs: traj = comp" : "oracle mismatch",
            cex);
    }
    if (enabled("thm1.1-single")) {
        bool pass = true;
        std::string cex;
        long checked = 0;
        for (int n = 1; n <= opt.n_single && pass; ++n) {
            for (const DyckPath& p : dyck[static_cast<std::size_t>(n)]) {
                ++checked;
                if (traj1_fn(p) != comp(semimeander_from_dyck(p))) {
                    pass = false;
                    cex = "P=" + word_of(p);
                    break;
                }
            }
        }
        add("thm1.1-single", "n<=" + std::to_string(opt.n_single), pass,
            pass ? std::to_string(checked) + " paths: traj1 = comp" : "oracle mismatch",
            cex);
    }
}

void Verifier::claim_eq12() {
    if (enabled("eq1")) {
        bool pass = true;
        std::string cex;
        for (int n = 1; n <= opt.n_single && pass; ++n) {
            std::int64_t got = signed_sum(row_single(n));
            std::int64_t want = expected_signed_single(n);
            if (got != want) {
                pass = false;
                cex = "n=" + std::to_string(n) + ": computed " + std::to_string(got) +
                      ", expected " + std::to_string(want);
            }
        }
        add("eq1", "n<=" + std::to_string(opt.n_single), pass,
            pass ? "signed sums match 0 / -c_k" : "signed sum mismatch", cex);
    }
    if (enabled("eq2")) {
        bool pass = true;
        std::string cex;
        for (int n = 1; n <= opt.n_pairs && pass; ++n) {
            std::int64_t got = signed_sum(row_pairs(n));
            std::int64_t want = expected_signed_pairs(n);
            if (got != want) {
                pass = false;
                cex = "n=" + std::to_string(n) + ": computed " + std::to_string(got) +
                      ", expected " + std::to_string(want);
            }
        }
        add("eq2", "n<=" + std::to_string(opt.n_pairs), pass,
            pass ? "signed sums match 0 / -c_k^2" : "signed sum mismatch", cex);
    }
}

void Verifier::claim_thm13() {
    if (!enabled("thm1.3")) {
        return;
    }
    // Restated over meanders: the component statistic alone, no billiards.
    bool pass = true;
    std::string cex;
    for (int n = 1; n <= opt.n_pairs && pass; ++n) {
        std::int64_t sum = 0;
        for (const DyckPath& p : dyck[static_cast<std::size_t>(n)]) {
            for (const DyckPath& q : dyck[static_cast<std::size_t>(n)]) {
                sum += comp(meander_from_pair(p, q)) % 2 == 0 ? 1 : -1;
            }
        }
        if (sum != expected_signed_pairs(n)) {
            pass = false;
            cex = "meanders n=" + std::to_string(n) + ": computed " + std::to_string(sum);
        }
    }
    for (int n = 1; n <= opt.n_single && pass; ++n) {
        std::int64_t sum = 0;
        for (const DyckPath& p : dyck[static_cast<std::size_t>(n)]) {
            sum += comp(semimeander_from_dyck(p)) % 2 == 0 ? 1 : -1;
        }
        if (sum != expected_signed_single(n)) {
            pass = false;
            cex = "semimeanders n=" + std::to_string(n) + ": computed " +
                  std::to_string(sum);
        }
    }
    add("thm1.3",
        "meanders n<=" + std::to_string(opt.n_pairs) + ", semimeanders n<=" +
            std::to_string(opt.n_single),
        pass, pass ? "component-count signed sums match 0 / -c_k / -c_k^2" : "mismatch",
        cex);
}

void Verifier::claim_phi() {
    if (!enabled("phi")) {
        return;
    }
    int bound = std::min(opt.n_single, 8);
    bool pass = true;
    std::string cex;
    std::string detail = "involution, traj step, fixed-point counts verified";
    for (int n = 1; n <= bound && pass; ++n) {
        std::int64_t fixed = 0;
        for (const DyckPath& p : dyck[static_cast<std::size_t>(n)]) {
            DyckPath image = phi(p);
            if (phi(image) != p) {
                pass = false;
                cex = "P=" + word_of(p);
                detail = "phi(phi(P)) != P";
                break;
            }
            if (image == p) {
                ++fixed;
                if (!is_in_F(p)) {
                    pass = false;
                    cex = "P=" + word_of(p);
                    detail = "fixed point outside F_n";
                    break;
                }
            } else {
                int delta = traj1_fn(p) - traj1_fn(image);
                if (delta != 1 && delta != -1) {
                    pass = false;
                    cex = "P=" + word_of(p);
                    detail = "|traj1(P) - traj1(phi(P))| != 1";
                    break;
                }
                if (first_bad_corner(image) != first_bad_corner(p)) {
                    pass = false;
                    cex = "P=" + word_of(p);
                    detail = "first bad corner moved";
                    break;
                }
            }
        }
        std::int64_t want =
            n % 2 == 0 ? 0 : static_cast<std::int64_t>(catalan((n - 1) / 2));
        if (pass && fixed != want) {
            pass = false;
            cex = "n=" + std::to_string(n) + ": " + std::to_string(fixed) +
                  " fixed points, expected " + std::to_string(want);
            detail = "fixed-point count off";
        }
    }
    add("phi", "n<=" + std::to_string(bound), pass, detail, cex);
}

void Verifier::claim_psi() {
    if (!enabled("psi")) {
        return;
    }
    int bound = opt.n_pairs;
    bool pass = true;
    std::string cex;
    std::string detail = "involution, traj step, fixed-point set verified";
    for (int n = 1; n <= bound && pass; ++n) {
        std::int64_t fixed = 0;
        for (const DyckPath& p : dyck[static_cast<std::size_t>(n)]) {
            for (const DyckPath& q : dyck[static_cast<std::size_t>(n)]) {
                auto [p2, q2] = psi(p, q);
                auto [p3, q3] = psi(p2, q2);
                if (p3 != p || q3 != q) {
                    pass = false;
                    cex = "P=" + word_of(p) + ", Q=" + word_of(q);
                    detail = "psi not an involution";
                    break;
                }
                if (p2 == p && q2 == q) {
                    ++fixed;
                    if (!is_in_F(p) || !is_in_F(q)) {
                        pass = false;
                        cex = "P=" + word_of(p) + ", Q=" + word_of(q);
                        detail = "fixed point outside F_n x F_n";
                        break;
                    }
                } else {
                    int delta = traj_fn(p, q) - traj_fn(p2, q2);
                    if (delta != 1 && delta != -1) {
                        pass = false;
                        cex = "P=" + word_of(p) + ", Q=" + word_of(q);
                        detail = "|traj(P,Q) - traj(psi(P,Q))| != 1";
                        break;
                    }
                }
            }
            if (!pass) {
                break;
            }
        }
        if (pass) {
            std::int64_t c = n % 2 == 0
                                 ? 0
                                 : static_cast<std::int64_t>(catalan((n - 1) / 2));
            if (fixed != c * c) {
                pass = false;
                cex = "n=" + std::to_string(n);
                detail = "fixed-point count " + std::to_string(fixed) + ", expected " +
                         std::to_string(c * c);
            }
        }
    }
    add("psi", "n<=" + std::to_string(bound), pass, detail, cex);
}

void Verifier::claim_lemma34() {
    if (!enabled("lemma3.4")) {
        return;
    }
    int bound = opt.n_single;
    bool pass = true;
    std::string cex;
    std::string detail = "F_n counts, witness enumeration and halving bijection agree";
    for (int n = 1; n <= bound && pass; ++n) {
        std::vector<DyckPath> filtered;
        for (const DyckPath& p : dyck[static_cast<std::size_t>(n)]) {
            if (is_in_F(p)) {
                filtered.push_back(p);
            }
        }
        std::vector<DyckPath> produced = enumerate_F(n);
        if (filtered != produced) {
            pass = false;
            cex = "n=" + std::to_string(n);
            detail = "enumerate_F disagrees with the brute-force filter";
            break;
        }
        std::uint64_t want = n % 2 == 0 ? 0 : catalan((n - 1) / 2);
        if (produced.size() != want) {
            pass = false;
            cex = "n=" + std::to_string(n);
            detail = "|F_n| = " + std::to_string(produced.size()) + ", expected " +
                     std::to_string(want);
            break;
        }
        std::vector<DyckPath> halved;
        for (const DyckPath& p : produced) {
            DyckPath h = halve_F(p);
            if (fn_path(fn_witness(p)) != p) {
                pass = false;
                cex = "P=" + word_of(p);
                detail = "witness round trip failed";
                break;
            }
            halved.push_back(std::move(h));
        }
        if (!pass) {
            break;
        }
        std::sort(halved.begin(), halved.end(),
                  [](const DyckPath& x, const DyckPath& y) { return x.steps() < y.steps(); });
        if (n % 2 == 1) {
            const auto& target = dyck[static_cast<std::size_t>((n - 1) / 2)];
            if (halved != target) {
                pass = false;
                cex = "n=" + std::to_string(n);
                detail = "halve_F image is not exactly D_k";
                break;
            }
        }
    }
    add("lemma3.4", "n<=" + std::to_string(bound), pass, detail, cex);
}

void Verifier::claim_lemma35() {
    if (!enabled("lemma3.5")) {
        return;
    }
    int bound = std::min(opt.n_single, 7);
    bool pass = true;
    std::string cex;
    for (int n = 1; n <= bound && pass; n += 2) {
        std::vector<DyckPath> family = enumerate_F(n);
        for (const DyckPath& p : family) {
            for (const DyckPath& q : family) {
                if (traj_fn(p, q) % 2 == 0) {
                    pass = false;
                    cex = "P=" + word_of(p) + ", Q=" + word_of(q);
                    break;
                }
            }
            if (!pass) {
                break;
            }
        }
    }
    add("lemma3.5", "odd n<=" + std::to_string(bound), pass,
        pass ? "traj odd on all of F_n x F_n" : "even traj on a fixed pair", cex);
}

void Verifier::claim_corner_flip() {
    if (!enabled("corner-flip")) {
        return;
    }
    int bound = std::min(opt.n_single, 7);
    bool pass = true;
    std::string cex;
    for (int n = 2; n <= bound && pass; ++n) {
        for (const DyckPath& p : dyck[static_cast<std::size_t>(n)]) {
            for (const Corner& c : corners(p)) {
                if (c.kind == CornerKind::Peak && c.height() < 2) {
                    continue;
                }
                DyckPath flipped = flip_corner(p, c.position);
                int delta = traj1_fn(p) - traj1_fn(flipped);
                if (delta != 1 && delta != -1) {
                    pass = false;
                    cex = "P=" + word_of(p) + ", corner " + std::to_string(c.position);
                    break;
                }
            }
            if (!pass) {
                break;
            }
        }
    }
    add("corner-flip", "n<=" + std::to_string(bound), pass,
        pass ? "every legal flip moves traj1 by exactly 1" : "flip law violated", cex);
}

void Verifier::claim_parity_law() {
    if (!enabled("parity-law")) {
        return;
    }
    int bound = opt.n_pairs;
    bool pass = true;
    std::string cex;
    for (int n = 1; n <= bound && pass; ++n) {
        for (const DyckPath& p : dyck[static_cast<std::size_t>(n)]) {
            for (const DyckPath& q : dyck[static_cast<std::size_t>(n)]) {
                if ((traj_fn(p, q) + area(p) + area(q)) % 2 != n % 2) {
                    pass = false;
                    cex = "P=" + word_of(p) + ", Q=" + word_of(q);
                    break;
                }
            }
            if (!pass) {
                break;
            }
        }
    }
    add("parity-law", "n<=" + std::to_string(bound), pass,
        pass ? "traj + area(P) + area(Q) = n (mod 2) everywhere" : "parity violated",
        cex);
}

void Verifier::claim_traj_symmetry() {
    if (!enabled("traj-sym")) {
        return;
    }
    int bound = std::min(opt.n_pairs, 6);
    bool pass = true;
    std::string cex;
    for (int n = 1; n <= bound && pass; ++n) {
        const auto& family = dyck[static_cast<std::size_t>(n)];
        for (std::size_t i = 0; i < family.size() && pass; ++i) {
            for (std::size_t j = i + 1; j < family.size(); ++j) {
                if (traj_fn(family[i], family[j]) != traj_fn(family[j], family[i])) {
                    pass = false;
                    cex = "P=" + word_of(family[i]) + ", Q=" + word_of(family[j]);
                    break;
                }
            }
        }
    }
    add("traj-sym", "n<=" + std::to_string(bound), pass,
        pass ? "traj(P,Q) = traj(Q,P)" : "symmetry violated", cex);
}

void Verifier::claim_segment_law() {
    if (!enabled("lemma3.1")) {
        return;
    }
    int bound = std::min(opt.n_pairs, 4);
    bool pass = true;
    std::string cex;
    std::string why;
    for (int n = 1; n <= bound && pass; ++n) {
        for (const DyckPath& p : dyck[static_cast<std::size_t>(n)]) {
            for (const DyckPath& q : dyck[static_cast<std::size_t>(n)]) {
                GridPolygon polygon(p, q);
                for (const Trajectory& t : trajectories(polygon).cycles) {
                    if (!segment_law_holds(t, &why)) {
                        pass = false;
                        cex = "P=" + word_of(p) + ", Q=" + word_of(q) + " (" + why + ")";
                        break;
                    }
                }
                if (!pass) {
                    break;
                }
            }
            if (!pass) {
                break;
            }
        }
    }
    add("lemma3.1", "n<=" + std::to_string(bound), pass,
        pass ? "alternating segment directions on every trajectory" : "direction law violated",
        cex);
}

void Verifier::claim_lemma_base_values() {
    if (enabled("lemma4.1")) {
        bool pass = true;
        std::string cex;
        for (int n = 1; n <= 12 && pass; ++n) {
            int got = traj1_fn(special_path(SpecialPath::Z, n + 1));
            int want = 1 + n / 2;
            if (got != want) {
                pass = false;
                cex = "traj1(Z_" + std::to_string(n + 1) + ") = " + std::to_string(got) +
                      ", expected " + std::to_string(want);
            }
        }
        add("lemma4.1", "n<=12", pass,
            pass ? "traj1(Z_{n+1}) = 1 + floor(n/2)" : "base value off", cex);
    }
    if (enabled("lemma4.3")) {
        bool pass = true;
        std::string cex;
        for (int n = 2; n <= 12 && pass; ++n) {
            int got = traj1_fn(special_path(SpecialPath::Zstar, n));
            int want = 1 + n / 2;
            if (got != want) {
                pass = false;
                cex = "traj1(Z*_" + std::to_string(n) + ") = " + std::to_string(got) +
                      ", expected " + std::to_string(want);
            }
        }
        add("lemma4.3", "2<=n<=12", pass,
            pass ? "traj1(Z*_n) = 1 + floor(n/2)" : "base value off", cex);
    }
}

void Verifier::claim_eq34() {
    if (enabled("eq3")) {
        int bound = opt.n_single - 1;
        bool pass = true;
        std::string cex;
        for (int n = 1; n <= bound && pass; ++n) {
            std::int64_t lhs = 0;
            for (const DyckPath& p : dyck[static_cast<std::size_t>(n + 1)]) {
                if (in_A(p)) {
                    lhs += traj1_fn(p) % 2 == 0 ? 1 : -1;
                }
            }
            std::int64_t rhs = parity_sign(n) * motzkin_excess(n);
            if (lhs != rhs) {
                pass = false;
                cex = "n=" + std::to_string(n) + ": lhs " + std::to_string(lhs) +
                      ", rhs " + std::to_string(rhs);
            }
        }
        add("eq3", "n<=" + std::to_string(bound), pass,
            pass ? "signed sum over A_{n+1} equals the Motzkin excess identity"
                 : "identity violated",
            cex);
    }
    if (enabled("eq4")) {
        int bound = opt.n_single;
        bool pass = true;
        std::string cex;
        for (int n = 2; n <= bound && pass; ++n) {
            std::int64_t lhs = 0;
            for (const DyckPath& p : dyck[static_cast<std::size_t>(n)]) {
                if (in_B(p)) {
                    lhs += traj1_fn(p) % 2 == 0 ? 1 : -1;
                }
            }
            std::int64_t rhs = parity_sign(n) * -riordan_excess(n);
            if (lhs != rhs) {
                pass = false;
                cex = "n=" + std::to_string(n) + ": lhs " + std::to_string(lhs) +
                      ", rhs " + std::to_string(rhs);
            }
        }
        add("eq4", "2<=n<=" + std::to_string(bound), pass,
            pass ? "signed sum over B_n equals the Riordan excess identity"
                 : "identity violated",
            cex);
    }
}

void Verifier::claim_parity_lemmas() {
    if (enabled("lemma4.2")) {
        int bound = std::min(opt.n_single - 1, 9);
        bool pass = true;
        std::string cex;
        for (int n = 1; n <= bound && pass; ++n) {
            int base = traj1_fn(special_path(SpecialPath::Z, n + 1));
            for (const DyckPath& p : dyck[static_cast<std::size_t>(n + 1)]) {
                if (!in_A(p)) {
                    continue;
                }
                bool same_parity = traj1_fn(p) % 2 == base % 2;
                bool even_ups = up_count(phi_A(p)) % 2 == 0;
                if (same_parity != even_ups) {
                    pass = false;
                    cex = "P=" + word_of(p);
                    break;
                }
            }
        }
        add("lemma4.2", "n<=" + std::to_string(bound), pass,
            pass ? "traj parity tracks even up-step counts on A_{n+1}" : "lemma violated",
            cex);
    }
    if (enabled("lemma4.4")) {
        int bound = std::min(opt.n_single, 9);
        bool pass = true;
        std::string cex;
        for (int n = 2; n <= bound && pass; ++n) {
            int base = traj1_fn(special_path(SpecialPath::Zstar, n));
            for (const DyckPath& p : dyck[static_cast<std::size_t>(n)]) {
                if (!in_B(p)) {
                    continue;
                }
                bool same_parity = traj1_fn(p) % 2 == base % 2;
                bool odd_ups = up_count(phi_B(p)) % 2 == 1;
                if (same_parity != odd_ups) {
                    pass = false;
                    cex = "P=" + word_of(p);
                    break;
                }
            }
        }
        add("lemma4.4", "2<=n<=" + std::to_string(bound), pass,
            pass ? "traj parity tracks odd up-step counts on B_n" : "lemma violated",
            cex);
    }
    if (enabled("area-bridge")) {
        int bound = std::min(opt.n_single, 9);
        bool pass = true;
        std::string cex;
        for (int n = 1; n <= bound && pass; ++n) {
            for (const DyckPath& p : dyck[static_cast<std::size_t>(n)]) {
                if (n >= 2 && in_A(p)) {
                    if (area(p) % 2 != up_count(phi_A(p)) % 2) {
                        pass = false;
                        cex = "A-path P=" + word_of(p);
                        break;
                    }
                }
                if (in_B(p)) {
                    int lhs = ((area(p) - (n - 1)) % 2 + 2) % 2;
                    int rhs = ((up_count(phi_B(p)) - 1) % 2 + 2) % 2;
                    if (lhs != rhs) {
                        pass = false;
                        cex = "B-path P=" + word_of(p);
                        break;
                    }
                }
            }
        }
        add("area-bridge", "n<=" + std::to_string(bound), pass,
            pass ? "area parity matches up-step parity through both bijections"
                 : "bridge violated",
            cex);
    }
}

void Verifier::claim_bijections() {
    if (enabled("bij-A")) {
        int bound = std::min(opt.n_single - 1, 9);
        bool pass = true;
        std::string cex;
        for (int n = 0; n <= bound && pass; ++n) {
            std::vector<MotzkinPath> image;
            for (const DyckPath& p : dyck[static_cast<std::size_t>(n + 1)]) {
                if (!in_A(p)) {
                    continue;
                }
                MotzkinPath m = phi_A(p);
                if (phi_A_inv(m) != p) {
                    pass = false;
                    cex = "P=" + word_of(p);
                    break;
                }
                image.push_back(std::move(m));
            }
            if (!pass) {
                break;
            }
            std::sort(image.begin(), image.end(),
                      [](const MotzkinPath& x, const MotzkinPath& y) {
                          return x.steps() < y.steps();
                      });
            if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
                pass = false;
                cex = "n=" + std::to_string(n) + ": phi_A not injective";
                break;
            }
            if (image.size() != motzkin_number(n) ||
                image.size() != enumerate_motzkin(n).size()) {
                pass = false;
                cex = "n=" + std::to_string(n) + ": image size " +
                      std::to_string(image.size()) + ", expected m_n = " +
                      std::to_string(motzkin_number(n));
                break;
            }
            for (const MotzkinPath& m : enumerate_motzkin(n)) {
                if (phi_A(phi_A_inv(m)) != m) {
                    pass = false;
                    cex = "M=" + m.word();
                    break;
                }
            }
        }
        add("bij-A", "lengths<=" + std::to_string(bound), pass,
            pass ? "phi_A bijective with Motzkin image counts" : "bijection broken", cex);
    }
    if (enabled("bij-B")) {
        int bound = std::min(opt.n_single, 9);
        bool pass = true;
        std::string cex;
        for (int n = 1; n <= bound && pass; ++n) {
            std::vector<MotzkinPath> image;
            for (const DyckPath& p : dyck[static_cast<std::size_t>(n)]) {
                if (!in_B(p)) {
                    continue;
                }
                RiordanPath r = phi_B(p);
                if (!is_riordan(r) || phi_B_inv(r) != p) {
                    pass = false;
                    cex = "P=" + word_of(p);
                    break;
                }
                image.push_back(std::move(r));
            }
            if (!pass) {
                break;
            }
            std::sort(image.begin(), image.end(),
                      [](const MotzkinPath& x, const MotzkinPath& y) {
                          return x.steps() < y.steps();
                      });
            if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
                pass = false;
                cex = "n=" + std::to_string(n) + ": phi_B not injective";
                break;
            }
            if (image.size() != riordan_number(n) ||
                image.size() != enumerate_riordan(n).size()) {
                pass = false;
                cex = "n=" + std::to_string(n) + ": image size " +
                      std::to_string(image.size()) + ", expected r_n = " +
                      std::to_string(riordan_number(n));
                break;
            }
            for (const MotzkinPath& r : enumerate_riordan(n)) {
                if (phi_B(phi_B_inv(r)) != r) {
                    pass = false;
                    cex = "R=" + r.word();
                    break;
                }
            }
        }
        add("bij-B", "n<=" + std::to_string(bound), pass,
            pass ? "phi_B bijective with Riordan image counts" : "bijection broken", cex);
    }
}

void Verifier::claim_comp_props() {
    if (!enabled("comp")) {
        return;
    }
    int bound = opt.n_pairs;
    bool pass = true;
    std::string cex;
    std::string detail = "comp symmetric, 1..n ranged, diagonal count c_n";
    for (int n = 1; n <= bound && pass; ++n) {
        std::int64_t full = 0;
        for (const DyckPath& p : dyck[static_cast<std::size_t>(n)]) {
            for (const DyckPath& q : dyck[static_cast<std::size_t>(n)]) {
                Meander t = meander_from_pair(p, q);
                Meander swapped;
                swapped.order = t.order;
                swapped.upper = t.lower;
                swapped.lower = t.upper;
                int c = comp(t);
                if (comp(swapped) != c) {
                    pass = false;
                    cex = "P=" + word_of(p) + ", Q=" + word_of(q);
                    detail = "comp not reflection invariant";
                    break;
                }
                if (c < 1 || c > n) {
                    pass = false;
                    cex = "P=" + word_of(p) + ", Q=" + word_of(q);
                    detail = "comp out of range";
                    break;
                }
                if (c == n) {
                    ++full;
                    if (!(p == q)) {
                        pass = false;
                        cex = "P=" + word_of(p) + ", Q=" + word_of(q);
                        detail = "comp = n off the diagonal";
                        break;
                    }
                }
            }
            if (!pass) {
                break;
            }
        }
        if (pass && full != static_cast<std::int64_t>(catalan(n))) {
            pass = false;
            cex = "n=" + std::to_string(n);
            detail = "comp = n attained " + std::to_string(full) + " times, expected c_n";
        }
    }
    add("comp", "n<=" + std::to_string(bound), pass, detail, cex);
}

void Verifier::claim_area_routes() {
    if (!enabled("area-pairs")) {
        return;
    }
    int bound = std::min(opt.n_single, 8);
    bool pass = true;
    std::string cex;
    for (int n = 0; n <= bound && pass; ++n) {
        for (const DyckPath& p : dyck[static_cast<std::size_t>(n)]) {
            if (area(p) != area_via_matching_pairs(p)) {
                pass = false;
                cex = "P=" + word_of(p);
                break;
            }
        }
    }
    add("area-pairs", "n<=" + std::to_string(bound), pass,
        pass ? "column-sum area equals the matching-pair row sum" : "routes disagree",
        cex);
}

}  // namespace

VerificationReport verify_all(const VerifyOptions& options) {
    Verifier verifier(options);
    verifier.run();
    return verifier.report;
}

std::vector<std::string> verify_claim_ids() {
    return {"catalan",  "table1",    "table2",   "tables-ops", "fig1",
            "thm1.1-pairs", "thm1.1-single", "eq1",      "eq2",        "thm1.3",
            "phi",      "psi",       "lemma3.4", "lemma3.5",   "corner-flip",
            "parity-law", "traj-sym", "lemma3.1", "lemma4.1",   "lemma4.3",
            "eq3",      "eq4",       "lemma4.2", "lemma4.4",   "area-bridge",
            "bij-A",    "bij-B",     "comp",     "area-pairs"};
}

}  // namespace meander
