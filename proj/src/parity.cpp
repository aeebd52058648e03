#include "meander/parity.hpp"

#include <algorithm>
#include <functional>

#include "meander/errors.hpp"

namespace meander {

std::vector<CornerClass> classify_corners(const DyckPath& p) {
    std::vector<CornerClass> out;
    for (const Corner& c : corners(p)) {
        bool good = c.kind == CornerKind::Peak ? c.y % 2 == 1 : c.x % 2 == 0;
        out.push_back(CornerClass{c, good});
    }
    return out;
}

std::optional<int> first_bad_corner(const DyckPath& p) {
    for (const CornerClass& cc : classify_corners(p)) {
        if (!cc.good) {
            return cc.corner.position;
        }
    }
    return std::nullopt;
}

bool is_in_F(const DyckPath& p) { return !first_bad_corner(p).has_value(); }

DyckPath phi(const DyckPath& p) {
    std::optional<int> bad = first_bad_corner(p);
    if (!bad) {
        return p;
    }
    // The first bad corner of a peak has both coordinates even, so its
    // height is >= 2 and the flip stays in the Dyck universe.
    return flip_corner(p, *bad);
}

std::pair<DyckPath, DyckPath> psi(const DyckPath& p, const DyckPath& q) {
    if (p.size() != q.size()) {
        throw SizeMismatch("psi needs equal sizes, got " + std::to_string(p.size()) +
                           " and " + std::to_string(q.size()));
    }
    if (first_bad_corner(p)) {
        return {phi(p), q};
    }
    if (first_bad_corner(q)) {
        return {p, phi(q)};
    }
    return {p, q};
}

namespace {

// Alternating run lengths of a nonempty Dyck path: N-run, E-run, N-run, ...
// Always starts with an N-run and ends with an E-run.
struct Runs {
    std::vector<int> north;
    std::vector<int> east;
};

Runs run_decomposition(const DyckPath& p) {
    Runs runs;
    const auto& steps = p.steps();
    std::size_t i = 0;
    while (i < steps.size()) {
        int len = 0;
        Step kind = steps[i];
        while (i < steps.size() && steps[i] == kind) {
            ++len;
            ++i;
        }
        (kind == Step::North ? runs.north : runs.east).push_back(len);
    }
    return runs;
}

}  // namespace

FnWitness fn_witness(const DyckPath& p) {
    if (p.size() == 0) {
        throw NotInF("the empty path has no block witness");
    }
    Runs runs = run_decomposition(p);
    std::size_t t = runs.north.size();
    FnWitness w;
    w.a.resize(t);
    w.b.resize(t);
    bool ok = runs.east.size() == t && runs.north[0] % 2 == 1 &&
              runs.east[t - 1] % 2 == 1;
    for (std::size_t i = 1; ok && i < t; ++i) {
        ok = runs.north[i] % 2 == 0 && runs.east[i - 1] % 2 == 0;
    }
    if (!ok) {
        throw NotInF("path " + p.word() + " is not of the no-bad-corner block form");
    }
    w.a[0] = (runs.north[0] - 1) / 2;
    w.b[t - 1] = (runs.east[t - 1] - 1) / 2;
    for (std::size_t i = 1; i < t; ++i) {
        w.a[i] = runs.north[i] / 2;
        w.b[i - 1] = runs.east[i - 1] / 2;
    }
    return w;
}

DyckPath fn_path(const FnWitness& w) {
    std::vector<Step> steps;
    std::size_t t = w.a.size();
    for (std::size_t i = 0; i < t; ++i) {
        int norths = 2 * w.a[i] + (i == 0 ? 1 : 0);
        int easts = 2 * w.b[i] + (i + 1 == t ? 1 : 0);
        steps.insert(steps.end(), static_cast<std::size_t>(norths), Step::North);
        steps.insert(steps.end(), static_cast<std::size_t>(easts), Step::East);
    }
    return DyckPath::from_steps(std::move(steps));
}

namespace {

// All compositions of k into t positive parts.
void compositions(int k, int t, std::vector<int>& parts,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (t == 1) {
        parts.push_back(k);
        emit(parts);
        parts.pop_back();
        return;
    }
    for (int first = 1; first <= k - (t - 1); ++first) {
        parts.push_back(first);
        compositions(k - first, t - 1, parts, emit);
        parts.pop_back();
    }
}

}  // namespace

std::vector<DyckPath> enumerate_F(int n) {
    std::vector<DyckPath> out;
    if (n < 1 || n % 2 == 0) {
        return out;
    }
    if (n == 1) {
        out.push_back(DyckPath::parse("NE"));
        return out;
    }
    int k = (n - 1) / 2;
    for (int t = 1; t <= k; ++t) {
        std::vector<std::vector<int>> as;
        std::vector<int> scratch;
        compositions(k, t, scratch,
                     [&](const std::vector<int>& c) { as.push_back(c); });
        for (const auto& a : as) {
            for (const auto& b : as) {
                // Partial-sum domination keeps the doubled path weakly
                // above the diagonal.
                int sum_a = 0;
                int sum_b = 0;
                bool dyck = true;
                for (int i = 0; i < t && dyck; ++i) {
                    sum_a += a[static_cast<std::size_t>(i)];
                    sum_b += b[static_cast<std::size_t>(i)];
                    dyck = sum_a >= sum_b;
                }
                if (dyck) {
                    out.push_back(fn_path(FnWitness{a, b}));
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const DyckPath& x, const DyckPath& y) {
        return x.steps() < y.steps();
    });
    return out;
}

DyckPath halve_F(const DyckPath& p) {
    FnWitness w = fn_witness(p);
    std::vector<Step> steps;
    for (std::size_t i = 0; i < w.a.size(); ++i) {
        steps.insert(steps.end(), static_cast<std::size_t>(w.a[i]), Step::North);
        steps.insert(steps.end(), static_cast<std::size_t>(w.b[i]), Step::East);
    }
    return DyckPath::from_steps(std::move(steps));
}

}  // namespace meander
