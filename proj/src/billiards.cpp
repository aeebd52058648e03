#include "meander/billiards.hpp"

#include <algorithm>
#include <array>

#include "meander/errors.hpp"

namespace meander {

namespace {

// Column tops: top[i] = y of the east step crossing column [i, i+1].
std::vector<int> column_tops(const DyckPath& p) {
    std::vector<int> top(static_cast<std::size_t>(p.size()));
    int x = 0;
    int y = 0;
    for (Step s : p.steps()) {
        if (s == Step::North) {
            ++y;
        } else {
            top[static_cast<std::size_t>(x)] = y;
            ++x;
        }
    }
    return top;
}

// Inward probe order NE, SE, SW, NW.
constexpr std::array<std::array<int, 2>, 4> kDiagonals{{{1, 1}, {1, -1}, {-1, -1}, {-1, 1}}};

}  // namespace

GridPolygon::GridPolygon(const DyckPath& upper, const DyckPath& lower)
    : upper_(upper), lower_(lower), n_(upper.size()) {
    if (upper.size() != lower.size()) {
        throw SizeMismatch("grid polygon needs equal sizes, got " +
                           std::to_string(upper.size()) + " and " +
                           std::to_string(lower.size()));
    }
    if (n_ < 1) {
        throw SizeMismatch("grid polygon needs size >= 1");
    }

    boundary_.reserve(static_cast<std::size_t>(4 * n_));
    int x = 0;
    int y = 0;
    for (int i = 1; i <= 2 * n_; ++i) {
        if (upper_.step(i) == Step::North) {
            boundary_.push_back(BoundaryStep{i, 2 * x, 2 * y + 1, Heading::North});
            ++y;
        } else {
            boundary_.push_back(BoundaryStep{i, 2 * x + 1, 2 * y, Heading::East});
            ++x;
        }
    }
    // -Q traversed from (n,n) back to (0,0): label 2n+j covers Q's step
    // q_{2n+1-j}, reflected over the diagonal. Reflection turns Q's north
    // steps into west-heading edges and its east steps into south-heading
    // ones; (qx, qy) below tracks Q's own walk.
    int qx = n_;
    int qy = n_;
    for (int j = 1; j <= 2 * n_; ++j) {
        int label = 2 * n_ + j;
        if (lower_.step(2 * n_ + 1 - j) == Step::North) {
            --qy;
            boundary_.push_back(BoundaryStep{label, 2 * qy + 1, 2 * qx, Heading::West});
        } else {
            --qx;
            boundary_.push_back(BoundaryStep{label, 2 * qy, 2 * qx + 1, Heading::South});
        }
    }

    int grid = 2 * n_ + 1;
    label_grid_.assign(static_cast<std::size_t>(grid) * grid, 0);
    for (const BoundaryStep& s : boundary_) {
        label_grid_[static_cast<std::size_t>(s.a) * grid + static_cast<std::size_t>(s.b)] =
            s.label;
    }

    std::vector<int> top_p = column_tops(upper_);
    std::vector<int> top_q = column_tops(lower_);
    cells_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (j + 1 <= top_p[static_cast<std::size_t>(i)] &&
                i + 1 <= top_q[static_cast<std::size_t>(j)]) {
                cells_[static_cast<std::size_t>(i) * n_ + j] = 1;
                ++cell_count_;
            }
        }
    }
}

bool GridPolygon::is_cell(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) {
        return false;
    }
    return cells_[static_cast<std::size_t>(i) * n_ + j] != 0;
}

int GridPolygon::label_at(int a, int b) const {
    if (a < 0 || b < 0 || a > 2 * n_ || b > 2 * n_) {
        return 0;
    }
    int grid = 2 * n_ + 1;
    return label_grid_[static_cast<std::size_t>(a) * grid + static_cast<std::size_t>(b)];
}

bool GridPolygon::is_interior_edge(int a, int b) const {
    if (a % 2 == 0 && b % 2 == 1) {  // vertical edge between cells (x-1,y),(x,y)
        int x = a / 2;
        int y = (b - 1) / 2;
        return is_cell(x - 1, y) && is_cell(x, y);
    }
    if (a % 2 == 1 && b % 2 == 0) {  // horizontal edge between cells (x,y-1),(x,y)
        int x = (a - 1) / 2;
        int y = b / 2;
        return is_cell(x, y - 1) && is_cell(x, y);
    }
    return false;
}

// Shared beam walk. Fires trajectories from the smallest unvisited label
// (initial direction: first inward diagonal in NE, SE, SW, NW order),
// chaining straight chords by reflection until each cycle closes.
class BeamWalker {
public:
    explicit BeamWalker(const GridPolygon& polygon) : g_(polygon) {}

    template <typename OnCycleStart, typename OnChord>
    void run(OnCycleStart&& on_cycle_start, OnChord&& on_chord) const {
        int total = 4 * g_.n_;
        std::vector<std::uint8_t> visited(static_cast<std::size_t>(total + 1), 0);
        long guard = 16L * g_.n_ * g_.n_ + 16;
        for (int start = 1; start <= total; ++start) {
            if (visited[static_cast<std::size_t>(start)]) {
                continue;
            }
            visited[static_cast<std::size_t>(start)] = 1;
            on_cycle_start(start);
            const BoundaryStep& s =
                g_.boundary_[static_cast<std::size_t>(start - 1)];
            int a = s.a;
            int b = s.b;
            auto [dx, dy] = first_inward(a, b);
            int from = start;
            long steps = 0;
            while (true) {
                TrajectorySegment seg{static_cast<std::int8_t>(dx),
                                      static_cast<std::int8_t>(dy),
                                      dx == dy ? b - a : a + b};
                // Fly along the chord to the next boundary midpoint.
                do {
                    a += dx;
                    b += dy;
                    if (++steps > guard) {
                        throw InternalError("beam walk exceeded step guard");
                    }
                } while (g_.is_interior_edge(a, b));
                int hit = g_.label_at(a, b);
                if (hit == 0) {
                    throw InternalError("beam left the polygon");
                }
                on_chord(from, hit, seg);
                if (hit == start) {
                    break;
                }
                if (visited[static_cast<std::size_t>(hit)]) {
                    throw InternalError("trajectory revisited a boundary step");
                }
                visited[static_cast<std::size_t>(hit)] = 1;
                from = hit;
                // Reflect: vertical edges negate the horizontal component,
                // horizontal edges the vertical one.
                if (a % 2 == 0) {
                    dx = -dx;
                } else {
                    dy = -dy;
                }
            }
        }
    }

private:
    const GridPolygon& g_;

    std::pair<int, int> first_inward(int a, int b) const {
        for (const auto& d : kDiagonals) {
            int ca;
            int cb;
            if (a % 2 == 0) {  // vertical edge: neighbor cells differ in x only
                ca = a + d[0];
                cb = b;
            } else {
                ca = a;
                cb = b + d[1];
            }
            if (g_.is_cell((ca - 1) / 2, (cb - 1) / 2)) {
                return {d[0], d[1]};
            }
        }
        throw InternalError("boundary step has no inward diagonal");
    }
};

std::vector<std::vector<int>> BeamPermutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<std::uint8_t> seen(pi.size() + 1, 0);
    for (int start = 1; start <= static_cast<int>(pi.size()); ++start) {
        if (seen[static_cast<std::size_t>(start)]) {
            continue;
        }
        std::vector<int> cycle;
        int cur = start;
        do {
            seen[static_cast<std::size_t>(cur)] = 1;
            cycle.push_back(cur);
            cur = apply(cur);
        } while (cur != start);
        out.push_back(std::move(cycle));
    }
    return out;
}

BeamPermutation beam_permutation(const GridPolygon& polygon) {
    BeamPermutation perm;
    perm.n = polygon.size();
    perm.pi.assign(static_cast<std::size_t>(4 * polygon.size()), 0);
    BeamWalker(polygon).run([](int) {},
                            [&](int from, int to, const TrajectorySegment&) {
                                perm.pi[static_cast<std::size_t>(from - 1)] = to;
                            });
    return perm;
}

TrajectorySet trajectories(const GridPolygon& polygon) {
    TrajectorySet set;
    BeamWalker(polygon).run(
        [&](int start) {
            set.cycles.emplace_back();
            set.cycles.back().labels.push_back(start);
        },
        [&](int, int to, const TrajectorySegment& seg) {
            Trajectory& t = set.cycles.back();
            t.segments.push_back(seg);
            if (to != t.labels.front()) {
                t.labels.push_back(to);
            }
        });
    return set;
}

int traj(const DyckPath& p, const DyckPath& q) {
    GridPolygon polygon(p, q);
    int count = 0;
    BeamWalker(polygon).run([&](int) { ++count; },
                            [](int, int, const TrajectorySegment&) {});
    return count;
}

int traj1(const DyckPath& p) {
    return traj(p, special_path(SpecialPath::L, p.size()));
}

}  // namespace meander
