#pragma once

#include <cstdint>
#include <vector>

#include "meander/paths.hpp"

namespace meander {

// Traversal orientation of a boundary step under the clockwise labeling:
// P's steps head North/East, the reversed -Q steps head South/West.
enum class Heading : std::uint8_t { North, East, South, West };

// One labeled boundary step. Midpoints are stored in doubled coordinates:
// the edge (x,y)-(x,y+1) has midpoint (2x, 2y+1), the edge (x,y)-(x+1,y)
// has midpoint (2x+1, 2y). Everything stays in exact integer arithmetic.
struct BoundaryStep {
    int label = 0;
    int a = 0;  // doubled x of the midpoint
    int b = 0;  // doubled y
    Heading heading = Heading::North;

    bool vertical() const { return a % 2 == 0; }
};

// The region enclosed by P (above the diagonal) and -Q (Q reflected over
// y = x, below it), with its 4n boundary steps labeled clockwise: 1..2n
// along P from (0,0) to (n,n), 2n+1..4n back along -Q.
class GridPolygon {
public:
    GridPolygon(const DyckPath& upper, const DyckPath& lower);

    int size() const { return n_; }
    const DyckPath& upper() const { return upper_; }
    const DyckPath& lower() const { return lower_; }
    const std::vector<BoundaryStep>& boundary() const { return boundary_; }

    // Cell (i,j) is the unit square with corners (i,j)-(i+1,j+1).
    bool is_cell(int i, int j) const;
    int cell_count() const { return cell_count_; }

    // Label of the boundary step whose midpoint is the doubled point (a,b);
    // 0 if (a,b) is not a boundary midpoint.
    int label_at(int a, int b) const;

    // True iff the edge with doubled midpoint (a,b) separates two cells.
    bool is_interior_edge(int a, int b) const;

private:
    DyckPath upper_;
    DyckPath lower_;
    int n_;
    int cell_count_ = 0;
    std::vector<BoundaryStep> boundary_;
    std::vector<std::int32_t> label_grid_;  // (2n+1)^2, 0 = none
    std::vector<std::uint8_t> cells_;       // n x n

    friend class BeamWalker;
};

// The light-beam permutation on boundary labels. pi(i) is the label hit by
// the straight 45-degree chord fired from the midpoint of step i; chords
// are chained by reflection so the cycles are exactly the trajectories.
struct BeamPermutation {
    int n = 0;
    std::vector<int> pi;  // pi[i-1] = image of label i

    int apply(int label) const { return pi[static_cast<std::size_t>(label - 1)]; }

    // Cycle decomposition, each cycle starting at its smallest label and
    // cycles ordered by smallest label.
    std::vector<std::vector<int>> cycles() const;
};

// One maximal straight chord of a trajectory: direction (dx,dy) with
// dx,dy in {-1,+1}, and the doubled line offset (b - a for slope +1
// chords, a + b for slope -1; both are odd integers, i.e. half-integer
// offsets in plain coordinates).
struct TrajectorySegment {
    std::int8_t dx = 0;
    std::int8_t dy = 0;
    int offset2 = 0;

    int slope() const { return dx == dy ? +1 : -1; }
    bool operator==(const TrajectorySegment&) const = default;
};

struct Trajectory {
    std::vector<int> labels;
    std::vector<TrajectorySegment> segments;
};

struct TrajectorySet {
    std::vector<Trajectory> cycles;

    int count() const { return static_cast<int>(cycles.size()); }
};

BeamPermutation beam_permutation(const GridPolygon& polygon);
TrajectorySet trajectories(const GridPolygon& polygon);

// Number of closed billiard trajectories in the grid polygon of (P, Q).
int traj(const DyckPath& p, const DyckPath& q);

// traj against the staircase L_n (the semimeander statistic).
int traj1(const DyckPath& p);

enum class SquareColor : std::uint8_t { White, Black };

// Checkerboard coloring by the parity of the upper-right corner (i, j).
inline SquareColor square_color(int i, int j) {
    return (i + j) % 2 == 0 ? SquareColor::White : SquareColor::Black;
}

}  // namespace meander
