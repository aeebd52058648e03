#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meander/errors.hpp"

namespace meander {

enum class Step : std::uint8_t { North, East };

// A balanced N/E step sequence that never goes below the line y = x.
// The empty path (n = 0) is valid. Text encoding is the step word over
// {N, E}, e.g. "NNEE".
class DyckPath {
public:
    DyckPath() = default;

    // Parses a step word; rejects foreign characters, unbalanced words and
    // diagonal-crossing prefixes.
    static DyckPath parse(std::string_view word);
    static DyckPath from_steps(std::vector<Step> steps);

    int size() const { return static_cast<int>(steps_.size() / 2); }
    int length() const { return static_cast<int>(steps_.size()); }
    const std::vector<Step>& steps() const { return steps_; }

    // 1-based step access, matching the paper's p_1 ... p_2n indexing.
    Step step(int i) const { return steps_[static_cast<std::size_t>(i - 1)]; }

    std::string word() const;

    bool operator==(const DyckPath&) const = default;

private:
    struct Unchecked {};
    DyckPath(std::vector<Step> s, Unchecked) : steps_(std::move(s)) {}

    std::vector<Step> steps_;

    friend class DyckGenerator;
    friend std::vector<DyckPath> enumerate_dyck(int n);
};

enum class CornerKind : std::uint8_t { Peak, Valley };

// A peak (NE) or valley (EN). `position` is the 1-based index of the
// corner's first step; (x, y) is the common endpoint of the two steps.
struct Corner {
    int position = 0;
    CornerKind kind = CornerKind::Peak;
    int x = 0;
    int y = 0;

    int height() const { return y - x; }
    bool operator==(const Corner&) const = default;
};

// All corners of P in step-index order, coordinates filled in.
std::vector<Corner> corners(const DyckPath& p);

// The n matched-parentheses pairs (N = open, E = close), as 1-based step
// index pairs (i, j) with i < j, sorted by i. The result is a noncrossing
// perfect matching on [2n].
std::vector<std::pair<int, int>> matching_pairs(const DyckPath& p);

// Unit squares strictly between the path and the diagonal.
int area(const DyckPath& p);

enum class SpecialPath : std::uint8_t { L, Z, Zstar };

// L_n = N^n E^n, Z_n = (NE)^n, Z*_n = N (NE)^{n-1} E. Requires n >= 1.
DyckPath special_path(SpecialPath kind, int n);

// Swaps the two steps of the corner at `position`. Flipping a peak down
// requires height >= 2. Area changes by exactly -1 (peak -> valley) or
// +1 (valley -> peak).
DyckPath flip_corner(const DyckPath& p, int position);

// All-peaks-at-odd-height / all-peaks-at-even-height predicates.
bool in_A(const DyckPath& p);
bool in_B(const DyckPath& p);

// All Dyck paths of size n in lexicographic word order with N < E.
std::vector<DyckPath> enumerate_dyck(int n);

// Streaming counterpart of enumerate_dyck: copyable, restartable, same
// order. next() yields nullopt once exhausted.
class DyckGenerator {
public:
    explicit DyckGenerator(int n);
    std::optional<DyckPath> next();
    void reset();

private:
    int n_;
    bool done_ = false;
    bool fresh_ = true;
    std::vector<Step> word_;

    bool advance();
};

enum class MStep : std::uint8_t { Up, Horizontal, Down };

// Up/horizontal/down step sequence staying weakly above level 0.
// Text encoding over {U, H, D}. A Riordan path is a Motzkin path with
// no horizontal step at level 0; this is a checked predicate, not a
// separate representation.
class MotzkinPath {
public:
    MotzkinPath() = default;

    static MotzkinPath parse(std::string_view word);
    static MotzkinPath from_steps(std::vector<MStep> steps);

    int length() const { return static_cast<int>(steps_.size()); }
    const std::vector<MStep>& steps() const { return steps_; }
    std::string word() const;

    bool operator==(const MotzkinPath&) const = default;

private:
    std::vector<MStep> steps_;
};

using RiordanPath = MotzkinPath;

bool is_riordan(const MotzkinPath& m);
int up_count(const MotzkinPath& m);

// Lexicographic in the step order U < H < D.
std::vector<MotzkinPath> enumerate_motzkin(int n);
std::vector<MotzkinPath> enumerate_riordan(int n);

// Catalan, Motzkin, Riordan numbers with the standard offset-0 indexing
// (c_0 = m_0 = r_0 = 1, r_1 = 0).
std::uint64_t catalan(int n);
std::uint64_t motzkin_number(int n);
std::uint64_t riordan_number(int n);

}  // namespace meander
