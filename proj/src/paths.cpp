#include "meander/paths.hpp"

#include <algorithm>
#include <array>

namespace meander {

namespace {

void validate(const std::vector<Step>& steps) {
    int north = 0;
    int east = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] == Step::North) {
            ++north;
        } else {
            ++east;
        }
        if (east > north) {
            std::string prefix;
            prefix.reserve(i + 1);
            for (std::size_t j = 0; j <= i; ++j) {
                prefix += steps[j] == Step::North ? 'N' : 'E';
            }
            throw BelowDiagonal("path goes below the diagonal after prefix \"" + prefix + "\"");
        }
    }
    if (north != east) {
        throw NotBalanced("unbalanced step word: " + std::to_string(north) + " N vs " +
                          std::to_string(east) + " E");
    }
}

}  // namespace

DyckPath DyckPath::parse(std::string_view word) {
    std::vector<Step> steps;
    steps.reserve(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        switch (word[i]) {
            case 'N': steps.push_back(Step::North); break;
            case 'E': steps.push_back(Step::East); break;
            default:
                throw InvalidCharacter(std::string("invalid step character '") + word[i] +
                                       "' at position " + std::to_string(i + 1));
        }
    }
    return from_steps(std::move(steps));
}

DyckPath DyckPath::from_steps(std::vector<Step> steps) {
    validate(steps);
    return DyckPath(std::move(steps), Unchecked{});
}

std::string DyckPath::word() const {
    std::string w;
    w.reserve(steps_.size());
    for (Step s : steps_) {
        w += s == Step::North ? 'N' : 'E';
    }
    return w;
}

std::vector<Corner> corners(const DyckPath& p) {
    std::vector<Corner> out;
    int x = 0;
    int y = 0;
    const auto& steps = p.steps();
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        if (steps[i] == Step::North) {
            ++y;
        } else {
            ++x;
        }
        if (steps[i] != steps[i + 1]) {
            CornerKind kind =
                steps[i] == Step::North ? CornerKind::Peak : CornerKind::Valley;
            out.push_back(Corner{static_cast<int>(i + 1), kind, x, y});
        }
    }
    return out;
}

std::vector<std::pair<int, int>> matching_pairs(const DyckPath& p) {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> open;
    const auto& steps = p.steps();
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] == Step::North) {
            open.push_back(static_cast<int>(i + 1));
        } else {
            pairs.emplace_back(open.back(), static_cast<int>(i + 1));
            open.pop_back();
        }
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

int area(const DyckPath& p) {
    int x = 0;
    int y = 0;
    int total = 0;
    for (Step s : p.steps()) {
        if (s == Step::North) {
            ++y;
        } else {
            total += y - x - 1;
            ++x;
        }
    }
    return total;
}

DyckPath special_path(SpecialPath kind, int n) {
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(2 * n));
    switch (kind) {
        case SpecialPath::L:
            steps.assign(static_cast<std::size_t>(n), Step::North);
            steps.insert(steps.end(), static_cast<std::size_t>(n), Step::East);
            break;
        case SpecialPath::Z:
            for (int i = 0; i < n; ++i) {
                steps.push_back(Step::North);
                steps.push_back(Step::East);
            }
            break;
        case SpecialPath::Zstar:
            steps.push_back(Step::North);
            for (int i = 0; i < n - 1; ++i) {
                steps.push_back(Step::North);
                steps.push_back(Step::East);
            }
            steps.push_back(Step::East);
            break;
    }
    return DyckPath::from_steps(std::move(steps));
}

DyckPath flip_corner(const DyckPath& p, int position) {
    if (position < 1 || position + 1 > p.length() ||
        p.step(position) == p.step(position + 1)) {
        throw NotACorner("steps " + std::to_string(position) + "," +
                         std::to_string(position + 1) + " do not form a corner");
    }
    if (p.step(position) == Step::North) {
        // Peak: its intersection point (x, y) must satisfy y - x >= 2.
        int x = 0;
        int y = 0;
        for (int i = 1; i <= position; ++i) {
            if (p.step(i) == Step::North) {
                ++y;
            } else {
                ++x;
            }
        }
        if (y - x < 2) {
            throw WouldCrossDiagonal("peak at height 1 cannot be flipped down");
        }
    }
    std::vector<Step> steps = p.steps();
    std::swap(steps[static_cast<std::size_t>(position - 1)],
              steps[static_cast<std::size_t>(position)]);
    return DyckPath::from_steps(std::move(steps));
}

bool in_A(const DyckPath& p) {
    for (const Corner& c : corners(p)) {
        if (c.kind == CornerKind::Peak && c.height() % 2 == 0) {
            return false;
        }
    }
    return true;
}

bool in_B(const DyckPath& p) {
    for (const Corner& c : corners(p)) {
        if (c.kind == CornerKind::Peak && c.height() % 2 == 1) {
            return false;
        }
    }
    return true;
}

std::vector<DyckPath> enumerate_dyck(int n) {
    std::vector<DyckPath> out;
    std::vector<Step> word(static_cast<std::size_t>(2 * n));
    // Depth-first with N tried before E gives lexicographic order.
    auto rec = [&](auto&& self, int pos, int north, int east) -> void {
        if (pos == 2 * n) {
            out.push_back(DyckPath(word, DyckPath::Unchecked{}));
            return;
        }
        if (north < n) {
            word[static_cast<std::size_t>(pos)] = Step::North;
            self(self, pos + 1, north + 1, east);
        }
        if (east < north) {
            word[static_cast<std::size_t>(pos)] = Step::East;
            self(self, pos + 1, north, east + 1);
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

DyckGenerator::DyckGenerator(int n) : n_(n) { reset(); }

void DyckGenerator::reset() {
    word_.assign(static_cast<std::size_t>(n_), Step::North);
    word_.insert(word_.end(), static_cast<std::size_t>(n_), Step::East);
    done_ = false;
    fresh_ = true;
}

std::optional<DyckPath> DyckGenerator::next() {
    if (done_) {
        return std::nullopt;
    }
    if (fresh_) {
        fresh_ = false;
    } else if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    return DyckPath::from_steps(word_);
}

bool DyckGenerator::advance() {
    // Find the rightmost N that can become E with the prefix still valid,
    // then fill the suffix with the smallest valid completion.
    int len = 2 * n_;
    int north = 0;
    int east = 0;
    for (Step s : word_) {
        (s == Step::North ? north : east)++;
    }
    for (int i = len - 1; i >= 0; --i) {
        Step s = word_[static_cast<std::size_t>(i)];
        if (s == Step::North) {
            --north;
            // Prefix before i has `north` N and `east` E; placing E at i
            // needs east+1 <= north (which also implies east+1 <= n).
            if (east + 1 <= north) {
                word_[static_cast<std::size_t>(i)] = Step::East;
                int nn = north;
                int ne = east + 1;
                for (int j = i + 1; j < len; ++j) {
                    if (nn < n_) {
                        word_[static_cast<std::size_t>(j)] = Step::North;
                        ++nn;
                    } else {
                        word_[static_cast<std::size_t>(j)] = Step::East;
                        ++ne;
                    }
                }
                return true;
            }
        } else {
            --east;
        }
    }
    return false;
}

MotzkinPath MotzkinPath::parse(std::string_view word) {
    std::vector<MStep> steps;
    steps.reserve(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        switch (word[i]) {
            case 'U': steps.push_back(MStep::Up); break;
            case 'H': steps.push_back(MStep::Horizontal); break;
            case 'D': steps.push_back(MStep::Down); break;
            default:
                throw InvalidCharacter(std::string("invalid step character '") + word[i] +
                                       "' at position " + std::to_string(i + 1));
        }
    }
    return from_steps(std::move(steps));
}

MotzkinPath MotzkinPath::from_steps(std::vector<MStep> steps) {
    int height = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        switch (steps[i]) {
            case MStep::Up: ++height; break;
            case MStep::Down: --height; break;
            case MStep::Horizontal: break;
        }
        if (height < 0) {
            throw BelowDiagonal("path goes below level 0 at position " +
                                std::to_string(i + 1));
        }
    }
    if (height != 0) {
        throw NotBalanced("unbalanced up/down steps: ends at level " +
                          std::to_string(height));
    }
    MotzkinPath m;
    m.steps_ = std::move(steps);
    return m;
}

std::string MotzkinPath::word() const {
    std::string w;
    w.reserve(steps_.size());
    for (MStep s : steps_) {
        w += s == MStep::Up ? 'U' : s == MStep::Horizontal ? 'H' : 'D';
    }
    return w;
}

bool is_riordan(const MotzkinPath& m) {
    int height = 0;
    for (MStep s : m.steps()) {
        switch (s) {
            case MStep::Up: ++height; break;
            case MStep::Down: --height; break;
            case MStep::Horizontal:
                if (height == 0) {
                    return false;
                }
                break;
        }
    }
    return true;
}

int up_count(const MotzkinPath& m) {
    int ups = 0;
    for (MStep s : m.steps()) {
        if (s == MStep::Up) {
            ++ups;
        }
    }
    return ups;
}

std::vector<MotzkinPath> enumerate_motzkin(int n) {
    std::vector<MotzkinPath> out;
    std::vector<MStep> word(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int pos, int height) -> void {
        if (pos == n) {
            out.push_back(MotzkinPath::from_steps(word));
            return;
        }
        int remaining = n - pos - 1;
        if (remaining >= height + 1) {
            word[static_cast<std::size_t>(pos)] = MStep::Up;
            self(self, pos + 1, height + 1);
        }
        if (remaining >= height) {
            word[static_cast<std::size_t>(pos)] = MStep::Horizontal;
            self(self, pos + 1, height);
        }
        if (height > 0) {
            word[static_cast<std::size_t>(pos)] = MStep::Down;
            self(self, pos + 1, height - 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<MotzkinPath> enumerate_riordan(int n) {
    std::vector<MotzkinPath> out;
    for (MotzkinPath& m : enumerate_motzkin(n)) {
        if (is_riordan(m)) {
            out.push_back(std::move(m));
        }
    }
    return out;
}

std::uint64_t catalan(int n) {
    std::uint64_t c = 1;
    for (int k = 0; k < n; ++k) {
        unsigned __int128 next = static_cast<unsigned __int128>(c) * 2 *
                                 (2 * static_cast<unsigned>(k) + 1) /
                                 (static_cast<unsigned>(k) + 2);
        c = static_cast<std::uint64_t>(next);
    }
    return c;
}

std::uint64_t motzkin_number(int n) {
    if (n <= 1) {
        return 1;
    }
    std::uint64_t prev = 1;  // m_0
    std::uint64_t cur = 1;   // m_1
    for (int k = 1; k < n; ++k) {
        unsigned __int128 next =
            (static_cast<unsigned __int128>(2 * k + 3) * cur + 3u * static_cast<unsigned>(k) * prev) /
            static_cast<unsigned>(k + 3);
        prev = cur;
        cur = static_cast<std::uint64_t>(next);
    }
    return cur;
}

std::uint64_t riordan_number(int n) {
    if (n == 0) {
        return 1;
    }
    if (n == 1) {
        return 0;
    }
    std::uint64_t prev = 1;  // r_0
    std::uint64_t cur = 0;   // r_1
    for (int k = 2; k <= n; ++k) {
        unsigned __int128 next = static_cast<unsigned __int128>(k - 1) * (2 * cur + 3 * prev) /
                                 static_cast<unsigned>(k + 1);
        prev = cur;
        cur = static_cast<std::uint64_t>(next);
    }
    return cur;
}

}  // namespace meander
