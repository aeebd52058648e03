#include "meander/bijections.hpp"

#include "meander/errors.hpp"

namespace meander {

namespace {

MStep pair_to_mstep(Step first, Step second, const char* where) {
    if (first == Step::North && second == Step::North) {
        return MStep::Up;
    }
    if (first == Step::East && second == Step::North) {
        return MStep::Horizontal;
    }
    if (first == Step::East && second == Step::East) {
        return MStep::Down;
    }
    // NE pairs cannot occur at the probed offsets for all-odd or all-even
    // peak-height paths; hitting one means a caller or index bug.
    throw MalformedPairs(std::string("unexpected NE pair in ") + where);
}

void expand_mstep(MStep v, std::vector<Step>& out) {
    switch (v) {
        case MStep::Up:
            out.push_back(Step::North);
            out.push_back(Step::North);
            break;
        case MStep::Horizontal:
            out.push_back(Step::East);
            out.push_back(Step::North);
            break;
        case MStep::Down:
            out.push_back(Step::East);
            out.push_back(Step::East);
            break;
    }
}

}  // namespace

MotzkinPath phi_A(const DyckPath& p) {
    if (!in_A(p)) {
        throw NotInA("path " + p.word() + " has a peak at even height");
    }
    if (p.size() < 1) {
        throw NotInA("phi_A needs size >= 1");
    }
    int n = p.size() - 1;
    std::vector<MStep> steps;
    steps.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        steps.push_back(pair_to_mstep(p.step(2 * j), p.step(2 * j + 1), "phi_A"));
    }
    return MotzkinPath::from_steps(std::move(steps));
}

DyckPath phi_A_inv(const MotzkinPath& m) {
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(2 * m.length() + 2));
    steps.push_back(Step::North);
    for (MStep v : m.steps()) {
        expand_mstep(v, steps);
    }
    steps.push_back(Step::East);
    DyckPath p = DyckPath::from_steps(std::move(steps));
    if (!in_A(p)) {
        throw InternalError("phi_A_inv produced a path outside A");
    }
    return p;
}

RiordanPath phi_B(const DyckPath& p) {
    if (!in_B(p)) {
        throw NotInB("path " + p.word() + " has a peak at odd height");
    }
    int n = p.size();
    std::vector<MStep> steps;
    steps.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        steps.push_back(pair_to_mstep(p.step(2 * j - 1), p.step(2 * j), "phi_B"));
    }
    MotzkinPath r = MotzkinPath::from_steps(std::move(steps));
    if (!is_riordan(r)) {
        throw InternalError("phi_B produced a ground-level horizontal step");
    }
    return r;
}

DyckPath phi_B_inv(const RiordanPath& r) {
    if (!is_riordan(r)) {
        throw NotInB("phi_B_inv needs a Riordan path, got " + r.word());
    }
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(2 * r.length()));
    for (MStep u : r.steps()) {
        expand_mstep(u, steps);
    }
    DyckPath p = DyckPath::from_steps(std::move(steps));
    if (!in_B(p)) {
        throw InternalError("phi_B_inv produced a path outside B");
    }
    return p;
}

}  // namespace meander
