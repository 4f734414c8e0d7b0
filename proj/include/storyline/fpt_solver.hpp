#pragma once

#include <vector>

#include "storyline/model.hpp"
#include "storyline/perm.hpp"

namespace storyline {

// One layer of the shortest-path reduction: a distinct event start time, the
// contiguity constraint of every event active at that time, and the valid
// orderings (sorted by Lehmer rank, which is the canonical state index).
struct Level {
    int time = 0;
    ContiguityConstraint constraint;
    std::vector<Ordering> states;
};

// One level per distinct event start time, ascending. A level's constraint
// carries every event whose closed interval contains the level time, not
// only those starting there; otherwise a later level could break an ongoing
// meeting.
std::vector<Level> build_levels(const Storyline& s);

struct SolveOptions {
    int max_characters = 9;
    long long weight_eval_budget = 100'000'000;
    // Benchmarking mode: precompute inversion distances between all k!^2
    // ordering pairs up front instead of lazily between consecutive levels.
    bool precompute_all_pairs = false;
};

// Exact crossing minimization, parameterized on the character count.
// Level-by-level dynamic program; ties among equal-cost predecessors break
// toward the lowest state rank. Throws BudgetError when the state space
// exceeds the configured budget.
Solution solve_exact(const Storyline& s, const SolveOptions& opts = {});

// Fills every integer column between first_column() and last_column(),
// holding each level's ordering and applying the transition to the next
// level's ordering at the last column boundary of the gap. Throws
// std::logic_error if the result would break an active event (cannot happen
// when consecutive level constraints are respected).
WiringDiagram expand_to_diagram(const Storyline& s, const std::vector<Ordering>& level_orders);

}  // namespace storyline
