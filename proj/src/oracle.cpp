#include "storyline/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "storyline/perm.hpp"

namespace storyline {

long long brute_force_min_crossings(const Storyline& s, const OracleLimits& limits) {
    const int k = s.character_count();
    if (k > limits.max_characters) {
        throw BudgetError("oracle budget exceeded: " + std::to_string(k) + " characters (limit " +
                          std::to_string(limits.max_characters) + ")");
    }
    const int lo = s.first_column();
    const int hi = s.last_column();
    if (hi - lo + 1 > limits.max_columns) {
        throw BudgetError("oracle budget exceeded: " + std::to_string(hi - lo + 1) +
                          " columns (limit " + std::to_string(limits.max_columns) + ")");
    }

    constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
    std::vector<Ordering> prev_states;
    std::vector<long long> prev_cost;
    for (int t = lo; t <= hi; ++t) {
        ContiguityConstraint active;
        for (const auto& ev : s.events()) {
            if (ev.active_at(t)) active.groups.push_back(ev.members);
        }
        std::vector<Ordering> states = enumerate_valid(k, active);
        std::vector<long long> cost(states.size(), 0);
        if (t > lo) {
            for (std::size_t j = 0; j < states.size(); ++j) {
                long long best = kInf;
                for (std::size_t i = 0; i < prev_states.size(); ++i) {
                    best = std::min(best, prev_cost[i] + count_inversions(prev_states[i], states[j]));
                }
                cost[j] = best;
            }
        }
        prev_states = std::move(states);
        prev_cost = std::move(cost);
    }
    return *std::min_element(prev_cost.begin(), prev_cost.end());
}

}  // namespace storyline
