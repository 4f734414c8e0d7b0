#include "storyline/fpt_solver.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <set>
#include <string>

namespace storyline {

std::vector<Level> build_levels(const Storyline& s) {
    std::set<int> starts;
    for (const auto& ev : s.events()) starts.insert(ev.start);

    std::vector<Level> levels;
    for (int t : starts) {
        Level level;
        level.time = t;
        for (const auto& ev : s.events()) {
            if (ev.active_at(t)) level.constraint.groups.push_back(ev.members);
        }
        level.states = enumerate_valid(s.character_count(), level.constraint);
        std::sort(level.states.begin(), level.states.end(),
                  [](const Ordering& a, const Ordering& b) {
                      return lehmer_rank(a) < lehmer_rank(b);
                  });
        levels.push_back(std::move(level));
    }
    return levels;
}

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// Full k!^2 distance table, indexed by Lehmer rank. Only sensible for small k.
class AllPairsTable {
public:
    explicit AllPairsTable(int k) : k_fact_(factorial(k)) {
        std::vector<Ordering> all;
        all.reserve(k_fact_);
        for (std::uint64_t r = 0; r < k_fact_; ++r) all.push_back(lehmer_unrank(r, k));
        table_.resize(k_fact_ * k_fact_);
        for (std::uint64_t i = 0; i < k_fact_; ++i) {
            for (std::uint64_t j = 0; j < k_fact_; ++j) {
                table_[i * k_fact_ + j] =
                    static_cast<std::uint8_t>(count_inversions(all[i], all[j]));
            }
        }
    }

    long long distance(std::uint64_t rank_a, std::uint64_t rank_b) const {
        return table_[rank_a * k_fact_ + rank_b];
    }

private:
    std::uint64_t k_fact_;
    std::vector<std::uint8_t> table_;
};

}  // namespace

WiringDiagram expand_to_diagram(const Storyline& s, const std::vector<Ordering>& level_orders) {
    const auto levels = build_levels(s);
    if (levels.size() != level_orders.size()) {
        throw std::invalid_argument("expand_to_diagram: one ordering per level required");
    }
    const int lo = s.first_column();
    const int hi = s.last_column();

    WiringDiagram d;
    const Ordering fallback = Ordering::identity(s.character_count());
    std::size_t current = 0;  // index of the last level with time <= t, once reached
    for (int t = lo; t <= hi; ++t) {
        while (current + 1 < levels.size() && levels[current + 1].time <= t) ++current;
        const Ordering* order = &fallback;
        if (!levels.empty()) {
            // Columns before the first level borrow its ordering.
            order = (t < levels.front().time) ? &level_orders.front() : &level_orders[current];
        }
        d.times.push_back(t);
        d.orders.push_back(order->positions());
    }

    const VerifyResult check = verify_solution(s, d);
    if (!check.valid) {
        throw std::logic_error("expand_to_diagram: infeasible transition broke an active event");
    }
    return d;
}

Solution solve_exact(const Storyline& s, const SolveOptions& opts) {
    const int k = s.character_count();
    if (k > opts.max_characters) {
        throw BudgetError("solver budget exceeded: " + std::to_string(k) +
                          " characters (limit " + std::to_string(opts.max_characters) + ")");
    }
    const auto levels = build_levels(s);

    Solution solution;
    solution.solver_tag = SolverTag::exact;
    if (levels.empty()) {
        solution.diagram = expand_to_diagram(s, {});
        solution.crossings = 0;
        return solution;
    }

    long long weight_evals = 0;
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
        weight_evals += static_cast<long long>(levels[i].states.size()) *
                        static_cast<long long>(levels[i + 1].states.size());
        if (weight_evals > opts.weight_eval_budget) {
            throw BudgetError("solver budget exceeded: more than " +
                              std::to_string(opts.weight_eval_budget) + " weight evaluations");
        }
    }

    std::unique_ptr<AllPairsTable> table;
    std::vector<std::vector<std::uint64_t>> state_ranks;
    if (opts.precompute_all_pairs) {
        if (k > 7) {
            throw BudgetError("solver budget exceeded: all-pairs table is limited to k <= 7");
        }
        table = std::make_unique<AllPairsTable>(k);
        state_ranks.resize(levels.size());
        for (std::size_t i = 0; i < levels.size(); ++i) {
            for (const auto& state : levels[i].states) {
                state_ranks[i].push_back(lehmer_rank(state));
            }
        }
    }

    // Source connects to level 0 with weight 0; DP sweeps level by level.
    std::vector<std::vector<long long>> cost(levels.size());
    std::vector<std::vector<int>> parent(levels.size());
    cost[0].assign(levels[0].states.size(), 0);
    parent[0].assign(levels[0].states.size(), -1);
    for (std::size_t i = 1; i < levels.size(); ++i) {
        const auto& prev = levels[i - 1].states;
        const auto& cur = levels[i].states;
        cost[i].assign(cur.size(), kInf);
        parent[i].assign(cur.size(), -1);
        for (std::size_t j = 0; j < cur.size(); ++j) {
            long long best = kInf;
            int best_parent = -1;
            for (std::size_t p = 0; p < prev.size(); ++p) {
                const long long w =
                    table ? table->distance(state_ranks[i - 1][p], state_ranks[i][j])
                          : count_inversions(prev[p], cur[j]);
                if (cost[i - 1][p] + w < best) {
                    best = cost[i - 1][p] + w;
                    best_parent = static_cast<int>(p);
                }
            }
            cost[i][j] = best;
            parent[i][j] = best_parent;
        }
    }

    const auto& last = cost.back();
    std::size_t best_state = 0;
    for (std::size_t j = 1; j < last.size(); ++j) {
        if (last[j] < last[best_state]) best_state = j;
    }
    solution.crossings = last[best_state];

    std::vector<Ordering> chosen(levels.size());
    int state = static_cast<int>(best_state);
    for (int i = static_cast<int>(levels.size()) - 1; i >= 0; --i) {
        chosen[i] = levels[i].states[state];
        state = parent[i][state];
    }
    solution.diagram = expand_to_diagram(s, chosen);
    return solution;
}

}  // namespace storyline
