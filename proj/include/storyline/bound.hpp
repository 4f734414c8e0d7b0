#pragma once

#include <vector>

#include "storyline/eventgraph.hpp"

namespace storyline {

inline constexpr int kDefaultMlaNodeBudget = 12;

struct ArrangementCost {
    long long total_length = 0;  // sum of |pos(u) - pos(v)| over edges
    long long c0_total = 0;      // total_length - m, the initial meeting cost
};

// Costs of one labeling; labeling[node] is a position in 1..n.
ArrangementCost arrangement_cost(const EventGraph& g, const std::vector<int>& labeling);

struct MlaResult {
    long long l_star = 0;
    bool exact = false;
};

// Exact minimum linear arrangement by branch and bound: positions are filled
// left to right, reversal symmetry is broken on the endpoints, and partial
// labelings are pruned against a degree-based completion bound. Graphs above
// the node budget fall back to the certified estimate l_star = m (every edge
// has length >= 1) with exact = false.
MlaResult min_linear_arrangement(const EventGraph& g, int node_budget = kDefaultMlaNodeBudget);

struct LowerBoundResult {
    long long l_star = 0;
    int delta = 0;
    long long bound = 0;
    bool exact = false;
};

// ceil((L* - m) / (2 * delta)): every crossing changes the cost of at most
// deg(u) + deg(v) <= 2*delta edges by one, and all edges must reach cost 0.
LowerBoundResult lower_bound(const EventGraph& g, int node_budget = kDefaultMlaNodeBudget);

}  // namespace storyline
