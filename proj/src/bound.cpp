#include "storyline/bound.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace storyline {

ArrangementCost arrangement_cost(const EventGraph& g, const std::vector<int>& labeling) {
    const int n = g.node_count;
    if (static_cast<int>(labeling.size()) != n) {
        throw ValidationError("labeling must assign a position to every node");
    }
    std::vector<bool> used(n + 1, false);
    for (int pos : labeling) {
        if (pos < 1 || pos > n || used[pos]) {
            throw ValidationError("labeling must be a bijection onto 1..n");
        }
        used[pos] = true;
    }
    ArrangementCost cost;
    for (const auto& edge : g.edges) {
        cost.total_length += std::abs(labeling[edge.u] - labeling[edge.v]);
    }
    cost.c0_total = cost.total_length - static_cast<long long>(g.edges.size());
    return cost;
}

namespace {

struct BnbState {
    int n = 0;
    std::vector<std::vector<int>> neighbors;  // with multiplicity
    std::vector<int> pos;                     // -1 while unplaced
    std::vector<int> order;                   // order[p] = node at position p
    long long unplaced_edges = 0;             // both endpoints unplaced
    long long incumbent = 0;

    long long completion_bound(int next_pos) const {
        // Each placed node's unplaced neighbors need distinct future positions;
        // edges between two unplaced nodes have length at least 1.
        long long bound = unplaced_edges;
        for (int p = 0; p < next_pos; ++p) {
            const int u = order[p];
            int pending = 0;
            for (int w : neighbors[u]) {
                if (pos[w] < 0) ++pending;
            }
            if (pending > 0) {
                const long long base = next_pos - pos[u];
                bound += pending * base + static_cast<long long>(pending) * (pending - 1) / 2;
            }
        }
        return bound;
    }

    void search(int depth, long long cost) {
        if (depth == n) {
            if (cost < incumbent) incumbent = cost;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (pos[v] >= 0) continue;
            // Reversal symmetry: the node at the last position must outrank
            // the node at the first.
            if (depth == n - 1 && n >= 2 && order[0] > v) continue;
            long long added = 0;
            long long detached = 0;
            for (int w : neighbors[v]) {
                if (pos[w] >= 0) {
                    added += depth - pos[w];
                } else {
                    ++detached;
                }
            }
            pos[v] = depth;
            order[depth] = v;
            unplaced_edges -= detached;
            const long long next_cost = cost + added;
            if (next_cost + completion_bound(depth + 1) < incumbent) {
                search(depth + 1, next_cost);
            }
            unplaced_edges += detached;
            pos[v] = -1;
        }
    }
};

long long greedy_incumbent(const EventGraph& g) {
    const int n = g.node_count;
    long long best = 0;
    auto eval = [&](const std::vector<int>& order) {
        std::vector<int> labeling(n);
        for (int p = 0; p < n; ++p) labeling[order[p]] = p + 1;
        return arrangement_cost(g, labeling).total_length;
    };
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    best = eval(identity);
    for (int start = 0; start < n; ++start) {
        std::vector<int> order;
        std::vector<bool> visited(n, false);
        order.push_back(start);
        visited[start] = true;
        for (std::size_t head = 0; head < order.size(); ++head) {
            const int u = order[head];
            for (int edge_index : g.adjacency[u]) {
                const auto& e = g.edges[edge_index];
                const int w = e.u == u ? e.v : e.u;
                if (!visited[w]) {
                    visited[w] = true;
                    order.push_back(w);
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            if (!visited[v]) order.push_back(v);  // disconnected remainder
        }
        best = std::min(best, eval(order));
    }
    return best;
}

}  // namespace

MlaResult min_linear_arrangement(const EventGraph& g, int node_budget) {
    const int n = g.node_count;
    if (n > node_budget) {
        return {static_cast<long long>(g.edges.size()), false};
    }
    if (n <= 1 || g.edges.empty()) {
        return {0, true};
    }
    BnbState state;
    state.n = n;
    state.neighbors.assign(n, {});
    for (const auto& edge : g.edges) {
        state.neighbors[edge.u].push_back(edge.v);
        state.neighbors[edge.v].push_back(edge.u);
    }
    state.pos.assign(n, -1);
    state.order.assign(n, -1);
    state.unplaced_edges = static_cast<long long>(g.edges.size());
    state.incumbent = greedy_incumbent(g);  // achievable, so pruning at >= is safe
    state.search(0, 0);
    return {state.incumbent, true};
}

LowerBoundResult lower_bound(const EventGraph& g, int node_budget) {
    LowerBoundResult result;
    for (int node = 0; node < g.node_count; ++node) {
        result.delta = std::max(result.delta, g.degree(node));
    }
    const MlaResult mla = min_linear_arrangement(g, node_budget);
    result.l_star = mla.l_star;
    result.exact = mla.exact;
    if (result.delta == 0) {
        result.bound = 0;
        return result;
    }
    const long long c0 = result.l_star - static_cast<long long>(g.edges.size());
    result.bound = c0 <= 0 ? 0 : (c0 + 2LL * result.delta - 1) / (2LL * result.delta);
    return result;
}

}  // namespace storyline
