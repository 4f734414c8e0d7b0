#include "storyline/tree_layout.hpp"

#include <algorithm>
#include <string>

#include "storyline/perm.hpp"

namespace storyline {

HeavyPathDecomposition heavy_path_decompose(const EventGraph& g, int root) {
    const auto cls = classify(g);
    if (!cls.is_tree) {
        throw ValidationError("heavy path decomposition requires a tree event graph");
    }
    const int n = g.node_count;
    if (root < 0 || root >= n) {
        throw ValidationError("root out of range");
    }

    HeavyPathDecomposition hpd;
    hpd.root = root;
    hpd.parent.assign(n, -1);
    hpd.heavy_child.assign(n, -1);
    hpd.subtree_size.assign(n, 1);

    // BFS orientation from the root; children visited in ascending node order.
    std::vector<std::vector<int>> children(n);
    std::vector<int> bfs{root};
    std::vector<bool> visited(n, false);
    visited[root] = true;
    for (std::size_t head = 0; head < bfs.size(); ++head) {
        const int u = bfs[head];
        std::vector<int> next;
        for (int edge_index : g.adjacency[u]) {
            const auto& e = g.edges[edge_index];
            const int w = e.u == u ? e.v : e.u;
            if (!visited[w]) {
                visited[w] = true;
                next.push_back(w);
            }
        }
        std::sort(next.begin(), next.end());
        children[u] = next;
        for (int w : next) {
            hpd.parent[w] = u;
            bfs.push_back(w);
        }
    }

    for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
        const int u = *it;
        int best = -1;
        for (int c : children[u]) {
            hpd.subtree_size[u] += hpd.subtree_size[c];
            if (best == -1 || hpd.subtree_size[c] > hpd.subtree_size[best]) {
                best = c;  // ascending child order makes ties pick the lowest index
            }
        }
        hpd.heavy_child[u] = best;
    }

    for (int u : bfs) {
        const bool is_head = hpd.parent[u] == -1 || hpd.heavy_child[hpd.parent[u]] != u;
        if (!is_head) continue;
        std::vector<int> path;
        for (int v = u; v != -1; v = hpd.heavy_child[v]) path.push_back(v);
        hpd.heavy_paths.push_back(std::move(path));
        if (hpd.parent[u] != -1) hpd.light_edges.push_back({hpd.parent[u], u});
    }
    return hpd;
}

int ceil_log2(int n) {
    int h = 0;
    while ((1LL << h) < n) ++h;
    return h;
}

long long tree_crossing_bound(int n) {
    return 5LL * n * (ceil_log2(n) + 1);
}

namespace {

enum class ThreadState { home, inside_block, at_top, at_bottom };

struct MeetingSlot {
    int start = 0;
    int end = 0;
    ThreadState state = ThreadState::home;
    int block = -1;  // for inside_block: which light block the thread visits
};

// Everything the column assembler needs about one node's thread.
struct ThreadPlan {
    std::vector<int> blocks;        // light children, ordered by meeting start
    std::vector<MeetingSlot> slots; // disjoint intervals, sorted by start
    std::vector<int> light_ends;    // end times of the light-child meetings, ascending
};

struct Assembler {
    const std::vector<ThreadPlan>& plans;
    const std::vector<int>& heavy_child;

    // Appends the rectangle stack of the heavy path headed at `head`.
    void path(int head, int t, std::vector<int>& out) const {
        for (int v = head; v != -1; v = heavy_child[v]) rect(v, t, out);
    }

    void rect(int v, int t, std::vector<int>& out) const {
        const ThreadPlan& plan = plans[v];
        ThreadState state = ThreadState::home;
        int block = -1;
        for (const auto& slot : plan.slots) {
            if (slot.start <= t && t <= slot.end) {
                state = slot.state;
                block = slot.block;
                break;
            }
        }
        if (state == ThreadState::home) {
            // Staircase progress: one step past each finished light meeting.
            const auto done = std::upper_bound(plan.light_ends.begin(), plan.light_ends.end(), t - 1) -
                              plan.light_ends.begin();
            block = static_cast<int>(done);
        }

        switch (state) {
            case ThreadState::at_top:
                out.push_back(v);
                for (int child : plan.blocks) path(child, t, out);
                break;
            case ThreadState::at_bottom:
                for (int child : plan.blocks) path(child, t, out);
                out.push_back(v);
                break;
            case ThreadState::home:
                for (int j = 0; j < static_cast<int>(plan.blocks.size()); ++j) {
                    if (j == block) out.push_back(v);
                    path(plan.blocks[j], t, out);
                }
                if (block == static_cast<int>(plan.blocks.size())) out.push_back(v);
                break;
            case ThreadState::inside_block: {
                for (int j = 0; j < block; ++j) path(plan.blocks[j], t, out);
                std::vector<int> inner;
                path(plan.blocks[block], t, inner);
                const int child = plan.blocks[block];
                const auto at = std::find(inner.begin(), inner.end(), child);
                out.insert(out.end(), inner.begin(), at);
                out.push_back(v);  // directly above the meeting partner
                out.insert(out.end(), at, inner.end());
                for (int j = block + 1; j < static_cast<int>(plan.blocks.size()); ++j) {
                    path(plan.blocks[j], t, out);
                }
                break;
            }
        }
    }
};

}  // namespace

Solution layout_tree(const Storyline& s, int root) {
    const EventGraph g = build_event_graph(s);
    const auto cls = classify(g);
    if (!cls.is_single_meeting) {
        throw ValidationError("layout_tree requires single meetings: some pair meets twice");
    }
    if (!cls.is_tree) {
        throw ValidationError("layout_tree requires a tree event graph");
    }
    const int n = s.character_count();
    const HeavyPathDecomposition hpd = heavy_path_decompose(g, root);

    // Interval of the meeting on the edge between child and parent(child).
    std::vector<std::pair<int, int>> edge_interval(n, {0, 0});
    for (const auto& edge : g.edges) {
        const Event& ev = s.events()[edge.event_index];
        const int child = hpd.parent[edge.u] == edge.v ? edge.u : edge.v;
        edge_interval[child] = {ev.start, ev.end};
    }

    std::vector<ThreadPlan> plans(n);
    for (int v = 0; v < n; ++v) {
        ThreadPlan& plan = plans[v];
        for (const auto& [p, c] : hpd.light_edges) {
            if (p == v) plan.blocks.push_back(c);
        }
        std::sort(plan.blocks.begin(), plan.blocks.end(), [&](int a, int b) {
            return edge_interval[a].first < edge_interval[b].first;
        });
        for (int j = 0; j < static_cast<int>(plan.blocks.size()); ++j) {
            const auto [ms, me] = edge_interval[plan.blocks[j]];
            plan.slots.push_back({ms, me, ThreadState::inside_block, j});
            plan.light_ends.push_back(me);
        }
        if (hpd.heavy_child[v] != -1) {
            const auto [ms, me] = edge_interval[hpd.heavy_child[v]];
            plan.slots.push_back({ms, me, ThreadState::at_bottom, -1});
        }
        if (hpd.parent[v] != -1 && hpd.heavy_child[hpd.parent[v]] == v) {
            const auto [ms, me] = edge_interval[v];
            plan.slots.push_back({ms, me, ThreadState::at_top, -1});
        }
        std::sort(plan.slots.begin(), plan.slots.end(),
                  [](const MeetingSlot& a, const MeetingSlot& b) { return a.start < b.start; });
    }

    const Assembler assembler{plans, hpd.heavy_child};
    Solution solution;
    solution.solver_tag = SolverTag::tree_heuristic;
    const int lo = s.first_column();
    const int hi = s.last_column();
    Ordering previous;
    for (int t = lo; t <= hi; ++t) {
        std::vector<int> order;
        order.reserve(n);
        assembler.path(hpd.root, t, order);
        Ordering current(order);
        if (t > lo) solution.crossings += count_inversions(previous, current);
        solution.diagram.times.push_back(t);
        solution.diagram.orders.push_back(std::move(order));
        previous = std::move(current);
    }
    return solution;
}

long long max_pairwise_crossings(const WiringDiagram& d) {
    if (d.orders.empty()) return 0;
    const int k = static_cast<int>(d.orders.front().size());
    std::vector<long long> flips(static_cast<std::size_t>(k) * k, 0);
    std::vector<int> prev_rank(k), rank(k);
    for (std::size_t c = 0; c < d.orders.size(); ++c) {
        for (int r = 0; r < k; ++r) rank[d.orders[c][r]] = r;
        if (c > 0) {
            for (int u = 0; u < k; ++u) {
                for (int v = u + 1; v < k; ++v) {
                    const bool before = prev_rank[u] < prev_rank[v];
                    const bool after = rank[u] < rank[v];
                    if (before != after) ++flips[static_cast<std::size_t>(u) * k + v];
                }
            }
        }
        std::swap(prev_rank, rank);
    }
    return *std::max_element(flips.begin(), flips.end());
}

}  // namespace storyline
