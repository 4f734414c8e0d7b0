#include "storyline/eventgraph.hpp"

#include <algorithm>
#include <set>

namespace storyline {

EventGraph build_event_graph(const Storyline& s) {
    EventGraph g;
    g.node_count = s.character_count();
    g.adjacency.assign(g.node_count, {});
    for (int e = 0; e < s.event_count(); ++e) {
        const Event& ev = s.events()[e];
        if (ev.members.size() != 2) {
            throw ValidationError("event " + std::to_string(e) + " has " +
                                  std::to_string(ev.members.size()) +
                                  " members; the event graph needs pairwise meetings");
        }
        const int edge_index = static_cast<int>(g.edges.size());
        g.edges.push_back({ev.members[0], ev.members[1], e});
        g.adjacency[ev.members[0]].push_back(edge_index);
        g.adjacency[ev.members[1]].push_back(edge_index);
    }
    return g;
}

EventGraphClass classify(const EventGraph& g) {
    EventGraphClass result;
    std::set<std::pair<int, int>> seen;
    result.is_single_meeting = true;
    for (const auto& edge : g.edges) {
        const auto key = std::minmax(edge.u, edge.v);
        if (!seen.insert({key.first, key.second}).second) {
            result.is_single_meeting = false;
        }
    }
    for (int node = 0; node < g.node_count; ++node) {
        result.max_degree = std::max(result.max_degree, g.degree(node));
    }

    // Connectivity by BFS from node 0 (vacuously connected when empty).
    bool connected = true;
    if (g.node_count > 0) {
        std::vector<bool> visited(g.node_count, false);
        std::vector<int> queue{0};
        visited[0] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            for (int edge_index : g.adjacency[u]) {
                const auto& edge = g.edges[edge_index];
                const int w = edge.u == u ? edge.v : edge.u;
                if (!visited[w]) {
                    visited[w] = true;
                    queue.push_back(w);
                }
            }
        }
        connected = std::all_of(visited.begin(), visited.end(), [](bool b) { return b; });
    }
    result.is_tree = connected && result.is_single_meeting &&
                     static_cast<int>(g.edges.size()) == g.node_count - 1;
    return result;
}

}  // namespace storyline
