#pragma once

#include <vector>

#include "storyline/model.hpp"

namespace storyline {

// Undirected multigraph of pairwise meetings: one node per character, one
// edge per two-member event.
struct EventGraph {
    struct Edge {
        int u = 0;
        int v = 0;
        int event_index = 0;
    };

    int node_count = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> adjacency;  // node -> incident edge indices

    int degree(int node) const { return static_cast<int>(adjacency[node].size()); }
};

struct EventGraphClass {
    bool is_single_meeting = false;  // at most one edge per unordered pair
    bool is_tree = false;            // connected, n-1 edges, single-meeting
    int max_degree = 0;
};

// Requires every event to have exactly two members; names the offender otherwise.
EventGraph build_event_graph(const Storyline& s);

EventGraphClass classify(const EventGraph& g);

}  // namespace storyline
