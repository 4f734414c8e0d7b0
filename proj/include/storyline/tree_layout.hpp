#pragma once

#include <utility>
#include <vector>

#include "storyline/eventgraph.hpp"
#include "storyline/model.hpp"

namespace storyline {

struct HeavyPathDecomposition {
    int root = 0;
    std::vector<int> parent;                       // -1 at the root
    std::vector<int> heavy_child;                  // -1 at leaves
    std::vector<int> subtree_size;
    std::vector<std::vector<int>> heavy_paths;     // the root's path first
    std::vector<std::pair<int, int>> light_edges;  // (parent, child)
};

// Ties among equal subtree sizes break toward the lowest-index child.
HeavyPathDecomposition heavy_path_decompose(const EventGraph& g, int root);

int ceil_log2(int n);

// The desk-scale form of the O(n log n) guarantee: 5 * n * (ceil_log2(n) + 1).
long long tree_crossing_bound(int n);

// Wiring diagram for a pairwise single-meeting storyline with a tree event
// graph. Light subtrees are stacked in disjoint rank blocks ordered by
// meeting start time, each heavy-path character threads through its blocks
// top to bottom, and heavy-edge meetings detour to the facing rectangle
// boundaries for exactly the meeting interval.
Solution layout_tree(const Storyline& s, int root = 0);

// Diagnostic: crossings per character pair (max over pairs). Quadratic in
// characters times columns; intended for small instances.
long long max_pairwise_crossings(const WiringDiagram& d);

}  // namespace storyline
