#pragma once

#include "storyline/model.hpp"

namespace storyline {

struct OracleLimits {
    int max_characters = 5;
    int max_columns = 12;
};

// Ground-truth exact minimum: shortest path through the column-by-column
// state graph, where each column admits every permutation satisfying the
// events active at that column and edges cost the inversion distance.
// Deliberately independent of the solver's level construction.
long long brute_force_min_crossings(const Storyline& s, const OracleLimits& limits = {});

}  // namespace storyline
