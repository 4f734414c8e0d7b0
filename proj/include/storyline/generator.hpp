#pragma once

#include <cstdint>
#include <string>

#include "storyline/model.hpp"

namespace storyline {

// Spreadsheet-style character names: a..z, aa, ab, ...
std::string character_name(int index);

// Benchmark instances. Tree kinds assign each edge a distinct single-time
// meeting [i, i] in breadth-first edge order; all generation is
// seed-deterministic.
Storyline generate_path(int n);
Storyline generate_star(int n);
Storyline generate_complete_binary_tree(int n);  // n must be 2^h - 1
Storyline generate_random_tree(int n, std::uint64_t seed);

// Events of 2..4 members with non-overlapping membership, rejection-sampled
// at single-time intervals drawn from a horizon proportional to m.
Storyline generate_random_general(int k, int m, std::uint64_t seed);

}  // namespace storyline
