#include "storyline/generator.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace storyline {

std::string character_name(int index) {
    std::string name;
    int i = index;
    while (true) {
        name.insert(name.begin(), static_cast<char>('a' + i % 26));
        i = i / 26 - 1;
        if (i < 0) break;
    }
    return name;
}

namespace {

std::vector<std::string> make_names(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back(character_name(i));
    return names;
}

// Edges in BFS discovery order from node 0, children ascending; edge i gets
// the single-time meeting [i, i].
Storyline from_parents(int n, const std::vector<int>& parent) {
    std::vector<std::vector<int>> children(n);
    for (int v = 1; v < n; ++v) children[parent[v]].push_back(v);
    for (auto& c : children) std::sort(c.begin(), c.end());

    std::vector<Event> events;
    std::vector<int> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int c : children[u]) {
            const int t = static_cast<int>(events.size());
            events.push_back({{u, c}, t, t});
            queue.push_back(c);
        }
    }
    return Storyline(make_names(n), std::move(events));
}

}  // namespace

Storyline generate_path(int n) {
    if (n < 1) throw ValidationError("path instance needs n >= 1");
    std::vector<int> parent(n);
    for (int v = 1; v < n; ++v) parent[v] = v - 1;
    return from_parents(n, parent);
}

Storyline generate_star(int n) {
    if (n < 1) throw ValidationError("star instance needs n >= 1");
    std::vector<int> parent(n, 0);
    return from_parents(n, parent);
}

Storyline generate_complete_binary_tree(int n) {
    if (n < 1 || (n & (n + 1)) != 0) {
        throw ValidationError("complete binary tree needs n = 2^h - 1");
    }
    std::vector<int> parent(n);
    for (int v = 1; v < n; ++v) parent[v] = (v - 1) / 2;
    return from_parents(n, parent);
}

Storyline generate_random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw ValidationError("random tree needs n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<int> parent(n);
    for (int v = 1; v < n; ++v) {
        parent[v] = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
    }
    return from_parents(n, parent);
}

Storyline generate_random_general(int k, int m, std::uint64_t seed) {
    if (k < 2) throw ValidationError("random general instance needs k >= 2");
    if (m < 0) throw ValidationError("random general instance needs m >= 0");
    std::mt19937_64 rng(seed);
    const int horizon = std::max(2 * m, 8);
    std::vector<std::set<int>> busy(k);  // times already used per character

    std::vector<Event> events;
    long long attempts = 0;
    const long long max_attempts = 10000LL * (m + 1);
    while (static_cast<int>(events.size()) < m) {
        if (++attempts > max_attempts) {
            throw ValidationError("random general instance: rejection sampling stalled");
        }
        const int size = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                 std::min(4, k) - 1));
        std::vector<int> pool(k);
        for (int i = 0; i < k; ++i) pool[i] = i;
        for (int i = 0; i < size; ++i) {
            const int j = i + static_cast<int>(rng() % static_cast<std::uint64_t>(k - i));
            std::swap(pool[i], pool[j]);
        }
        std::vector<int> members(pool.begin(), pool.begin() + size);
        const int start = static_cast<int>(rng() % static_cast<std::uint64_t>(horizon));
        bool clash = false;
        for (int member : members) {
            if (busy[member].count(start)) {
                clash = true;
                break;
            }
        }
        if (clash) continue;
        for (int member : members) busy[member].insert(start);
        events.push_back({std::move(members), start, start});
    }
    return Storyline(make_names(k), std::move(events));
}

}  // namespace storyline
