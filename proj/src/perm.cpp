#include "storyline/perm.hpp"

#include <algorithm>
#include <numeric>

namespace storyline {

Ordering::Ordering(std::vector<int> positions) : positions_(std::move(positions)) {
    const int k = static_cast<int>(positions_.size());
    inverse_.assign(k, -1);
    for (int rank = 0; rank < k; ++rank) {
        const int c = positions_[rank];
        if (c < 0 || c >= k || inverse_[c] != -1) {
            throw std::invalid_argument("ordering is not a permutation of 0..k-1");
        }
        inverse_[c] = rank;
    }
}

Ordering Ordering::identity(int k) {
    std::vector<int> positions(k);
    std::iota(positions.begin(), positions.end(), 0);
    return Ordering(std::move(positions));
}

namespace {

long long merge_count(std::vector<int>& seq, std::vector<int>& buf, int lo, int hi) {
    if (hi - lo <= 1) return 0;
    const int mid = lo + (hi - lo) / 2;
    long long count = merge_count(seq, buf, lo, mid) + merge_count(seq, buf, mid, hi);
    int i = lo, j = mid, out = lo;
    while (i < mid && j < hi) {
        if (seq[i] <= seq[j]) {
            buf[out++] = seq[i++];
        } else {
            count += mid - i;
            buf[out++] = seq[j++];
        }
    }
    while (i < mid) buf[out++] = seq[i++];
    while (j < hi) buf[out++] = seq[j++];
    std::copy(buf.begin() + lo, buf.begin() + hi, seq.begin() + lo);
    return count;
}

}  // namespace

long long count_sequence_inversions(std::vector<int> seq) {
    std::vector<int> buf(seq.size());
    return merge_count(seq, buf, 0, static_cast<int>(seq.size()));
}

long long count_inversions(const Ordering& a, const Ordering& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("count_inversions: size mismatch");
    }
    const int k = a.size();
    std::vector<int> composed(k);
    for (int rank = 0; rank < k; ++rank) {
        composed[rank] = b.rank_of(a.character_at(rank));
    }
    return count_sequence_inversions(std::move(composed));
}

bool satisfies(const Ordering& o, const ContiguityConstraint& c) {
    for (const auto& group : c.groups) {
        int lo = o.size(), hi = -1;
        for (int member : group) {
            const int r = o.rank_of(member);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        if (hi - lo + 1 != static_cast<int>(group.size())) return false;
    }
    return true;
}

namespace {

// Blocks: one per group plus one singleton per ungrouped character, ordered by
// smallest member. Valid orderings are exactly: permute blocks, then permute
// members within each group block.
std::vector<std::vector<int>> make_blocks(int k, const ContiguityConstraint& c) {
    std::vector<bool> grouped(k, false);
    std::vector<std::vector<int>> blocks;
    for (const auto& group : c.groups) {
        std::vector<int> g(group);
        std::sort(g.begin(), g.end());
        for (int member : g) {
            if (member < 0 || member >= k || grouped[member]) {
                throw std::invalid_argument("contiguity groups must be disjoint subsets of 0..k-1");
            }
            grouped[member] = true;
        }
        blocks.push_back(std::move(g));
    }
    for (int ch = 0; ch < k; ++ch) {
        if (!grouped[ch]) blocks.push_back({ch});
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return blocks;
}

}  // namespace

void for_each_valid_ordering(int k, const ContiguityConstraint& c,
                             const std::function<bool(const Ordering&)>& visit) {
    auto blocks = make_blocks(k, c);
    const int b = static_cast<int>(blocks.size());
    std::vector<int> block_order(b);
    std::iota(block_order.begin(), block_order.end(), 0);

    // Per-block member arrangements, advanced as an odometer (last block fastest).
    std::vector<std::vector<int>> arrangement = blocks;

    std::vector<int> positions(k);
    do {
        for (auto& arr : arrangement) std::sort(arr.begin(), arr.end());
        bool more_arrangements = true;
        while (more_arrangements) {
            int out = 0;
            for (int bi : block_order) {
                for (int member : arrangement[bi]) positions[out++] = member;
            }
            if (!visit(Ordering(positions))) return;
            more_arrangements = false;
            for (int bi = b - 1; bi >= 0; --bi) {
                if (std::next_permutation(arrangement[bi].begin(), arrangement[bi].end())) {
                    more_arrangements = true;
                    break;
                }
                // wrapped back to sorted order; carry to the previous block
            }
        }
    } while (std::next_permutation(block_order.begin(), block_order.end()));
}

std::vector<Ordering> enumerate_valid(int k, const ContiguityConstraint& c) {
    std::vector<Ordering> result;
    for_each_valid_ordering(k, c, [&](const Ordering& o) {
        result.push_back(o);
        return true;
    });
    return result;
}

long long count_valid(int k, const ContiguityConstraint& c) {
    const auto blocks = make_blocks(k, c);
    long long count = static_cast<long long>(factorial(static_cast<int>(blocks.size())));
    for (const auto& block : blocks) {
        count *= static_cast<long long>(factorial(static_cast<int>(block.size())));
    }
    return count;
}

std::uint64_t factorial(int k) {
    if (k < 0 || k > 20) throw std::invalid_argument("factorial: k out of range");
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t lehmer_rank(const Ordering& o) {
    const int k = o.size();
    std::uint64_t rank = 0;
    for (int i = 0; i < k; ++i) {
        int smaller_later = 0;
        for (int j = i + 1; j < k; ++j) {
            if (o.character_at(j) < o.character_at(i)) ++smaller_later;
        }
        rank += static_cast<std::uint64_t>(smaller_later) * factorial(k - 1 - i);
    }
    return rank;
}

Ordering lehmer_unrank(std::uint64_t r, int k) {
    if (r >= factorial(k)) throw std::invalid_argument("lehmer_unrank: rank out of range");
    std::vector<int> pool(k);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> positions;
    positions.reserve(k);
    for (int i = 0; i < k; ++i) {
        const std::uint64_t f = factorial(k - 1 - i);
        const auto digit = static_cast<int>(r / f);
        r %= f;
        positions.push_back(pool[digit]);
        pool.erase(pool.begin() + digit);
    }
    return Ordering(std::move(positions));
}

}  // namespace storyline
