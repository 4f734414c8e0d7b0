#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace storyline {

// Permutation of 0..k-1 kept with both lookup directions in sync.
// positions() maps rank (top = 0) to character, inverse() maps character to rank.
class Ordering {
public:
    Ordering() = default;
    explicit Ordering(std::vector<int> positions);
    static Ordering identity(int k);

    int size() const { return static_cast<int>(positions_.size()); }
    int character_at(int rank) const { return positions_[rank]; }
    int rank_of(int character) const { return inverse_[character]; }
    const std::vector<int>& positions() const { return positions_; }
    const std::vector<int>& inverse() const { return inverse_; }

    bool operator==(const Ordering& other) const { return positions_ == other.positions_; }

private:
    std::vector<int> positions_;
    std::vector<int> inverse_;
};

// Disjoint character groups that must each occupy contiguous ranks.
struct ContiguityConstraint {
    std::vector<std::vector<int>> groups;
};

// Number of unordered character pairs whose relative vertical order differs
// between a and b. Merge sort over the composed permutation, O(k log k).
long long count_inversions(const Ordering& a, const Ordering& b);

// Inversions of an integer sequence (helper shared with verify paths).
long long count_sequence_inversions(std::vector<int> seq);

// Orderings where every group of c occupies contiguous ranks, generated
// constructively (blocks are permuted, then members within each group).
// The visitor may return false to stop early.
void for_each_valid_ordering(int k, const ContiguityConstraint& c,
                             const std::function<bool(const Ordering&)>& visit);
std::vector<Ordering> enumerate_valid(int k, const ContiguityConstraint& c);

// Closed-form count of valid orderings: b! * prod |g|! with b = #blocks.
long long count_valid(int k, const ContiguityConstraint& c);

bool satisfies(const Ordering& o, const ContiguityConstraint& c);

// Lehmer-code bijection between orderings of size k and 0..k!-1.
// rank(identity) = 0, rank(full reversal) = k!-1.
std::uint64_t lehmer_rank(const Ordering& o);
Ordering lehmer_unrank(std::uint64_t r, int k);

std::uint64_t factorial(int k);

}  // namespace storyline
