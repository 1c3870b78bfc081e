#pragma once

#include <cstdint>
#include <vector>

#include "stuffle/lincomb.hpp"
#include "stuffle/word.hpp"

namespace stuffle {

// A merge pattern for a pair of words of lengths n and m: an order-preserving
// surjection of the n+m input positions onto n+m-i output slots, where
// exactly i slots receive one position from each block (a coincidence) and
// every other slot receives a single position.
struct SurjectionPattern {
    int first_len = 0;     // n
    int second_len = 0;    // m
    int coincidences = 0;  // i

    // assignment[pos] = 0-based output slot of input position pos.
    // Positions 0..n-1 are the first block, n..n+m-1 the second; the map is
    // strictly increasing on each block.
    std::vector<std::uint16_t> assignment;

    // Builds the merged word: a slot shared by two positions carries the sum
    // of their letters, any other slot copies its letter.
    Word apply(const Word& first, const Word& second) const;

    bool operator==(const SurjectionPattern&) const = default;
};

// All patterns for block lengths (n, m) with exactly i coincidences, in a
// deterministic slot-label order. There are C(n+m-i, i) * C(n+m-2i, n-i)
// of them. Throws std::domain_error unless 0 <= i <= min(n, m).
std::vector<SurjectionPattern> enumerate_patterns(int n, int m, int i);

// The product of two words computed by direct pattern enumeration: the sum,
// over all coincidence counts i and all patterns, of the merged word. With
// signed_merge each coincidence contributes a factor -1, which yields the
// star product; otherwise the plain product. Independent of the recursive
// evaluation in product.hpp, which it cross-checks.
LinComb oracle_product(const Word& w1, const Word& w2, bool signed_merge);

}  // namespace stuffle
