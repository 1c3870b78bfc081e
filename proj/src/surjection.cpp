#include "stuffle/surjection.hpp"

#include <algorithm>
#include <stdexcept>

namespace stuffle {

Word SurjectionPattern::apply(const Word& first, const Word& second) const {
    if (static_cast<int>(first.length()) != first_len ||
        static_cast<int>(second.length()) != second_len)
        throw std::invalid_argument("SurjectionPattern::apply: length mismatch");
    const int slots = first_len + second_len - coincidences;
    std::vector<Word::Letter> letters(static_cast<std::size_t>(slots), 0);
    for (int pos = 0; pos < first_len + second_len; ++pos) {
        Word::Letter k = pos < first_len ? first[static_cast<std::size_t>(pos)]
                                         : second[static_cast<std::size_t>(pos - first_len)];
        letters[assignment[static_cast<std::size_t>(pos)]] += k;
    }
    return Word(std::span<const Word::Letter>(letters));
}

namespace {

// Walks output slots left to right; at each slot the choices are: next
// letter of the first block, next letter of the second block, or both at
// once (a coincidence). Choices made in that fixed order, so enumeration
// order is deterministic.
template <typename Emit>
void walk_labels(int rem1, int rem2, int rem_both, std::vector<std::uint16_t>* slot_of_first,
                 std::vector<std::uint16_t>* slot_of_second, int slot, Emit&& emit) {
    if (rem1 == 0 && rem2 == 0 && rem_both == 0) {
        emit();
        return;
    }
    if (rem1 > 0) {
        slot_of_first->push_back(static_cast<std::uint16_t>(slot));
        walk_labels(rem1 - 1, rem2, rem_both, slot_of_first, slot_of_second, slot + 1, emit);
        slot_of_first->pop_back();
    }
    if (rem2 > 0) {
        slot_of_second->push_back(static_cast<std::uint16_t>(slot));
        walk_labels(rem1, rem2 - 1, rem_both, slot_of_first, slot_of_second, slot + 1, emit);
        slot_of_second->pop_back();
    }
    if (rem_both > 0) {
        slot_of_first->push_back(static_cast<std::uint16_t>(slot));
        slot_of_second->push_back(static_cast<std::uint16_t>(slot));
        walk_labels(rem1, rem2, rem_both - 1, slot_of_first, slot_of_second, slot + 1, emit);
        slot_of_first->pop_back();
        slot_of_second->pop_back();
    }
}

}  // namespace

std::vector<SurjectionPattern> enumerate_patterns(int n, int m, int i) {
    if (n < 0 || m < 0 || i < 0 || i > std::min(n, m))
        throw std::domain_error("enumerate_patterns: need 0 <= i <= min(n, m)");

    std::vector<SurjectionPattern> out;
    std::vector<std::uint16_t> slot_of_first, slot_of_second;
    slot_of_first.reserve(static_cast<std::size_t>(n));
    slot_of_second.reserve(static_cast<std::size_t>(m));
    walk_labels(n - i, m - i, i, &slot_of_first, &slot_of_second, 0, [&] {
        SurjectionPattern pat;
        pat.first_len = n;
        pat.second_len = m;
        pat.coincidences = i;
        pat.assignment.reserve(static_cast<std::size_t>(n + m));
        pat.assignment.insert(pat.assignment.end(), slot_of_first.begin(), slot_of_first.end());
        pat.assignment.insert(pat.assignment.end(), slot_of_second.begin(), slot_of_second.end());
        out.push_back(std::move(pat));
    });
    return out;
}

LinComb oracle_product(const Word& w1, const Word& w2, bool signed_merge) {
    const int n = static_cast<int>(w1.length());
    const int m = static_cast<int>(w2.length());

    LinComb::Terms terms;
    std::vector<Word::Letter> letters;
    letters.reserve(static_cast<std::size_t>(n + m));

    // Single walk over all coincidence counts at once: each completed walk
    // is one pattern, its sign (-1)^coincidences when the merge is signed.
    auto walk = [&](auto&& self, int i1, int i2, int merges) -> void {
        if (i1 == n && i2 == m) {
            terms.push_back({Word(std::span<const Word::Letter>(letters)),
                             signed_merge && (merges & 1) ? Int(-1) : Int(1)});
            return;
        }
        if (i1 < n) {
            letters.push_back(w1[static_cast<std::size_t>(i1)]);
            self(self, i1 + 1, i2, merges);
            letters.pop_back();
        }
        if (i2 < m) {
            letters.push_back(w2[static_cast<std::size_t>(i2)]);
            self(self, i1, i2 + 1, merges);
            letters.pop_back();
        }
        if (i1 < n && i2 < m) {
            letters.push_back(w1[static_cast<std::size_t>(i1)] + w2[static_cast<std::size_t>(i2)]);
            self(self, i1 + 1, i2 + 1, merges + 1);
            letters.pop_back();
        }
    };
    walk(walk, 0, 0, 0);
    return LinComb::from_terms(std::move(terms));
}

}  // namespace stuffle
