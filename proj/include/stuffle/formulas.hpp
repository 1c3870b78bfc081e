#pragma once

#include <cstdint>
#include <vector>

#include "stuffle/lincomb.hpp"
#include "stuffle/word.hpp"

namespace stuffle {

// Closed-form and recursive expansions of quasi-shuffle products. Every
// function here returns a combination equal to the corresponding
// definitional product; the verification suites assert those equalities.

// Words containing the letter z_p exactly `singles` times and z_{2p}
// exactly `doubles` times. The enumerated set has C(singles+doubles,
// doubles) words, each of length singles+doubles and weight
// (singles+2*doubles)*p.
struct PowerSupport {
    Word::Letter p = 1;
    int singles = 0;  // count of z_p
    int doubles = 0;  // count of z_{2p}
};

// All words of the support set, in canonical order.
std::vector<Word> enumerate_support(const PowerSupport& s);

// Closed form of the simple product z_p^m * z_p^n (star: the signed merge
// variant): sum over the coincidence count i of
// (+/-1)^i C(m+n-2i, m-i) times every word with m+n-2i letters z_p and i
// letters z_{2p}.
LinComb simple_product_closed(Word::Letter p, int m, int n, bool star);

// One step of the peel-at-position-j recursion: for 1 <= j <= len(w1),
//
//   w1 * w2 = sum_{i=0}^{n} [ (w1[..j) * w2[..i)) z_{k_j}
//                           + (w1[..j) * w2[..i-1)) z_{k_j + l_i} ]
//                           (w1(j..] * w2(i..])
//
// with the i = 0 merge term vanishing (reversed prefix range is zero) and a
// minus sign on the merge term for the star product. Sub-products are
// evaluated with the definitional product. Result is independent of j.
// Throws std::domain_error unless 1 <= j <= len(w1).
LinComb recursive_expand(const Word& w1, const Word& w2, int j, bool star);

// Expansion of z_k z_p^m * z_l z_p^n (one group on each side) into simple
// products, which are evaluated by simple_product_closed.
LinComb expand_1x1(Word::Letter k, Word::Letter l, Word::Letter p, int m, int n, bool star);

// Expansion of z_k z_p^m * z_{l1} z_p^{n1} z_{l2} z_p^{n2} (one group by
// two groups), five sum groups, negative powers of z_p vanishing.
LinComb expand_1x2(Word::Letter k, Word::Letter l1, Word::Letter l2, Word::Letter p, int m,
                   int n1, int n2, bool star);

// Expansion of z_p^m * z_p^{n1} z_l z_p^{n2} (pure power by one group).
// Plain product only.
LinComb expand_0x1(Word::Letter p, Word::Letter l, int m, int n1, int n2);

// Expansion of z_p^m * z_{l1} z_p^{n1} z_{l2} z_p^{n2} (pure power by two
// groups). Plain product only.
LinComb expand_0x2(Word::Letter p, Word::Letter l1, Word::Letter l2, int m, int n1, int n2);

// A product of two words presented as groups z_k z_p^run around a common
// base letter z_p, together with the product flavor.
struct GroupRun {
    Word::Letter letter = 1;
    int run = 0;  // trailing z_p count
    friend auto operator<=>(const GroupRun&, const GroupRun&) = default;
};

struct GeneralProductSpec {
    Word::Letter p = 1;
    std::vector<GroupRun> left;   // z_{k_1} z_p^{m_1} ... z_{k_r} z_p^{m_r}
    std::vector<GroupRun> right;  // z_{l_1} z_p^{n_1} ... z_{l_s} z_p^{n_s}
    bool star = false;

    Word left_word() const;
    Word right_word() const;
};

struct ReduceStats {
    std::uint64_t simple_products = 0;  // base-case closed-form evaluations
    std::uint64_t peel_steps = 0;       // recursion steps taken
};

// Reduces the general product to simple products: repeatedly peels the
// first group letter of whichever side still has one (position 1 first,
// then position run+1 inside the produced tails), and evaluates the
// resulting pure-power base cases with simple_product_closed. Never invokes
// the definitional recursion. Simple products are memoized per call.
LinComb reduce_general(const GeneralProductSpec& spec, ReduceStats* stats = nullptr);

// The explicit zeta-index expansion of zeta(k, {p}^m) * zeta(l, {p}^n)
// (star: the zeta-star analog): a combination whose words are admissible
// index strings. Equals expand_1x1 term by term. Requires k, l >= 2;
// throws AdmissibilityError otherwise, and also if any emitted index were
// not admissible.
LinComb zeta_product_1x1(Word::Letter k, Word::Letter l, Word::Letter p, int m, int n, bool star);

}  // namespace stuffle
