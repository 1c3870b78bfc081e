#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stuffle/errors.hpp"
#include "stuffle/lincomb.hpp"
#include "stuffle/word.hpp"

namespace stuffle {

// An admissible index (k_1, ..., k_n): positive integers with k_1 >= 2, the
// domain of the evaluation maps.
class ZetaIndex {
public:
    explicit ZetaIndex(std::span<const std::uint32_t> entries);
    ZetaIndex(std::initializer_list<std::uint32_t> entries)
        : ZetaIndex(std::span<const std::uint32_t>(entries.begin(), entries.size())) {}

    // Reads a nonempty admissible word as an index.
    static ZetaIndex from_word(const Word& w);

    const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }
    std::size_t depth() const noexcept { return entries_.size(); }

private:
    std::vector<std::uint32_t> entries_;
};

enum class TailMode {
    none,     // value only, no truncation-error estimate
    integral  // integral upper bound on the dropped outer tail
};

struct EvalConfig {
    std::int64_t cutoff = 20000;  // outer summation bound M
    TailMode tail_mode = TailMode::integral;
    double tolerance = 1e-3;  // relative tolerance used by consistency checks

    void validate() const;
};

struct EvalResult {
    double value = 0.0;
    double tail_bound = 0.0;  // upper bound on the truncation error
    bool bounded = false;     // tail_bound is meaningful
};

// Truncated nested sum over strictly decreasing summation variables
// m_1 > m_2 > ... > m_n >= 1 with m_1 <= cutoff, evaluated inner-to-outer in
// O(depth * cutoff). With TailMode::integral the result carries an upper
// bound on the dropped tail: the leftover outer sum is dominated by an
// integral of x^{-k_1} times an explicit bound on the inner partial sums
// (constant factors for inner exponents >= 2, logarithmic growth factors
// for inner exponents equal to 1). Rounding error is not modeled; at these
// magnitudes it is orders below the truncation term.
EvalResult eval_zeta(const ZetaIndex& idx, const EvalConfig& cfg);

// Same with non-strict inequalities m_1 >= ... >= m_n >= 1.
EvalResult eval_zeta_star(const ZetaIndex& idx, const EvalConfig& cfg);

// Linear extension of the evaluation map over a combination: the empty word
// maps to 1, the word z_{k_1}...z_{k_n} to the (star) nested sum of its
// index. Error bounds accumulate with |coefficient| weights. Throws
// AdmissibilityError listing every non-admissible word present.
EvalResult apply_Z(const LinComb& c, bool star, const EvalConfig& cfg);

}  // namespace stuffle
