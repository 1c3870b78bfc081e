#pragma once

#include <atomic>
#include <cstddef>
#include <utility>
#include <vector>

#include "stuffle/bigint.hpp"
#include "stuffle/errors.hpp"
#include "stuffle/word.hpp"

namespace stuffle {

// A finite formal sum of words with integer coefficients. Terms are kept in
// canonical (graded lexicographic) order with no zero coefficients, so
// structural equality and serialized output are deterministic.
//
// The zero combination doubles as the "vanishing" convention used by the
// expansion formulas: negative powers of a letter and reversed index ranges
// are the zero element of the algebra.
class LinComb {
public:
    struct Term {
        Word word;
        Int coeff;
        bool operator==(const Term&) const = default;
    };
    using Terms = std::vector<Term>;

    LinComb() = default;  // zero

    explicit LinComb(Word w, Int c = Int(1)) {
        if (c != 0) terms_.push_back({std::move(w), std::move(c)});
    }

    static LinComb unit() { return LinComb(Word{}); }

    // Builds a combination from arbitrary terms: sorts, merges duplicates,
    // prunes zeros.
    static LinComb from_terms(Terms terms);

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const Terms& terms() const noexcept { return terms_; }

    // Coefficient of `w`, zero if absent.
    Int coeff(const Word& w) const;

    LinComb& operator+=(const LinComb& rhs);
    LinComb& operator-=(const LinComb& rhs);
    LinComb& operator*=(const Int& c);

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Int& c) { return a *= c; }
    friend LinComb operator*(const Int& c, LinComb a) { return a *= c; }
    LinComb operator-() const;

    bool operator==(const LinComb&) const = default;

    // Word concatenation extended bilinearly (not a stuffle product).
    friend LinComb concat(const LinComb& a, const LinComb& b);
    friend LinComb concat(const LinComb& a, const Word& b);
    friend LinComb concat(const Word& a, const LinComb& b);

    // Prepend/append a letter to every term. Both preserve canonical order.
    LinComb prepended(Word::Letter k) const;
    LinComb appended(Word::Letter k) const;

    // Global cap on term counts, a guard against runaway inputs. Exceeding
    // it throws TermLimitError.
    static void set_max_terms(std::size_t cap) noexcept;
    static std::size_t max_terms() noexcept;

private:
    friend class ProductTable;  // internal product kernel builds terms directly

    static void check_cap(std::size_t n);

    Terms terms_;
};

// z_p^e as a combination: the word z_p...z_p for e >= 0 (the empty word for
// e = 0), the zero combination for e < 0.
inline LinComb word_power(Word::Letter p, int e) {
    if (e < 0) return LinComb{};
    return LinComb(Word::power(p, e));
}

}  // namespace stuffle
