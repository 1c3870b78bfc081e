#pragma once

#include <boost/container/small_vector.hpp>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>

namespace stuffle {

// A word over the alphabet {z_1, z_2, ...}: a finite sequence of positive
// letter indices. The empty sequence is the unit word 1. Words are immutable
// value types; the summed letter index (the weight) is cached because the
// canonical term order is graded.
class Word {
public:
    using Letter = std::uint32_t;
    using Storage = boost::container::small_vector<Letter, 10>;

    Word() = default;

    Word(std::initializer_list<Letter> letters)
        : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

    explicit Word(std::span<const Letter> letters) {
        letters_.reserve(letters.size());
        for (Letter k : letters) push(k);
    }

    // z_p repeated `count` times. count must be >= 0; see word_power() in
    // lincomb.hpp for the variant that encodes negative powers as zero.
    static Word power(Letter p, int count) {
        if (count < 0) throw std::domain_error("Word::power: negative count");
        Word w;
        w.letters_.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) w.push(p);
        return w;
    }

    bool empty() const noexcept { return letters_.empty(); }
    std::size_t length() const noexcept { return letters_.size(); }
    std::uint64_t weight() const noexcept { return weight_; }

    Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    // Contiguous slice [from, from+len) as a new word.
    Word slice(std::size_t from, std::size_t len) const {
        Word w;
        w.letters_.reserve(len);
        for (std::size_t i = 0; i < len; ++i) w.push(letters_[from + i]);
        return w;
    }

    Word prefix(std::size_t len) const { return slice(0, len); }
    Word suffix_from(std::size_t from) const { return slice(from, length() - from); }

    Word prepended(Letter k) const {
        check_letter(k);
        Word w;
        w.letters_.reserve(length() + 1);
        w.letters_.push_back(k);
        w.letters_.insert(w.letters_.end(), letters_.begin(), letters_.end());
        w.weight_ = weight_ + k;
        return w;
    }

    Word appended(Letter k) const {
        Word w = *this;
        w.push(k);
        return w;
    }

    friend Word concat(const Word& a, const Word& b) {
        Word w = a;
        w.letters_.insert(w.letters_.end(), b.letters_.begin(), b.letters_.end());
        w.weight_ = a.weight_ + b.weight_;
        return w;
    }

    bool operator==(const Word&) const = default;

    // Canonical order: graded lexicographic (weight, then length, then the
    // letter sequence). Serialized output ordering relies on this.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
        if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
        for (std::size_t i = 0; i < a.letters_.size(); ++i)
            if (auto c = a.letters_[i] <=> b.letters_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

private:
    void push(Letter k) {
        check_letter(k);
        letters_.push_back(k);
        weight_ += k;
    }

    static void check_letter(Letter k) {
        if (k == 0) throw std::invalid_argument("Word: letter index must be >= 1");
    }

    Storage letters_;
    std::uint64_t weight_ = 0;
};

inline std::uint64_t weight(const Word& w) noexcept { return w.weight(); }
inline std::size_t length(const Word& w) noexcept { return w.length(); }

}  // namespace stuffle
