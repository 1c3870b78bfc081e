#include "stuffle/lincomb.hpp"

#include <algorithm>

namespace stuffle {

namespace {
std::atomic<std::size_t> g_max_terms{1'000'000};

bool term_less(const LinComb::Term& a, const LinComb::Term& b) {
    return a.word < b.word;
}
}  // namespace

void LinComb::set_max_terms(std::size_t cap) noexcept { g_max_terms.store(cap); }
std::size_t LinComb::max_terms() noexcept { return g_max_terms.load(); }

void LinComb::check_cap(std::size_t n) {
    if (n > g_max_terms.load(std::memory_order_relaxed))
        throw TermLimitError("term count exceeds STUFFLE_MAX_TERMS cap");
}

LinComb LinComb::from_terms(Terms terms) {
    std::sort(terms.begin(), terms.end(), term_less);
    LinComb out;
    out.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!out.terms_.empty() && out.terms_.back().word == t.word) {
            out.terms_.back().coeff += t.coeff;
            if (out.terms_.back().coeff == 0) out.terms_.pop_back();
        } else {
            out.terms_.push_back(std::move(t));
        }
    }
    check_cap(out.terms_.size());
    return out;
}

Int LinComb::coeff(const Word& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, const Word& k) { return t.word < k; });
    if (it != terms_.end() && it->word == w) return it->coeff;
    return Int(0);
}

LinComb& LinComb::operator+=(const LinComb& rhs) {
    if (rhs.terms_.empty()) return *this;
    Terms merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = rhs.terms_.begin(), be = rhs.terms_.end();
    while (a != ae && b != be) {
        if (a->word < b->word) {
            merged.push_back(std::move(*a++));
        } else if (b->word < a->word) {
            merged.push_back(*b++);
        } else {
            Int c = a->coeff + b->coeff;
            if (c != 0) merged.push_back({std::move(a->word), std::move(c)});
            ++a, ++b;
        }
    }
    merged.insert(merged.end(), std::make_move_iterator(a), std::make_move_iterator(ae));
    merged.insert(merged.end(), b, be);
    check_cap(merged.size());
    terms_ = std::move(merged);
    return *this;
}

LinComb& LinComb::operator-=(const LinComb& rhs) { return *this += -rhs; }

LinComb& LinComb::operator*=(const Int& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

LinComb LinComb::operator-() const {
    LinComb out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

LinComb concat(const LinComb& a, const LinComb& b) {
    LinComb::Terms terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            terms.push_back({concat(ta.word, tb.word), ta.coeff * tb.coeff});
    return LinComb::from_terms(std::move(terms));
}

LinComb concat(const LinComb& a, const Word& b) { return concat(a, LinComb(b)); }
LinComb concat(const Word& a, const LinComb& b) { return concat(LinComb(a), b); }

LinComb LinComb::prepended(Word::Letter k) const {
    // Every term gains the same weight and length, and the new first letter
    // ties, so graded lex order is unchanged.
    LinComb out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.word.prepended(k), t.coeff});
    return out;
}

LinComb LinComb::appended(Word::Letter k) const {
    LinComb out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.word.appended(k), t.coeff});
    return out;
}

}  // namespace stuffle
