#include "stuffle/formulas.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "stuffle/errors.hpp"
#include "stuffle/instrumentation.hpp"
#include "stuffle/product.hpp"

namespace stuffle {

namespace {

void require_nonnegative(int v, const char* what) {
    if (v < 0) throw std::domain_error(std::string(what) + " must be >= 0");
}

// z_first z_p^run
Word group_word(Word::Letter first, Word::Letter p, int run) {
    Word w;
    w = w.appended(first);
    for (int i = 0; i < run; ++i) w = w.appended(p);
    return w;
}

// Simple product with the vanishing convention for negative powers.
LinComb simple_or_zero(Word::Letter p, int m, int n, bool star) {
    if (m < 0 || n < 0) return LinComb{};
    return simple_product_closed(p, m, n, star);
}

}  // namespace

std::vector<Word> enumerate_support(const PowerSupport& s) {
    require_nonnegative(s.singles, "singles");
    require_nonnegative(s.doubles, "doubles");
    if (s.p == 0) throw std::domain_error("base letter must be >= 1");

    std::vector<Word::Letter> letters;
    letters.reserve(static_cast<std::size_t>(s.singles + s.doubles));
    letters.insert(letters.end(), static_cast<std::size_t>(s.singles), s.p);
    letters.insert(letters.end(), static_cast<std::size_t>(s.doubles), 2 * s.p);

    // Multiset permutations in lexicographic order; all words share weight
    // and length, so this is canonical order.
    std::vector<Word> out;
    do {
        out.emplace_back(std::span<const Word::Letter>(letters));
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

LinComb simple_product_closed(Word::Letter p, int m, int n, bool star) {
    require_nonnegative(m, "m");
    require_nonnegative(n, "n");
    instrumentation::detail::count_simple();

    LinComb::Terms terms;
    for (int i = 0; i <= std::min(m, n); ++i) {
        Int c = binomial(m + n - 2 * i, m - i);
        if (star && (i & 1)) c = -c;
        for (Word& w : enumerate_support({p, m + n - 2 * i, i}))
            terms.push_back({std::move(w), c});
    }
    return LinComb::from_terms(std::move(terms));
}

LinComb recursive_expand(const Word& w1, const Word& w2, int j, bool star) {
    if (j < 1 || j > static_cast<int>(w1.length()))
        throw std::domain_error("recursive_expand: need 1 <= j <= len(w1)");

    const auto ju = static_cast<std::size_t>(j);
    const Word head1 = w1.prefix(ju - 1);
    const Word::Letter kj = w1[ju - 1];
    const Word tail1 = w1.suffix_from(ju);
    const int n = static_cast<int>(w2.length());

    auto prod = [&](const Word& a, const Word& b) {
        return star ? stuffle_star(a, b) : stuffle(a, b);
    };

    LinComb out;
    for (int i = 0; i <= n; ++i) {
        const auto iu = static_cast<std::size_t>(i);
        LinComb head = prod(head1, w2.prefix(iu)).appended(kj);
        if (i >= 1) {
            LinComb merged = prod(head1, w2.prefix(iu - 1)).appended(kj + w2[iu - 1]);
            head = star ? head - merged : head + merged;
        }
        out += concat(head, prod(tail1, w2.suffix_from(iu)));
    }
    return out;
}

LinComb expand_1x1(Word::Letter k, Word::Letter l, Word::Letter p, int m, int n, bool star) {
    require_nonnegative(m, "m");
    require_nonnegative(n, "n");
    const Int s = star ? -1 : 1;

    LinComb out;
    for (int i = 1; i <= m; ++i) {
        LinComb head = LinComb(concat(group_word(k, p, i), Word{l})) +
                       s * LinComb(concat(group_word(k, p, i - 1), Word{p + l}));
        out += concat(head, simple_product_closed(p, m - i, n, star));
    }
    for (int i = 1; i <= n; ++i) {
        LinComb head = LinComb(concat(group_word(l, p, i), Word{k})) +
                       s * LinComb(concat(group_word(l, p, i - 1), Word{p + k}));
        out += concat(head, simple_product_closed(p, n - i, m, star));
    }
    LinComb pairs = LinComb(Word{k, l}) + LinComb(Word{l, k}) + s * LinComb(Word{k + l});
    out += concat(pairs, simple_product_closed(p, m, n, star));
    return out;
}

LinComb expand_0x1(Word::Letter p, Word::Letter l, int m, int n1, int n2) {
    require_nonnegative(m, "m");
    require_nonnegative(n1, "n1");
    require_nonnegative(n2, "n2");

    LinComb out;
    for (int i = 0; i <= m; ++i) {
        LinComb head = simple_product_closed(p, i, n1, false).appended(l) +
                       simple_or_zero(p, i - 1, n1, false).appended(p + l);
        out += concat(head, simple_product_closed(p, m - i, n2, false));
    }
    return out;
}

LinComb expand_0x2(Word::Letter p, Word::Letter l1, Word::Letter l2, int m, int n1, int n2) {
    require_nonnegative(m, "m");
    require_nonnegative(n1, "n1");
    require_nonnegative(n2, "n2");

    LinComb out;
    for (int i2 = 0; i2 <= m; ++i2) {
        for (int i1 = 0; i1 <= i2; ++i1) {
            LinComb first = LinComb(concat(Word::power(p, i1), Word{l1}));
            if (i1 >= 1) first += LinComb(concat(Word::power(p, i1 - 1), Word{p + l1}));
            LinComb mid = simple_product_closed(p, i2 - i1, n1, false).appended(l2) +
                          simple_or_zero(p, i2 - i1 - 1, n1, false).appended(p + l2);
            out += concat(first, concat(mid, simple_product_closed(p, m - i2, n2, false)));
        }
    }
    return out;
}

LinComb expand_1x2(Word::Letter k, Word::Letter l1, Word::Letter l2, Word::Letter p, int m,
                   int n1, int n2, bool star) {
    require_nonnegative(m, "m");
    require_nonnegative(n1, "n1");
    require_nonnegative(n2, "n2");
    const Int s = star ? -1 : 1;

    LinComb out;

    // group by group-letter placement of z_k: before l1, between l1 and l2,
    // merged with l1 or l2, or after l2.
    for (int i2 = 0; i2 <= m; ++i2) {
        for (int i1 = 0; i1 <= i2; ++i1) {
            LinComb first = LinComb(concat(group_word(k, p, i1), Word{l1}));
            if (i1 >= 1)
                first += s * LinComb(concat(group_word(k, p, i1 - 1), Word{p + l1}));
            LinComb mid = simple_product_closed(p, i2 - i1, n1, star).appended(l2) +
                          s * simple_or_zero(p, i2 - i1 - 1, n1, star).appended(p + l2);
            out += concat(first, concat(mid, simple_product_closed(p, m - i2, n2, star)));
        }
    }

    for (int i1 = 0; i1 <= n1; ++i1) {
        for (int i2 = 0; i2 <= m; ++i2) {
            LinComb first = LinComb(concat(group_word(l1, p, i1), Word{k}));
            if (i1 >= 1)
                first += s * LinComb(concat(group_word(l1, p, i1 - 1), Word{p + k}));
            LinComb mid = simple_product_closed(p, i2, n1 - i1, star).appended(l2) +
                          s * simple_or_zero(p, i2 - 1, n1 - i1, star).appended(p + l2);
            out += concat(first, concat(mid, simple_product_closed(p, m - i2, n2, star)));
        }
    }

    out += s * concat(LinComb(concat(group_word(l1, p, n1), Word{k + l2})),
                      simple_product_closed(p, m, n2, star));

    for (int i = 0; i <= n2; ++i) {
        Word base = concat(group_word(l1, p, n1), Word{l2});
        LinComb head = LinComb(concat(concat(base, Word::power(p, i)), Word{k}));
        if (i >= 1)
            head += s * LinComb(concat(concat(base, Word::power(p, i - 1)), Word{p + k}));
        out += concat(head, simple_product_closed(p, m, n2 - i, star));
    }

    for (int i = 0; i <= m; ++i) {
        LinComb mid = simple_product_closed(p, i, n1, star).appended(l2) +
                      s * simple_or_zero(p, i - 1, n1, star).appended(p + l2);
        out += s * concat(LinComb(Word{k + l1}), concat(mid, simple_product_closed(p, m - i, n2, star)));
    }

    return out;
}

Word GeneralProductSpec::left_word() const {
    Word w;
    for (const auto& g : left) w = concat(w, group_word(g.letter, p, g.run));
    return w;
}

Word GeneralProductSpec::right_word() const {
    Word w;
    for (const auto& g : right) w = concat(w, group_word(g.letter, p, g.run));
    return w;
}

namespace {

// Structural form z_p^lead z_{c_1} z_p^{a_1} ... z_{c_q} z_p^{a_q} used by
// the reducer. Group letters are tracked by position, not value, so a group
// letter equal to the base letter never changes the cascade shape.
struct GW {
    int lead = 0;
    std::vector<GroupRun> groups;

    friend auto operator<=>(const GW&, const GW&) = default;

    int len() const {
        int n = lead;
        for (const auto& g : groups) n += 1 + g.run;
        return n;
    }

    Word::Letter letter_at(Word::Letter p, int idx) const {
        if (idx < lead) return p;
        int off = lead;
        for (const auto& g : groups) {
            if (idx == off) return g.letter;
            off += 1;
            if (idx < off + g.run) return p;
            off += g.run;
        }
        throw std::out_of_range("GW::letter_at");
    }

    GW prefix(int n) const {
        GW out;
        int rem = n;
        out.lead = std::min(lead, rem);
        rem -= out.lead;
        for (const auto& g : groups) {
            if (rem == 0) break;
            rem -= 1;
            int take = std::min(g.run, rem);
            out.groups.push_back({g.letter, take});
            rem -= take;
        }
        return out;
    }

    GW suffix(int from) const {
        GW out;
        int skip = from;
        if (skip <= lead) {
            out.lead = lead - skip;
            out.groups = groups;
            return out;
        }
        skip -= lead;
        for (std::size_t t = 0; t < groups.size(); ++t) {
            skip -= 1;  // the group letter
            if (skip < 0) {
                out.lead = 0;
                out.groups.assign(groups.begin() + static_cast<std::ptrdiff_t>(t),
                                  groups.end());
                return out;
            }
            if (skip <= groups[t].run) {
                out.lead = groups[t].run - skip;
                out.groups.assign(groups.begin() + static_cast<std::ptrdiff_t>(t) + 1,
                                  groups.end());
                return out;
            }
            skip -= groups[t].run;
        }
        return out;  // empty
    }
};

struct ReduceCtx {
    Word::Letter p;
    bool star;
    ReduceStats stats;
    std::map<std::pair<int, int>, LinComb> simple_memo;  // confined to this call
    std::map<std::pair<GW, GW>, LinComb> pair_memo;      // shared sub-products

    const LinComb& simple(int m, int n) {
        ++stats.simple_products;
        auto key = std::make_pair(m, n);
        auto it = simple_memo.find(key);
        if (it == simple_memo.end())
            it = simple_memo.emplace(key, simple_product_closed(p, m, n, star)).first;
        return it->second;
    }
};

const LinComb& reduce_gw(const GW& a, const GW& b, ReduceCtx& ctx) {
    if (a.groups.empty() && b.groups.empty()) return ctx.simple(a.lead, b.lead);
    if (a.groups.empty()) return reduce_gw(b, a, ctx);  // commutative swap

    auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
    if (auto it = ctx.pair_memo.find(key); it != ctx.pair_memo.end()) return it->second;

    // Peel the first group letter of `a` (position lead+1). Prefix factors
    // pair a pure power with a prefix of `b`; tail factors lose one group.
    ++ctx.stats.peel_steps;
    const Word::Letter kj = a.groups[0].letter;
    GW head_a;
    head_a.lead = a.lead;
    const GW tail_a = a.suffix(a.lead + 1);
    const int n = b.len();

    LinComb out;
    for (int i = 0; i <= n; ++i) {
        LinComb head = reduce_gw(head_a, b.prefix(i), ctx).appended(kj);
        if (i >= 1) {
            LinComb merged =
                reduce_gw(head_a, b.prefix(i - 1), ctx).appended(kj + b.letter_at(ctx.p, i - 1));
            head = ctx.star ? head - merged : head + merged;
        }
        out += concat(head, reduce_gw(tail_a, b.suffix(i), ctx));
    }
    return ctx.pair_memo.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

LinComb reduce_general(const GeneralProductSpec& spec, ReduceStats* stats) {
    if (spec.p == 0) throw std::domain_error("base letter must be >= 1");
    for (const auto& g : spec.left) {
        if (g.letter == 0) throw std::domain_error("group letter must be >= 1");
        require_nonnegative(g.run, "run");
    }
    for (const auto& g : spec.right) {
        if (g.letter == 0) throw std::domain_error("group letter must be >= 1");
        require_nonnegative(g.run, "run");
    }

    ReduceCtx ctx{spec.p, spec.star, {}, {}};
    GW a{0, spec.left};
    GW b{0, spec.right};
    LinComb out = reduce_gw(a, b, ctx);
    if (stats) *stats = ctx.stats;
    return out;
}

LinComb zeta_product_1x1(Word::Letter k, Word::Letter l, Word::Letter p, int m, int n,
                         bool star) {
    if (k < 2 || l < 2)
        throw AdmissibilityError("zeta_product_1x1: leading indices must be >= 2");
    require_nonnegative(m, "m");
    require_nonnegative(n, "n");
    const Int s = star ? -1 : 1;

    LinComb::Terms terms;
    auto emit = [&](const Word& w, Int c) { terms.push_back({w, std::move(c)}); };

    Int sj = 1;  // (+/-1)^j as j advances
    for (int i = 1; i <= m; ++i) {
        sj = 1;
        for (int j = 0; j <= std::min(m - i, n); ++j, sj *= s) {
            Int c = sj * binomial(m + n - i - 2 * j, n - j);
            for (const Word& tail : enumerate_support({p, m + n - i - 2 * j, j})) {
                emit(concat(concat(group_word(k, p, i), Word{l}), tail), c);
                emit(concat(concat(group_word(k, p, i - 1), Word{p + l}), tail), s * c);
            }
        }
    }
    for (int i = 1; i <= n; ++i) {
        sj = 1;
        for (int j = 0; j <= std::min(m, n - i); ++j, sj *= s) {
            Int c = sj * binomial(m + n - i - 2 * j, m - j);
            for (const Word& tail : enumerate_support({p, m + n - i - 2 * j, j})) {
                emit(concat(concat(group_word(l, p, i), Word{k}), tail), c);
                emit(concat(concat(group_word(l, p, i - 1), Word{p + k}), tail), s * c);
            }
        }
    }
    sj = 1;
    for (int j = 0; j <= std::min(m, n); ++j, sj *= s) {
        Int c = sj * binomial(m + n - 2 * j, m - j);
        for (const Word& tail : enumerate_support({p, m + n - 2 * j, j})) {
            emit(concat(Word{k, l}, tail), c);
            emit(concat(Word{l, k}, tail), c);
            emit(concat(Word{k + l}, tail), s * c);
        }
    }

    LinComb out = LinComb::from_terms(std::move(terms));
    for (const auto& t : out.terms()) {
        if (t.word.empty() || t.word[0] < 2)
            throw AdmissibilityError("zeta_product_1x1: emitted a non-admissible index");
    }
    return out;
}

}  // namespace stuffle
