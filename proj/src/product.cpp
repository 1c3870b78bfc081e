#include "stuffle/product.hpp"

#include <utility>
#include <vector>

#include "stuffle/instrumentation.hpp"

namespace stuffle {

// Internal kernel helper; friend of LinComb so a table row that is already
// in canonical order can be adopted without re-sorting.
class ProductTable {
public:
    static LinComb adopt(LinComb::Terms&& terms) {
        LinComb::check_cap(terms.size());
        LinComb c;
        c.terms_ = std::move(terms);
        return c;
    }
};

namespace {

using Terms = LinComb::Terms;

Terms prepend_terms(Word::Letter k, const Terms& src, bool negate = false) {
    Terms out;
    out.reserve(src.size());
    for (const auto& t : src) out.push_back({t.word.prepended(k), negate ? -t.coeff : t.coeff});
    return out;
}

Terms merge_two(Terms&& x, Terms&& y) {
    Terms out;
    out.reserve(x.size() + y.size());
    auto a = x.begin(), ae = x.end();
    auto b = y.begin(), be = y.end();
    while (a != ae && b != be) {
        if (a->word < b->word) {
            out.push_back(std::move(*a++));
        } else if (b->word < a->word) {
            out.push_back(std::move(*b++));
        } else {
            Int c = a->coeff + b->coeff;
            if (c != 0) out.push_back({std::move(a->word), std::move(c)});
            ++a, ++b;
        }
    }
    while (a != ae) out.push_back(std::move(*a++));
    while (b != be) out.push_back(std::move(*b++));
    return out;
}

// Evaluates the defining recursion by dynamic programming over suffix
// pairs: cell (i,j) holds suffix_i(w1) * suffix_j(w2). Each cell is the
// three-term combination
//
//   z_{a_i} (i+1, j)  +  z_{b_j} (i, j+1)  +/-  z_{a_i + b_j} (i+1, j+1)
//
// and every contribution stays canonically sorted under a letter prepend,
// so cells are built by linear merges.
LinComb product_words(const Word& a, const Word& b, bool star) {
    instrumentation::detail::count_definitional();
    const std::size_t n = a.length(), m = b.length();
    std::vector<Terms> table((n + 1) * (m + 1));
    auto at = [&](std::size_t i, std::size_t j) -> Terms& { return table[i * (m + 1) + j]; };

    for (std::size_t ii = n + 1; ii-- > 0;) {
        for (std::size_t jj = m + 1; jj-- > 0;) {
            Terms& cell = at(ii, jj);
            if (ii == n && jj == m) {
                cell.push_back({Word{}, Int(1)});
            } else if (ii == n) {
                cell.push_back({b.suffix_from(jj), Int(1)});
            } else if (jj == m) {
                cell.push_back({a.suffix_from(ii), Int(1)});
            } else {
                Terms t1 = prepend_terms(a[ii], at(ii + 1, jj));
                Terms t2 = prepend_terms(b[jj], at(ii, jj + 1));
                Terms t3 = prepend_terms(a[ii] + b[jj], at(ii + 1, jj + 1), star);
                cell = merge_two(merge_two(std::move(t1), std::move(t2)), std::move(t3));
            }
        }
    }
    return ProductTable::adopt(std::move(at(0, 0)));
}

LinComb product_lin(const LinComb& a, const LinComb& b, bool star) {
    LinComb out;
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            LinComb p = product_words(ta.word, tb.word, star);
            p *= ta.coeff * tb.coeff;
            out += p;
        }
    }
    return out;
}

}  // namespace

LinComb stuffle(const Word& w1, const Word& w2) { return product_words(w1, w2, false); }
LinComb stuffle_star(const Word& w1, const Word& w2) { return product_words(w1, w2, true); }

LinComb stuffle(const LinComb& a, const LinComb& b) { return product_lin(a, b, false); }
LinComb stuffle_star(const LinComb& a, const LinComb& b) { return product_lin(a, b, true); }

LinComb stuffle(const Word& a, const LinComb& b) { return product_lin(LinComb(a), b, false); }
LinComb stuffle(const LinComb& a, const Word& b) { return product_lin(a, LinComb(b), false); }
LinComb stuffle_star(const Word& a, const LinComb& b) { return product_lin(LinComb(a), b, true); }
LinComb stuffle_star(const LinComb& a, const Word& b) { return product_lin(a, LinComb(b), true); }

}  // namespace stuffle
