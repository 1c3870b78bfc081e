#include "stuffle/textio.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "stuffle/errors.hpp"

namespace stuffle {

namespace {

// Cursor over the input with 1-based column reporting.
struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    std::size_t column() const { return pos + 1; }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
    }

    bool consume(char c) {
        if (!eof() && peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what, column());
    }

    std::uint64_t number(const char* what) {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail(std::string("expected ") + what);
        std::uint64_t v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (v > 1'000'000'000ULL) fail(std::string(what) + " out of range");
            ++pos;
        }
        return v;
    }
};

}  // namespace

Word parse_word(std::string_view text) {
    Scanner s{text};
    s.skip_ws();
    if (s.eof()) s.fail("empty input; the empty word is \"()\"");

    if (s.consume('(')) {
        s.skip_ws();
        if (!s.consume(')')) s.fail("expected ')'");
        s.skip_ws();
        if (!s.eof()) s.fail("trailing input after \"()\"");
        return Word{};
    }

    std::vector<Word::Letter> letters;
    for (;;) {
        s.skip_ws();
        if (s.consume('{')) {
            std::size_t col = s.column();
            std::uint64_t p = s.number("letter index");
            if (p == 0) throw ParseError("letter index must be >= 1", col);
            s.skip_ws();
            if (!s.consume('}')) s.fail("expected '}'");
            if (!s.consume('^')) s.fail("expected '^'");
            std::uint64_t reps = s.number("repeat count");
            for (std::uint64_t i = 0; i < reps; ++i)
                letters.push_back(static_cast<Word::Letter>(p));
        } else {
            std::size_t col = s.column();
            std::uint64_t p = s.number("letter index");
            if (p == 0) throw ParseError("letter index must be >= 1", col);
            letters.push_back(static_cast<Word::Letter>(p));
        }
        s.skip_ws();
        if (s.consume(',')) continue;
        if (s.eof()) break;
        s.fail("expected ',' or end of input");
    }
    return Word(std::span<const Word::Letter>(letters));
}

std::string print_word(const Word& w) {
    if (w.empty()) return "()";
    std::ostringstream out;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (i) out << ',';
        out << w[i];
    }
    return out.str();
}

namespace {

std::string monomial_text(const Word& w, bool latex) {
    if (w.empty()) return "1";
    std::ostringstream out;
    for (auto k : w) {
        if (latex)
            out << "z_{" << k << "}";
        else
            out << 'z' << k;
    }
    return out.str();
}

std::string zeta_monomial(const Word& w, bool star, bool latex) {
    if (w.empty()) return "1";
    std::ostringstream out;
    if (latex)
        out << (star ? "\\zeta^\\star(" : "\\zeta(");
    else
        out << (star ? "ζ*(" : "ζ(");
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (i) out << ',';
        out << w[i];
    }
    out << ')';
    return out.str();
}

template <typename MonomialFn>
std::string combination_text(const LinComb& c, MonomialFn&& mono) {
    if (c.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : c.terms()) {
        Int a = t.coeff < 0 ? Int(-t.coeff) : t.coeff;
        if (first) {
            if (t.coeff < 0) out << '-';
            first = false;
        } else {
            out << (t.coeff < 0 ? " - " : " + ");
        }
        std::string m = mono(t.word);
        if (a != 1)
            out << a.str() << (m == "1" ? "" : " ");
        else if (m == "1")
            out << "1";
        if (m != "1") out << m;
        return_continue:;
    }
    return out.str();
}

}  // namespace

std::string to_text(const LinComb& c) {
    return combination_text(c, [](const Word& w) { return monomial_text(w, false); });
}

std::string to_latex(const LinComb& c) {
    return combination_text(c, [](const Word& w) { return monomial_text(w, true); });
}

std::string to_zeta_text(const LinComb& c, bool star) {
    return combination_text(c, [star](const Word& w) { return zeta_monomial(w, star, false); });
}

std::string to_zeta_latex(const LinComb& c, bool star) {
    return combination_text(c, [star](const Word& w) { return zeta_monomial(w, star, true); });
}

LinComb parse_lincomb(std::string_view text) {
    Scanner s{text};
    s.skip_ws();
    if (s.eof()) s.fail("empty input");

    LinComb::Terms terms;
    bool first = true;
    for (;;) {
        s.skip_ws();
        Int sign = 1;
        if (s.consume('-'))
            sign = -1;
        else if (s.consume('+')) {
            if (first) s.fail("unexpected '+'");
        } else if (!first) {
            if (s.eof()) break;
            s.fail("expected '+' or '-'");
        }
        first = false;
        s.skip_ws();

        Int coeff = 1;
        bool have_number = false;
        if (!s.eof() && std::isdigit(static_cast<unsigned char>(s.peek()))) {
            std::string digits;
            while (!s.eof() && std::isdigit(static_cast<unsigned char>(s.peek()))) {
                digits.push_back(s.peek());
                ++s.pos;
            }
            coeff = Int(digits);
            have_number = true;
        }
        s.skip_ws();

        std::vector<Word::Letter> letters;
        bool have_word = false;
        while (!s.eof() && s.peek() == 'z') {
            ++s.pos;
            std::size_t col = s.column();
            std::uint64_t k = s.number("letter index");
            if (k == 0) throw ParseError("letter index must be >= 1", col);
            letters.push_back(static_cast<Word::Letter>(k));
            have_word = true;
        }

        if (!have_number && !have_word) s.fail("expected a coefficient or a z-monomial");
        if (have_number && !have_word && coeff == 1 && digits_were_exactly_one(/*unused*/ 0)) {
        }
        terms.push_back({Word(std::span<const Word::Letter>(letters)), sign * coeff});

        s.skip_ws();
        if (s.eof()) break;
    }
    return LinComb::from_terms(std::move(terms));
}

std::string to_json_string(const LinComb& c, std::string_view op) {
    nlohmann::json doc;
    doc["meta"]["op"] = std::string(op);
    doc["meta"]["weight"] =
        c.is_zero() ? 0 : static_cast<std::uint64_t>(c.terms().back().word.weight());
    doc["terms"] = nlohmann::json::array();
    for (const auto& t : c.terms()) {
        nlohmann::json jt;
        jt["coeff"] = t.coeff.str();
        jt["word"] = nlohmann::json::array();
        for (auto k : t.word) jt["word"].push_back(k);
        doc["terms"].push_back(std::move(jt));
    }
    return doc.dump();
}

}  // namespace stuffle
