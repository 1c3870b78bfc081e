#include "stuffle/zeta_eval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace stuffle {

ZetaIndex::ZetaIndex(std::span<const std::uint32_t> entries)
    : entries_(entries.begin(), entries.end()) {
    if (entries_.empty()) throw AdmissibilityError("index must be nonempty");
    if (entries_[0] < 2) throw AdmissibilityError("leading index entry must be >= 2");
    for (auto k : entries_)
        if (k == 0) throw AdmissibilityError("index entries must be >= 1");
}

ZetaIndex ZetaIndex::from_word(const Word& w) {
    std::vector<std::uint32_t> e(w.begin(), w.end());
    return ZetaIndex(std::span<const std::uint32_t>(e));
}

void EvalConfig::validate() const {
    if (cutoff < 1) throw std::domain_error("cutoff must be >= 1");
    if (!(tolerance > 0)) throw std::domain_error("tolerance must be > 0");
}

namespace {

double pow_int(double x, std::uint32_t e) {
    double r = 1.0;
    while (e) {
        if (e & 1) r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

double inv_pow(std::int64_t t, std::uint32_t k) {
    return 1.0 / pow_int(static_cast<double>(t), k);
}

// Partial single sum H_M(k) = sum_{t<=M} t^{-k}.
double partial_single_sum(std::int64_t M, std::uint32_t k) {
    double s = 0.0;
    for (std::int64_t t = 1; t <= M; ++t) s += inv_pow(t, k);
    return s;
}

// Upper bound on sum_{m>M} m^{-k} (1+ln m)^a via explicit terms up to the
// point where the summand is decreasing, then the closed-form integral
//   int_X^inf x^{-k} (1+ln x)^a dx
//     = X^{1-k} sum_{j<=a} C(a,j) (1+ln X)^{a-j} j! / (k-1)^{j+1}.
double tail_sum_bound(std::uint32_t k, int a, std::int64_t M) {
    auto f = [&](double x) { return std::pow(x, -double(k)) * std::pow(1.0 + std::log(x), a); };
    // decreasing once k (1 + ln x) > a
    std::int64_t safe = M;
    if (a > 0) {
        double x_safe = std::exp(double(a) / double(k) - 1.0);
        safe = std::max<std::int64_t>(M, static_cast<std::int64_t>(std::ceil(x_safe)) + 1);
    }
    double bound = 0.0;
    for (std::int64_t t = M + 1; t <= safe; ++t) bound += f(static_cast<double>(t));

    const double X = static_cast<double>(safe);
    const double c = 1.0 + std::log(X);
    double binom = 1.0, factorial = 1.0, inv_km1 = 1.0 / double(k - 1);
    double kpow = inv_km1;
    double integral = 0.0;
    for (int j = 0; j <= a; ++j) {
        integral += binom * std::pow(c, a - j) * factorial * kpow;
        binom = binom * double(a - j) / double(j + 1);
        factorial *= double(j + 1);
        kpow *= inv_km1;
    }
    integral *= std::pow(X, 1.0 - double(k));
    return bound + integral;
}

EvalResult eval_nested(std::span<const std::uint32_t> k, const EvalConfig& cfg, bool strict) {
    cfg.validate();
    const std::int64_t M = cfg.cutoff;
    const int n = static_cast<int>(k.size());

    // P[t] = partial inner value over chains whose top variable is < t
    // (strict) or <= t (star); level n+1 is the empty chain.
    std::vector<double> P(static_cast<std::size_t>(M) + 1, 1.0);
    std::vector<double> Q(static_cast<std::size_t>(M) + 1);
    for (int j = n - 1; j >= 0; --j) {
        Q[0] = 0.0;
        for (std::int64_t t = 1; t <= M; ++t)
            Q[t] = Q[t - 1] + inv_pow(t, k[static_cast<std::size_t>(j)]) * (strict ? P[t - 1] : P[t]);
        std::swap(P, Q);
    }

    EvalResult res;
    res.value = P[static_cast<std::size_t>(M)];
    if (cfg.tail_mode == TailMode::none) return res;

    // Dropped tail: sum_{m>M} m^{-k_1} U(m) with U(m) the inner value at
    // outer variable m. Inner positions with exponent >= 2 contribute a
    // constant factor (full single sum plus its own tail); positions with
    // exponent 1 contribute at most (1+ln m) each, divided by a! in the
    // strict case (distinct ordered values).
    int ones = 0;
    double inner_const = 1.0;
    for (int j = 1; j < n; ++j) {
        const std::uint32_t kj = k[static_cast<std::size_t>(j)];
        if (kj == 1) {
            ++ones;
        } else {
            inner_const *= partial_single_sum(M, kj) +
                           std::pow(double(M), 1.0 - double(kj)) / (double(kj) - 1.0);
        }
    }
    double scale = 1.0;
    if (strict)
        for (int j = 2; j <= ones; ++j) scale /= double(j);
    res.tail_bound = inner_const * scale * tail_sum_bound(k[0], ones, M);
    res.bounded = true;
    return res;
}

}  // namespace

EvalResult eval_zeta(const ZetaIndex& idx, const EvalConfig& cfg) {
    return eval_nested(idx.entries(), cfg, /*strict=*/true);
}

EvalResult eval_zeta_star(const ZetaIndex& idx, const EvalConfig& cfg) {
    return eval_nested(idx.entries(), cfg, /*strict=*/false);
}

EvalResult apply_Z(const LinComb& c, bool star, const EvalConfig& cfg) {
    cfg.validate();
    std::vector<const Word*> offenders;
    for (const auto& t : c.terms())
        if (!t.word.empty() && t.word[0] < 2) offenders.push_back(&t.word);
    if (!offenders.empty()) {
        std::ostringstream msg;
        msg << "apply_Z: non-admissible words present:";
        for (const Word* w : offenders) {
            msg << " z" << (*w)[0];
            for (std::size_t i = 1; i < w->length(); ++i) msg << "z" << (*w)[i];
        }
        throw AdmissibilityError(msg.str());
    }

    EvalResult out;
    out.bounded = true;
    for (const auto& t : c.terms()) {
        const double coeff = t.coeff.convert_to<double>();
        if (t.word.empty()) {
            out.value += coeff;  // unit word evaluates to 1 exactly
            continue;
        }
        std::vector<std::uint32_t> e(t.word.begin(), t.word.end());
        EvalResult r = eval_nested(e, cfg, !star);
        out.value += coeff * r.value;
        out.tail_bound += std::abs(coeff) * r.tail_bound;
        out.bounded = out.bounded && (r.bounded || cfg.tail_mode == TailMode::none);
    }
    if (cfg.tail_mode == TailMode::none) out.bounded = false;
    return out;
}

}  // namespace stuffle
