#pragma once

#include "stuffle/lincomb.hpp"
#include "stuffle/word.hpp"

namespace stuffle {

// The two quasi-shuffle products on the word algebra, defined by
//
//   1 * w = w * 1 = w
//   z_k u * z_l v = z_k (u * z_l v) + z_l (z_k u * v) + z_{k+l} (u * v)
//
// and the variant with a negated merge term
//
//   z_k u ~* z_l v = z_k (u ~* z_l v) + z_l (z_k u ~* v) - z_{k+l} (u ~* v).
//
// Both are commutative and associative, and weight-graded: every word in
// w1 * w2 has weight wt(w1) + wt(w2).

LinComb stuffle(const Word& w1, const Word& w2);
LinComb stuffle_star(const Word& w1, const Word& w2);

// Bilinear extensions.
LinComb stuffle(const LinComb& a, const LinComb& b);
LinComb stuffle_star(const LinComb& a, const LinComb& b);
LinComb stuffle(const Word& a, const LinComb& b);
LinComb stuffle(const LinComb& a, const Word& b);
LinComb stuffle_star(const Word& a, const LinComb& b);
LinComb stuffle_star(const LinComb& a, const Word& b);

}  // namespace stuffle
