#pragma once

// Independent brute-force oracles used only by the tests. Everything here is
// built on raw one-line arrays so that a bug in the library's permutation or
// Bruhat machinery cannot hide behind shared code.

#include <map>
#include <vector>

#include "qmtilt/poly.hpp"

namespace oracles {

using Word = std::vector<int>; // one-line notation, values 1..n

std::vector<Word> sym(int n);
int inversions(const Word& w);
Word swap_values(const Word& w, int a, int b);
Word swap_positions(const Word& w, int i); // right multiply by s_i (1-based)

// u <= w via reachability in the reflection graph (edges increase length).
bool leq_by_reachability(const Word& u, const Word& w);

// u <= w via the subword property: some subsequence of a fixed reduced word
// of w, of length inversions(u), multiplies to u.
bool leq_by_subword(const Word& u, const Word& w);

// Kazhdan-Lusztig polynomial computed by a second method: R-polynomials by
// their defining recursion, then P_{u,w} extracted from
//   q^{l(w)-l(u)} P_{u,w}(1/q) - P_{u,w}(q) = sum_{u<z<=w} R_{u,z} P_{z,w}.
qmtilt::IntPolynomial r_polynomial(const Word& u, const Word& w);
qmtilt::IntPolynomial kl_by_r_inversion(const Word& u, const Word& w);

} // namespace oracles
