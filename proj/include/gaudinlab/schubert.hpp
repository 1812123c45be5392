#ifndef GAUDINLAB_SCHUBERT_HPP
#define GAUDINLAB_SCHUBERT_HPP

#include <vector>

#include "gaudinlab/alphabet.hpp"

namespace gaudinlab {

// Factorial powers and the symmetric part of the double-alphabet Schubert
// basis. Index vectors here are weakly INCREASING, matching the schur()
// convention elsewhere in this library; classical decreasing-index factorial
// Schur functions are the reversal of these. The y family is conceptually
// unbounded, so each entry point states how many y variables it needs.

// (x|y)^k = (x - y_1)(x - y_2)...(x - y_k); k = 0 gives 1.
LaurentPoly factorial_power(const VariableContext::Ptr& ctx, const Var& x, int k);

// Y_v(x, y) = det( (x_i|y)^{v_j + j - 1} )_{i,j=1..n} / Delta(x) with
// Delta(x) in increasing orientation. v must be weakly increasing of length
// n = ctx->x_count(); the context needs y_1 .. y_{v_n + n - 1}.
// Specializing y to 0 recovers schur(v, x).
LaurentPoly factorial_schur(const VariableContext::Ptr& ctx, const Composition& v);

// The flagged point y^<u> = {y_{1+u_1}, ..., y_{n+u_n}} for weakly
// increasing u; the shifted indices 1+u_1 < 2+u_2 < ... never collide.
Alphabet flagged_point(const VariableContext::Ptr& ctx, const Composition& u);

// Y_v evaluated at x = y^<u>; sizes its own context from v and u (both
// weakly increasing, same length).
LaurentPoly factorial_schur_at_flag(const Composition& v, const Composition& u);

// True iff Y_v(y^<u>, y) == 0. The vanishing lemma says this happens
// exactly when the diagram of u fails to contain the diagram of v; callers
// test that equivalence rather than assuming it.
bool vanishing_check(const Composition& v, const Composition& u);

// All weakly increasing vectors of the given length with weight <= maxweight,
// in lexicographic order. These enumerate both the flagged points and (by
// reversal) the partition indices of the interpolation basis.
std::vector<Composition> increasing_compositions(int length, int maxweight);

}  // namespace gaudinlab

#endif
