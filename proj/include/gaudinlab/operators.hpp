#ifndef GAUDINLAB_OPERATORS_HPP
#define GAUDINLAB_OPERATORS_HPP

#include <vector>

#include "gaudinlab/rational_fn.hpp"

namespace gaudinlab {

// Affine shifts x_i -> x_{i+1} with the wrap of x_n determined by the kind:
// Theta wraps to x_1/t, TauQ to q*x_1, TauZero to 0.
enum class ShiftKind { Theta, TauQ, TauZero };

// All permutations of {0..n-1} with their signs, in a fixed deterministic
// order (lexicographic).
struct PermutationWeight {
  std::vector<int> perm;
  int sign;
};
std::vector<PermutationWeight> symmetric_group(int n);

// Right-acting divided difference: f |-> (f - f^{s_i}) / (x_i - x_{i+1}).
// Polynomial input gives polynomial output.
RationalFn divided_difference(const RationalFn& f, int i);
LaurentPoly divided_difference(const LaurentPoly& f, int i);

// Hecke generator in cup form: f |-> (f * (t x_i - x_{i+1})) followed by the
// divided difference in slot i. Satisfies cup^2 = (1+t) cup.
RationalFn hecke_cup(const RationalFn& f, int i);
LaurentPoly hecke_cup(const LaurentPoly& f, int i);

// Summed t-weight over the full symmetric group:
// f |-> sum_w (f * prod_{i<j} (t x_i - x_j)/(x_i - x_j))^w, computed as an
// antisymmetrisation [sum_w sign(w) (f * prod(t x_i - x_j))^w] divided by
// prod_{i<j}(x_i - x_j). Exact at every step.
RationalFn cup_omega(const RationalFn& f, int n);
LaurentPoly cup_omega(const LaurentPoly& f, int n);

RationalFn affine_shift(const RationalFn& f, ShiftKind kind, int n);
LaurentPoly affine_shift(const LaurentPoly& f, ShiftKind kind, int n);

// Left-to-right product: f |-> f (1 - t^{p_1} S)(1 - t^{p_2} S)... for the
// given shift S and exponent list.
RationalFn shift_product(const RationalFn& f, ShiftKind kind, const std::vector<int>& powers, int n);
LaurentPoly shift_product(const LaurentPoly& f, ShiftKind kind, const std::vector<int>& powers, int n);

// prod_{1 <= i < j <= n} (t x_i - x_j), the t-deformed staircase weight.
LaurentPoly t_weight_numerator(const VariableContext::Ptr& ctx, int n);
// prod_{1 <= i < j <= n} (x_i - x_j). Note the order: this is the
// denominator the summed weight divides by, which is (-1)^C(n,2) times the
// increasing-order vandermonde().
LaurentPoly difference_product(const VariableContext::Ptr& ctx, int n);

}  // namespace gaudinlab

#endif
