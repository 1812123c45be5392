#ifndef GAUDINLAB_SYMFN_HPP
#define GAUDINLAB_SYMFN_HPP

#include <map>
#include <utility>
#include <vector>

#include "gaudinlab/alphabet.hpp"
#include "gaudinlab/rational_fn.hpp"

namespace gaudinlab {

// A homogeneous symmetric function written in the monomial basis, with
// coefficients rational in the parameters t, q of the supplied context.
// The context only has to carry t and q; any x/y variables it also holds
// are simply never touched by the coefficients.
struct SymFnExpr {
  VariableContext::Ptr ctx;
  int weight = 0;
  std::map<Partition, RationalFn> coeffs;  // keys trimmed, weight matching

  static SymFnExpr monomial(const VariableContext::Ptr& ctx, const Partition& lambda);
  static SymFnExpr powersum(const VariableContext::Ptr& ctx, const Partition& mu);
  SymFnExpr scaled(const RationalFn& c) const;
  SymFnExpr operator+(const SymFnExpr& o) const;
  SymFnExpr operator-(const SymFnExpr& o) const;
  RationalFn coefficient(const Partition& lambda) const;  // zero when absent
};

// <f, g> under <p_lambda, p_mu> = delta z_lambda prod_i (1-q^{l_i})/(1-t^{l_i}).
RationalFn macdonald_scalar(const SymFnExpr& f, const SymFnExpr& g);

// P_lambda(q, t): Gram-Schmidt of the monomial basis along a fixed linear
// extension of dominance order, smaller partitions first. Unitriangular:
// the m_lambda coefficient is 1.
SymFnExpr macdonald_p(const VariableContext::Ptr& ctx, const Partition& lambda);

// b_lambda = 1 / <P_lambda, P_lambda>.
RationalFn b_constant(const VariableContext::Ptr& ctx, const Partition& lambda);

// Evaluate in the finite alphabet given by `vars`: every m_lambda with more
// parts than variables restricts to zero. Coefficients must be polynomial.
LaurentPoly restrict_to_alphabet(const SymFnExpr& f, const std::vector<Var>& vars);

// prod_{i=0}^{n} prod_{j=1}^{m_i} (1-t^j)/(1-t), the multiplicity-factorial
// normalization, with m_0 counting the zero parts of lambda padded to n.
LaurentPoly c_lambda(const VariableContext::Ptr& ctx, const Partition& lambda, int n);

// Classical Hall-Littlewood polynomial in n variables by the summation
// formula sum_w w( x^lambda prod_{i<j} (x_i - t x_j)/(x_i - x_j) ) divided
// by the multiplicity factorial v_lambda(t).
LaurentPoly hl_classical(const VariableContext::Ptr& ctx, const Partition& lambda, int n);

// Image of the exponent-increasing monomial x^{reverse(lambda)} under the
// summed t-weight, resolved against hl_classical: returns (P_lambda, k)
// with image == k * P_lambda, throwing NotProportional otherwise. The
// increasing arrangement is the one the summation normalizes: the
// decreasing arrangement is not proportional beyond single-row shapes.
std::pair<LaurentPoly, RationalFn> hl_from_cup(const VariableContext::Ptr& ctx,
                                               const Partition& lambda, int n);

}  // namespace gaudinlab

#endif
