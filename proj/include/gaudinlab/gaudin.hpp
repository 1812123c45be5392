#ifndef GAUDINLAB_GAUDIN_HPP
#define GAUDINLAB_GAUDIN_HPP

#include <string>
#include <vector>

#include "gaudinlab/alphabet.hpp"
#include "gaudinlab/partition.hpp"
#include "gaudinlab/rational_fn.hpp"

namespace gaudinlab {

// Desk-scale envelope for the pair determinants. Larger sizes are possible in
// principle but blow up the exact arithmetic; callers must opt in.
struct GaudinParams {
  int n = 2;
  int r = 1;
  bool allow_large = false;
};

void check_gaudin_bounds(const GaudinParams& p);

VariableContext::Ptr gaudin_context(const GaudinParams& p);

// Cleared numerator entry M_ij = prod_{j' != j} prod_{k=0}^{r} (x_i - t^k y_j').
LaurentPoly gaudin_cleared_entry(const VariableContext::Ptr& ctx, int i, int j,
                                 const GaudinParams& p);

// The pair function of level r:
//   det(M) / ( prod_{i<j}(x_i - x_j) * prod_{i<j}(y_j - y_i) ),
// normalised so that level 0 gives the constant 1. Always a polynomial.
LaurentPoly gaudin_raw(const VariableContext::Ptr& ctx, const GaudinParams& p);

// Same function computed from the Schur-determinant side:
//   (1 / prod_{i<j}(y_j - y_i)) * det( S_{(j,(n-1)^r)}( y_i(1+t+...+t^r) - x ) ).
LaurentPoly gaudin_multischur(const VariableContext::Ptr& ctx, const GaudinParams& p);

// Reference product sharing all specializations x in {t^k y_i}:
//   (vdm(x)/vdm(y)) * prod_i S_{(n-1)^r}( y_i(1+...+t^r) - x ).
RationalFn gaudin_reference_product(const VariableContext::Ptr& ctx, const GaudinParams& p);

// The (r+1)n letters t^k y_i, ordered y_1..y_n, t y_1..t y_n, ..., t^r y_n.
std::vector<LaurentPoly> specialization_letters(const VariableContext::Ptr& ctx,
                                                const GaudinParams& p);

// gaudin_raw with x_i replaced by the given images.
LaurentPoly gaudin_at(const VariableContext::Ptr& ctx, const GaudinParams& p,
                      const std::vector<LaurentPoly>& x_images);

struct SpecializationOutcome {
  int injective_points = 0;
  int repeated_points = 0;
  bool injective_match = true;
  bool repeated_vanish = true;
  std::string witness;  // first failing subset, empty when everything checks
};

// Substitutes every n-subset of the (r+1)n letters into both the pair
// function and the reference product and compares them exactly. Subsets that
// repeat a y_i (with different t powers) must send both sides to zero.
SpecializationOutcome verify_specializations(const VariableContext::Ptr& ctx,
                                             const GaudinParams& p);

struct SchurExpansionOutcome {
  bool single_term = false;
  Partition index;        // decreasing parts, trimmed
  Rational coefficient;   // of the single Schur term
};

// Odd level r: expands
//   det( (x_i - y_j) prod_{j' != j} (x_i^{r+2} - y_{j'}^{r+2}) )
//     / ( prod_{i<j}(x_i - x_j) * prod_{i<j}(y_j - y_i) * R(x, y) )
// over Schur functions of the union alphabet {x_1..x_n, y_1..y_n}.
SchurExpansionOutcome odd_symmetry_schur(const VariableContext::Ptr& ctx,
                                         const GaudinParams& p);

}  // namespace gaudinlab

#endif
