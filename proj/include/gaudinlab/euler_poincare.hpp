#ifndef GAUDINLAB_EULER_POINCARE_HPP
#define GAUDINLAB_EULER_POINCARE_HPP

#include <string>

#include "gaudinlab/kernels.hpp"
#include "gaudinlab/polynomial.hpp"

namespace gaudinlab {

// Outcome of one identity check. `pass` reports exact equality. When the
// statement leaves an overall constant open, `normalization` records which
// candidate made the sides agree; `witness` holds the first mismatching
// term on failure.
struct VerificationReport {
  std::string identity;
  std::string parameters;
  bool pass = false;
  std::string normalization;
  std::string witness;
};

// (x_1...x_n)^{n-1} * F_n(x_1^{-1}, ..., x_n^{-1}; y) at level 1. The
// inverse substitution clears to an honest polynomial; anything else is a
// defect and throws NegativeExponentResidue.
LaurentPoly reciprocal_pair_poly(const VariableContext::Ptr& ctx, int n);

// x_1^{f_exponent} * R(x_2+...+x_n, y) * (1 - t S)(1 - t^2 S)...(1 - t^{n-1} S)
// through the summed t-weight, where S is the index shift wrapping x_n to
// x_1/t, against (x_1^{f_exponent} x_2...x_n sent through the divided
// difference chain in slots 1..n-1) times the level-1 pair function. The
// open constant is adjudicated by exact division (it must come out free of
// both alphabets) and reported; with this wrap it lands on the t-inverse
// staircase (1-1/t)...(1-1/t^{n-1}). n in {2, 3}, f_exponent in {0, 1, 2}.
VerificationReport verify_theta_identity(int n, int f_exponent);

// prod_{i,j} (1 - t x_i y_j)/(1 - x_i y_j) through (1 - t S_0)...(1 - t^n S_0)
// and the summed t-weight, where S_0 wraps x_n to 0, against
// prod_{i,j} 1/(1 - x_i y_j) times the reciprocal pair polynomial times the
// adjudicated constant. Exact rational functions end to end. n in {1, 2};
// n = 3 only behind the override.
VerificationReport verify_hl_generating(int n, bool allow_large = false);

// Truncated-series analogue with the Macdonald kernel: sigma(Macdonald)
// through (1 - t S_q)...(1 - t^n S_q) and the summed t-weight, where S_q
// wraps x_n to q x_1, equals the finite-kernel side times the q-shifted
// Macdonald kernel, coefficient by coefficient up to total y-degree
// `trunc`. n <= 2 and trunc <= 3 without the override.
VerificationReport verify_macdonald_reduction(int n, int trunc, bool allow_large = false);

// Bounded-degree expansion
//   sum_{|lambda| <= trunc, len <= n} b_lambda P_lambda(x) P_lambda(y)
//     prod_{i=1}^{n} (1 - q^{lambda_i} t^{n-i+1})
// against sigma(Macdonald) * sigma(TScaled) * reciprocal pair polynomial,
// with the overall constant adjudicated in {1, (1-t)^n, (1-t)...(1-t^n)}
// and reported. n <= 2, trunc <= 3 without the override.
VerificationReport verify_warnaar_expansion(int n, int trunc, bool allow_large = false);

// sum_{|lambda| <= trunc, len <= n} b_lambda P_lambda(x) P_lambda(y) against
// sigma(Macdonald), coefficient by coefficient. n <= 2, trunc <= 3 without
// the override.
VerificationReport verify_truncated_cauchy(int n, int trunc, bool allow_large = false);

}  // namespace gaudinlab

#endif
