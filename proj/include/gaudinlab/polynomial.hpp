#ifndef GAUDINLAB_POLYNOMIAL_HPP
#define GAUDINLAB_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gaudinlab/context.hpp"
#include "gaudinlab/rational.hpp"

namespace gaudinlab {

// Dense exponent vector, one slot per context variable. Exponents may be
// negative (Laurent): dual alphabets and the affine shift with its 1/t
// wrap-around both need that headroom. Operations whose results must be
// honest polynomials check nonnegativity at their own boundary.
using ExpVec = std::vector<int32_t>;

// Immutable-by-convention sparse multivariate Laurent polynomial with exact
// rational coefficients over a shared VariableContext. Terms are kept in a
// map ordered lexicographically on exponent vectors, which makes structural
// equality canonical and gives a deterministic leading term.
class LaurentPoly {
 public:
  using TermMap = std::map<ExpVec, Rational>;

  explicit LaurentPoly(VariableContext::Ptr ctx) : ctx_(std::move(ctx)) {}

  static LaurentPoly zero(const VariableContext::Ptr& ctx) { return LaurentPoly(ctx); }
  static LaurentPoly constant(const VariableContext::Ptr& ctx, const Rational& c);
  static LaurentPoly variable(const VariableContext::Ptr& ctx, const Var& v, int exponent = 1);
  static LaurentPoly monomial(const VariableContext::Ptr& ctx, const Rational& c, const ExpVec& e);

  const VariableContext::Ptr& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term as scalar; requires is_constant().
  Rational constant_value() const;
  std::size_t term_count() const { return terms_.size(); }

  // Single-term test; returns (exponents, coeff) if the value is a monomial.
  std::optional<std::pair<ExpVec, Rational>> as_monomial() const;

  // Lexicographically largest term. Requires nonzero.
  const std::pair<const ExpVec, Rational>& leading_term() const;

  bool has_negative_exponent() const;
  // True when no x or y slot carries a negative exponent.
  bool polynomial_in_alphabets() const;

  int min_exponent(int slot) const;
  int max_exponent(int slot) const;
  int total_degree() const;  // max over terms of exponent sum; 0 for zero poly

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);

  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly term_multiplied(const Rational& c, const ExpVec& e) const;
  LaurentPoly pow(int e) const;  // e >= 0, or monomial base for e < 0

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.ctx_.get() == b.ctx_.get() && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // Total order usable as map key (context-pointer, then term list).
  static int compare(const LaurentPoly& a, const LaurentPoly& b);

  // Applies a permutation of the x slots: perm has length k <= x_count and
  // sends x_{i+1} to x_{perm[i]+1}. y, t, q untouched.
  LaurentPoly permuted_x(const std::vector<int>& perm) const;
  LaurentPoly swapped(const Var& a, const Var& b) const;

  void add_term(const ExpVec& e, const Rational& c);  // builder helper

  std::string to_string() const;

 private:
  VariableContext::Ptr ctx_;
  TermMap terms_;
};

// Exact division: returns q with q*d == p, throws NotDivisible when no such
// Laurent polynomial exists and DivisionByZero for d == 0.
LaurentPoly poly_exact_divide(const LaurentPoly& p, const LaurentPoly& d);

// Simultaneous substitution var -> image. Variables absent from the map stay
// themselves. Negative exponents require the image to be an invertible
// monomial (NonInvertibleImage otherwise; zero image on a negative power is
// DivisionByZero).
LaurentPoly substitute(const LaurentPoly& p, const std::vector<std::pair<Var, LaurentPoly>>& images);

// Gaussian binomial [m choose k]_t in the context's t variable.
LaurentPoly gaussian_binomial(const VariableContext::Ptr& ctx, int m, int k);

// (1-t)(1-t^2)...(1-t^n).
LaurentPoly t_pochhammer(const VariableContext::Ptr& ctx, int n);

// [n]! = prod_{i=1}^n (1 + t + ... + t^{i-1}); equals t_pochhammer / (1-t)^n.
LaurentPoly t_factorial(const VariableContext::Ptr& ctx, int n);

}  // namespace gaudinlab

#endif
