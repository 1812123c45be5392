#ifndef GAUDINLAB_RATIONAL_FN_HPP
#define GAUDINLAB_RATIONAL_FN_HPP

#include <map>
#include <string>
#include <vector>

#include "gaudinlab/polynomial.hpp"

namespace gaudinlab {

// Rational function kept in factored form: unit * prod factor^multiplicity,
// factors monic (leading coefficient 1 under the global term order) and
// multiplicities nonzero integers. Zero is unit 0 with no factors. There is
// no multivariate gcd anywhere: every denominator in this problem domain
// arises as an explicit product, so cancellation is factor matching plus
// trial exact division of expanded numerators.
class RationalFn {
 public:
  struct PolyCmp {
    bool operator()(const LaurentPoly& a, const LaurentPoly& b) const {
      return LaurentPoly::compare(a, b) < 0;
    }
  };
  using FactorMap = std::map<LaurentPoly, int, PolyCmp>;

  explicit RationalFn(VariableContext::Ptr ctx) : ctx_(std::move(ctx)), unit_(0) {}

  static RationalFn zero(const VariableContext::Ptr& ctx) { return RationalFn(ctx); }
  static RationalFn one(const VariableContext::Ptr& ctx) {
    return from_scalar(ctx, Rational(1));
  }
  static RationalFn from_scalar(const VariableContext::Ptr& ctx, const Rational& c);
  static RationalFn from_poly(const LaurentPoly& p);
  static RationalFn quotient(const LaurentPoly& num, const LaurentPoly& den);

  const VariableContext::Ptr& context() const { return ctx_; }
  bool is_zero() const { return gaudinlab::is_zero(unit_); }
  const Rational& unit() const { return unit_; }
  const FactorMap& factors() const { return factors_; }

  bool is_polynomial() const;
  LaurentPoly as_poly() const;  // requires is_polynomial
  LaurentPoly numerator_poly() const;    // unit * positive part, expanded
  LaurentPoly denominator_poly() const;  // negative part, expanded (monic)

  // Multiply in p^mult; p == 0 with mult > 0 zeroes the value, with
  // mult < 0 throws DivisionByZero.
  void mul_poly(const LaurentPoly& p, int mult = 1);
  void mul_scalar(const Rational& c);

  RationalFn operator*(const RationalFn& o) const;
  RationalFn operator/(const RationalFn& o) const;
  RationalFn operator+(const RationalFn& o) const;
  RationalFn operator-(const RationalFn& o) const;
  RationalFn operator-() const;
  RationalFn inverse() const;
  RationalFn pow(int e) const;

  // Expands the numerator and cancels denominator factors by trial exact
  // division. Leaves the denominator factored.
  void reduce();

  RationalFn substituted(const std::vector<std::pair<Var, LaurentPoly>>& images) const;
  RationalFn swapped(const Var& a, const Var& b) const;
  RationalFn permuted_x(const std::vector<int>& perm) const;

  std::string to_string() const;

 private:
  VariableContext::Ptr ctx_;
  Rational unit_;
  FactorMap factors_;
};

// Exact equality via factor cancellation and cross multiplication.
bool rat_equal(const RationalFn& a, const RationalFn& b);

}  // namespace gaudinlab

#endif
