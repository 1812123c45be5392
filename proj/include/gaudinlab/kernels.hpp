#ifndef GAUDINLAB_KERNELS_HPP
#define GAUDINLAB_KERNELS_HPP

#include <map>
#include <string>
#include <vector>

#include "gaudinlab/operators.hpp"

namespace gaudinlab {

// Per-pair expansion rule for the double-alphabet product kernels: the
// coefficient of (x_i y_j)^k is, respectively, the finite q-binomial product
// prod_{m=1}^{k}(1-tq^{m-1})/(1-q^m); the same shifted by q^k; 1; t^k; and
// the two-valued 1, (1-t), (1-t), ... of (1-tz)/(1-z). No infinite product
// is ever materialized.
enum class KernelKind { Macdonald, MacdonaldQShift, Plain, TScaled, HlFinite };

// Formal power series in the x and y alphabets truncated at a total
// y-degree, with coefficients rational in the parameters t, q. Keys are
// full-context exponent vectors whose t and q slots stay zero; the t, q
// content lives in the coefficients.
class KernelSeries {
 public:
  using TermMap = std::map<ExpVec, RationalFn>;

  KernelSeries(VariableContext::Ptr ctx, int trunc);

  static KernelSeries one(const VariableContext::Ptr& ctx, int trunc);
  // Splits each term: x/y exponents key the series, t/q exponents move into
  // the coefficient. Terms beyond the truncation are dropped.
  static KernelSeries from_poly(const LaurentPoly& p, int trunc);
  static KernelSeries sigma_kernel(const VariableContext::Ptr& ctx, KernelKind kind, int n,
                                   int trunc);

  const VariableContext::Ptr& context() const { return ctx_; }
  int truncation() const { return trunc_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  KernelSeries operator+(const KernelSeries& o) const;
  KernelSeries operator-(const KernelSeries& o) const;
  KernelSeries operator*(const KernelSeries& o) const;
  KernelSeries scaled(const RationalFn& c) const;

  // Coefficient at the given x/y exponent vector (t, q slots zero).
  RationalFn coefficient(const ExpVec& key) const;

  // Index shift x_i -> x_{i+1} with the wrap of x_n given by the kind:
  // TauQ scales the coefficient by q^deg, TauZero kills wrapped terms, and
  // Theta folds t^{-deg} into the coefficient (which is Laurent in t).
  KernelSeries shifted(ShiftKind kind, int n) const;
  KernelSeries shift_product(ShiftKind kind, const std::vector<int>& powers, int n) const;

  // Summed t-weight over the symmetric group, acting on the x part;
  // y-monomials ride along. Exact at every step.
  KernelSeries cup_omega(int n) const;

  // Coefficient-wise equality; on mismatch fills `witness` with the first
  // differing monomial in key order and both coefficients.
  bool matches(const KernelSeries& o, std::string* witness) const;

 private:
  void add_term(const ExpVec& key, const RationalFn& c);
  int y_degree(const ExpVec& key) const;

  VariableContext::Ptr ctx_;
  int trunc_;
  TermMap terms_;
};

// The q-binomial coefficient prod_{m=1}^{k}(1-tq^{m-1})/(1-q^m) of the
// Macdonald kernel, as an exact rational function.
RationalFn macdonald_pair_coefficient(const VariableContext::Ptr& ctx, int k);

}  // namespace gaudinlab

#endif
