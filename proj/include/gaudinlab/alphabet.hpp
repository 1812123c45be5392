#ifndef GAUDINLAB_ALPHABET_HPP
#define GAUDINLAB_ALPHABET_HPP

#include <vector>

#include "gaudinlab/partition.hpp"
#include "gaudinlab/polynomial.hpp"

namespace gaudinlab {

// Finite alphabet: an ordered list of letters, each letter a monomial
// (variable times monomial scale, e.g. y_2*t^3). Alphabets enter formulas
// only through their letters, so a plain vector is enough structure.
class Alphabet {
 public:
  explicit Alphabet(VariableContext::Ptr ctx) : ctx_(std::move(ctx)) {}

  static Alphabet x_vars(const VariableContext::Ptr& ctx, int n);
  static Alphabet y_vars(const VariableContext::Ptr& ctx, int n);
  // {base * t^k : 0 <= k <= r}, the geometric twist base*(1 + t + ... + t^r).
  static Alphabet t_geometric(const VariableContext::Ptr& ctx, const Var& base, int r);

  const VariableContext::Ptr& context() const { return ctx_; }
  const std::vector<LaurentPoly>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }

  void add_letter(const LaurentPoly& monomial);
  Alphabet joined(const Alphabet& other) const;

 private:
  VariableContext::Ptr ctx_;
  std::vector<LaurentPoly> letters_;
};

// Formal difference of alphabets, the argument of complete/Schur functions.
struct AlphabetDiff {
  Alphabet plus;
  Alphabet minus;

  static AlphabetDiff of(const Alphabet& p) { return {p, Alphabet(p.context())}; }
  static AlphabetDiff of(const Alphabet& p, const Alphabet& m) { return {p, m}; }
};

// Coefficients S_0..S_maxdeg of prod_{b in minus}(1-zb) / prod_{a in plus}(1-za).
// Computed once per (difference, degree) and reused by every determinant
// entry that shares the column alphabet.
class CompleteSeries {
 public:
  CompleteSeries(const AlphabetDiff& d, int maxdeg);
  // S_j; zero polynomial for j < 0 or j > maxdeg of this table.
  const LaurentPoly& at(int j) const;

 private:
  VariableContext::Ptr ctx_;
  std::vector<LaurentPoly> s_;
  LaurentPoly zero_;
};

LaurentPoly complete_function(int j, const AlphabetDiff& d);
LaurentPoly elementary_function(int j, const Alphabet& a);

// Schur function of a composition index via the determinant
// det(S_{v_j + j - i}(d)), rows i = 1..len(v), columns j = 1..len(v).
// Partition indices are written in weakly INCREASING order in this
// convention: schur({1,2}, x1+x2) is the classical s_(2,1), and prepending a
// zero part leaves the value unchanged.
LaurentPoly schur(const Composition& v, const AlphabetDiff& d);

// Classical decreasing-partition entry point: pads lambda to width parts and
// reverses it into the increasing convention.
LaurentPoly schur_from_partition(const Partition& lambda, int width, const AlphabetDiff& d);

// Multi-Schur determinant: column j draws its complete functions from
// diffs[j]. Requires diffs.size() == v.size(); same index convention as schur.
LaurentPoly multi_schur(const Composition& v, const std::vector<AlphabetDiff>& diffs);

// R(A,B) = prod_{a in A, b in B} (a - b), expanded.
LaurentPoly resultant(const Alphabet& a, const Alphabet& b);

// Delta(A) = prod_{i<j} (a_j - a_i), the increasing-order Vandermonde.
LaurentPoly vandermonde(const Alphabet& a);

// Determinant of a square polynomial matrix; cofactor expansion for small
// sizes, fraction-free elimination with exact division above that.
LaurentPoly det_poly(const std::vector<std::vector<LaurentPoly>>& m);

// Expansion of a polynomial symmetric in the given variable slots into Schur
// functions of that alphabet: returns (partition, coefficient) pairs with
// coefficients free of the alphabet variables... the coefficient keeps
// whatever other variables (parameters, the other alphabet) the input had.
// Throws if the input is not symmetric in the slots.
std::vector<std::pair<Partition, LaurentPoly>> schur_expand(const LaurentPoly& p,
                                                            const std::vector<Var>& alphabet);

// Monomial symmetric polynomial m_lambda in the given variables.
LaurentPoly monomial_symmetric(const Partition& lambda, const std::vector<Var>& vars,
                               const VariableContext::Ptr& ctx);

}  // namespace gaudinlab

#endif
