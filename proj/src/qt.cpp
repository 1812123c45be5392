#include "gaudinlab/qt.hpp"

#include <map>
#include <mutex>

#include "gaudinlab/errors.hpp"
#include "gaudinlab/polynomial.hpp"

namespace gaudinlab {

namespace {

constexpr int kWeightBound = 6;

// Plain Gaussian inversion over the rationals; matrices here are transition
// tables between bases, invertible by construction.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(m[pivot][col])) ++pivot;
    if (pivot == n) throw NonInvertibleImage("basis transition not invertible");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || is_zero(m[i][col])) continue;
      const Rational f = m[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

BasisTransition build_transition(int weight) {
  BasisTransition tr;
  tr.weight = weight;
  tr.parts = partitions_of_weight(weight);
  if (weight == 0) {
    tr.parts = {Partition{}};
    tr.p_in_m = {{Rational(1)}};
    tr.m_in_p = {{Rational(1)}};
    return tr;
  }

  // Expand each power-sum product in `weight` scratch variables: enough
  // variables that every monomial orbit of this degree is visible, so the
  // coefficient of m_lambda is just the coefficient of the sorted monomial.
  auto ctx = VariableContext::make(weight, 0);
  std::vector<LaurentPoly> pk(weight + 1, LaurentPoly::zero(ctx));
  for (int k = 1; k <= weight; ++k)
    for (int i = 1; i <= weight; ++i)
      pk[k] += LaurentPoly::variable(ctx, Var::x(i), k);

  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < tr.parts.size(); ++i) index[tr.parts[i]] = i;

  const std::size_t count = tr.parts.size();
  tr.p_in_m.assign(count, std::vector<Rational>(count, Rational(0)));
  for (std::size_t mu = 0; mu < count; ++mu) {
    LaurentPoly prod = LaurentPoly::constant(ctx, Rational(1));
    for (int part : tr.parts[mu]) prod = prod * pk[part];
    for (const auto& [exps, coeff] : prod.terms()) {
      Composition as_comp(exps.begin(), exps.begin() + weight);
      const Partition lambda = trimmed(sorted_decreasing(as_comp));
      // Record each orbit once, from its sorted representative.
      if (Composition(lambda) == Composition(trimmed(as_comp)))
        tr.p_in_m[mu][index.at(lambda)] = coeff;
    }
  }
  tr.m_in_p = invert(tr.p_in_m);
  return tr;
}

}  // namespace

const BasisTransition& basis_transition(int weight) {
  if (weight < 0 || weight > kWeightBound)
    throw BoundExceeded("basis transition weight outside supported range");
  static std::mutex guard;
  static std::vector<BasisTransition> cache(kWeightBound + 1);
  std::lock_guard<std::mutex> lock(guard);
  if (cache[weight].parts.empty()) cache[weight] = build_transition(weight);
  return cache[weight];
}

int basis_transition_bound() { return kWeightBound; }

}  // namespace gaudinlab
