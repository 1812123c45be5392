#include "gaudinlab/operators.hpp"

#include <algorithm>
#include <numeric>

namespace gaudinlab {

std::vector<PermutationWeight> symmetric_group(int n) {
  if (n < 1) throw BoundExceeded("symmetric group on fewer than one letter");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<PermutationWeight> out;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inv;
    out.push_back({p, inv % 2 == 0 ? 1 : -1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

LaurentPoly divided_difference(const LaurentPoly& f, int i) {
  const auto& ctx = f.context();
  if (i < 1 || i + 1 > ctx->x_count()) throw IndexOutOfRange("divided difference slot");
  LaurentPoly num = f - f.swapped(Var::x(i), Var::x(i + 1));
  LaurentPoly den =
      LaurentPoly::variable(ctx, Var::x(i)) - LaurentPoly::variable(ctx, Var::x(i + 1));
  return poly_exact_divide(num, den);
}

RationalFn divided_difference(const RationalFn& f, int i) {
  const auto& ctx = f.context();
  if (i < 1 || i + 1 > ctx->x_count()) throw IndexOutOfRange("divided difference slot");
  RationalFn diff = f - f.swapped(Var::x(i), Var::x(i + 1));
  LaurentPoly den =
      LaurentPoly::variable(ctx, Var::x(i)) - LaurentPoly::variable(ctx, Var::x(i + 1));
  RationalFn r = diff;
  r.mul_poly(den, -1);
  r.reduce();
  return r;
}

LaurentPoly hecke_cup(const LaurentPoly& f, int i) {
  const auto& ctx = f.context();
  LaurentPoly weight = LaurentPoly::variable(ctx, Var::t()) * LaurentPoly::variable(ctx, Var::x(i)) -
                       LaurentPoly::variable(ctx, Var::x(i + 1));
  return divided_difference(f * weight, i);
}

RationalFn hecke_cup(const RationalFn& f, int i) {
  const auto& ctx = f.context();
  LaurentPoly weight = LaurentPoly::variable(ctx, Var::t()) * LaurentPoly::variable(ctx, Var::x(i)) -
                       LaurentPoly::variable(ctx, Var::x(i + 1));
  RationalFn g = f;
  g.mul_poly(weight);
  return divided_difference(g, i);
}

LaurentPoly t_weight_numerator(const VariableContext::Ptr& ctx, int n) {
  LaurentPoly r = LaurentPoly::constant(ctx, Rational(1));
  const LaurentPoly t = LaurentPoly::variable(ctx, Var::t());
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      r = r * (t * LaurentPoly::variable(ctx, Var::x(i)) - LaurentPoly::variable(ctx, Var::x(j)));
  return r;
}

LaurentPoly difference_product(const VariableContext::Ptr& ctx, int n) {
  LaurentPoly r = LaurentPoly::constant(ctx, Rational(1));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      r = r * (LaurentPoly::variable(ctx, Var::x(i)) - LaurentPoly::variable(ctx, Var::x(j)));
  return r;
}

LaurentPoly cup_omega(const LaurentPoly& f, int n) {
  const auto& ctx = f.context();
  if (n < 1 || n > ctx->x_count()) throw IndexOutOfRange("summed weight over bad alphabet size");
  const LaurentPoly tw = t_weight_numerator(ctx, n);
  const LaurentPoly base = f * tw;
  LaurentPoly sum(ctx);
  for (const auto& w : symmetric_group(n)) {
    LaurentPoly term = base.permuted_x(w.perm);
    sum += w.sign > 0 ? term : -term;
  }
  if (sum.is_zero()) return sum;
  return poly_exact_divide(sum, difference_product(ctx, n));
}

RationalFn cup_omega(const RationalFn& f, int n) {
  const auto& ctx = f.context();
  if (f.is_polynomial()) return RationalFn::from_poly(cup_omega(f.as_poly(), n));
  if (n < 1 || n > ctx->x_count()) throw IndexOutOfRange("summed weight over bad alphabet size");

  const auto group = symmetric_group(n);
  std::vector<RationalFn> images;
  images.reserve(group.size());
  for (const auto& w : group) images.push_back(f.permuted_x(w.perm));

  // Factor-wise max denominator over the orbit, so each conjugate lifts to
  // it by an exact polynomial cofactor.
  RationalFn::FactorMap dstar;
  for (const auto& fw : images)
    for (const auto& [phi, m] : fw.factors()) {
      if (m >= 0) continue;
      auto it = dstar.find(phi);
      if (it == dstar.end())
        dstar.emplace(phi, -m);
      else
        it->second = std::max(it->second, -m);
    }

  const LaurentPoly tw = t_weight_numerator(ctx, n);
  LaurentPoly sum(ctx);
  for (std::size_t k = 0; k < group.size(); ++k) {
    const RationalFn& fw = images[k];
    LaurentPoly term = fw.numerator_poly() * tw.permuted_x(group[k].perm);
    for (const auto& [phi, need] : dstar) {
      auto it = fw.factors().find(phi);
      int have = (it != fw.factors().end() && it->second < 0) ? -it->second : 0;
      if (need > have) term = term * phi.pow(need - have);
    }
    sum += group[k].sign > 0 ? term : -term;
  }

  RationalFn r(ctx);
  if (sum.is_zero()) return r;
  r = RationalFn::from_poly(sum);
  r.mul_poly(difference_product(ctx, n), -1);
  for (const auto& [phi, m] : dstar) r.mul_poly(phi, -m);
  r.reduce();
  return r;
}

static std::vector<std::pair<Var, LaurentPoly>> shift_images(const VariableContext::Ptr& ctx,
                                                             ShiftKind kind, int n) {
  if (n < 1 || n > ctx->x_count()) throw IndexOutOfRange("shift over bad alphabet size");
  std::vector<std::pair<Var, LaurentPoly>> images;
  for (int i = 1; i < n; ++i)
    images.emplace_back(Var::x(i), LaurentPoly::variable(ctx, Var::x(i + 1)));
  switch (kind) {
    case ShiftKind::Theta:
      images.emplace_back(Var::x(n), LaurentPoly::variable(ctx, Var::x(1)) *
                                         LaurentPoly::variable(ctx, Var::t(), -1));
      break;
    case ShiftKind::TauQ:
      images.emplace_back(Var::x(n), LaurentPoly::variable(ctx, Var::x(1)) *
                                         LaurentPoly::variable(ctx, Var::q()));
      break;
    case ShiftKind::TauZero:
      images.emplace_back(Var::x(n), LaurentPoly::zero(ctx));
      break;
  }
  return images;
}

LaurentPoly affine_shift(const LaurentPoly& f, ShiftKind kind, int n) {
  return substitute(f, shift_images(f.context(), kind, n));
}

RationalFn affine_shift(const RationalFn& f, ShiftKind kind, int n) {
  return f.substituted(shift_images(f.context(), kind, n));
}

LaurentPoly shift_product(const LaurentPoly& f, ShiftKind kind, const std::vector<int>& powers,
                          int n) {
  const auto& ctx = f.context();
  LaurentPoly g = f;
  for (int p : powers) {
    LaurentPoly shifted = affine_shift(g, kind, n);
    g = g - shifted * LaurentPoly::variable(ctx, Var::t(), p);
  }
  return g;
}

RationalFn shift_product(const RationalFn& f, ShiftKind kind, const std::vector<int>& powers,
                         int n) {
  const auto& ctx = f.context();
  RationalFn g = f;
  for (int p : powers) {
    RationalFn shifted = affine_shift(g, kind, n);
    shifted.mul_poly(LaurentPoly::variable(ctx, Var::t(), p));
    g = g - shifted;
  }
  return g;
}

}  // namespace gaudinlab
