#include "gaudinlab/gaudin.hpp"

#include <algorithm>

#include "gaudinlab/errors.hpp"
#include "gaudinlab/operators.hpp"

namespace gaudinlab {

void check_gaudin_bounds(const GaudinParams& p) {
  if (p.n < 1 || p.r < 0) throw BoundExceeded("need n >= 1 and r >= 0");
  if (p.allow_large) return;
  if (p.n > 3 || p.r > 3)
    throw BoundExceeded("pair determinant bound n <= 3, r <= 3 (override to lift)");
}

VariableContext::Ptr gaudin_context(const GaudinParams& p) {
  check_gaudin_bounds(p);
  return VariableContext::make(p.n, p.n);
}

LaurentPoly gaudin_cleared_entry(const VariableContext::Ptr& ctx, int i, int j,
                                 const GaudinParams& p) {
  LaurentPoly m = LaurentPoly::constant(ctx, Rational(1));
  const LaurentPoly xi = LaurentPoly::variable(ctx, Var::x(i));
  for (int jp = 1; jp <= p.n; ++jp) {
    if (jp == j) continue;
    const LaurentPoly yj = LaurentPoly::variable(ctx, Var::y(jp));
    for (int k = 0; k <= p.r; ++k)
      m = m * (xi - LaurentPoly::variable(ctx, Var::t(), k) * yj);
  }
  return m;
}

namespace {

// prod_{i<j}(y_j - y_i), the row-swap alternant of the y block.
LaurentPoly y_vandermonde(const VariableContext::Ptr& ctx, int n) {
  Alphabet ys = Alphabet::y_vars(ctx, n);
  return vandermonde(ys);
}

// y_i(1 + t + ... + t^r) as the set of letters {t^k y_i : 0 <= k <= r}.
Alphabet t_spread(const VariableContext::Ptr& ctx, int i, int r) {
  return Alphabet::t_geometric(ctx, Var::y(i), r);
}

}  // namespace

LaurentPoly gaudin_raw(const VariableContext::Ptr& ctx, const GaudinParams& p) {
  check_gaudin_bounds(p);
  std::vector<std::vector<LaurentPoly>> m(p.n, std::vector<LaurentPoly>(p.n, LaurentPoly::zero(ctx)));
  for (int i = 1; i <= p.n; ++i)
    for (int j = 1; j <= p.n; ++j) m[i - 1][j - 1] = gaudin_cleared_entry(ctx, i, j, p);
  LaurentPoly det = det_poly(m);
  det = poly_exact_divide(det, difference_product(ctx, p.n));
  return poly_exact_divide(det, y_vandermonde(ctx, p.n));
}

LaurentPoly gaudin_multischur(const VariableContext::Ptr& ctx, const GaudinParams& p) {
  check_gaudin_bounds(p);
  Alphabet xs = Alphabet::x_vars(ctx, p.n);
  std::vector<std::vector<LaurentPoly>> m(p.n, std::vector<LaurentPoly>(p.n, LaurentPoly::zero(ctx)));
  for (int i = 1; i <= p.n; ++i) {
    AlphabetDiff d = AlphabetDiff::of(t_spread(ctx, i, p.r), xs);
    for (int j = 0; j < p.n; ++j) {
      Composition v(p.r + 1, p.n - 1);
      v[0] = j;
      m[i - 1][j] = schur(v, d);
    }
  }
  return poly_exact_divide(det_poly(m), y_vandermonde(ctx, p.n));
}

RationalFn gaudin_reference_product(const VariableContext::Ptr& ctx, const GaudinParams& p) {
  check_gaudin_bounds(p);
  Alphabet xs = Alphabet::x_vars(ctx, p.n);
  LaurentPoly num = vandermonde(xs);
  const Composition box(p.r, p.n - 1);
  for (int i = 1; i <= p.n; ++i)
    num = num * schur(box, AlphabetDiff::of(t_spread(ctx, i, p.r), xs));
  return RationalFn::quotient(num, y_vandermonde(ctx, p.n));
}

std::vector<LaurentPoly> specialization_letters(const VariableContext::Ptr& ctx,
                                                const GaudinParams& p) {
  std::vector<LaurentPoly> letters;
  for (int k = 0; k <= p.r; ++k)
    for (int i = 1; i <= p.n; ++i)
      letters.push_back(LaurentPoly::variable(ctx, Var::t(), k) *
                        LaurentPoly::variable(ctx, Var::y(i)));
  return letters;
}

LaurentPoly gaudin_at(const VariableContext::Ptr& ctx, const GaudinParams& p,
                      const std::vector<LaurentPoly>& x_images) {
  if (static_cast<int>(x_images.size()) != p.n)
    throw IndexOutOfRange("need one image per x variable");
  LaurentPoly f = gaudin_raw(ctx, p);
  std::vector<std::pair<Var, LaurentPoly>> images;
  for (int i = 1; i <= p.n; ++i) images.emplace_back(Var::x(i), x_images[i - 1]);
  return substitute(f, images);
}

SpecializationOutcome verify_specializations(const VariableContext::Ptr& ctx,
                                             const GaudinParams& p) {
  check_gaudin_bounds(p);
  SpecializationOutcome out;
  const std::vector<LaurentPoly> letters = specialization_letters(ctx, p);
  const int total = static_cast<int>(letters.size());
  const LaurentPoly f = gaudin_raw(ctx, p);
  const RationalFn g = gaudin_reference_product(ctx, p);
  const LaurentPoly gnum = g.numerator_poly();
  const LaurentPoly gden = g.denominator_poly();

  std::vector<int> pick(p.n);
  // iterate over n-subsets of {0..total-1} in lexicographic order
  for (int i = 0; i < p.n; ++i) pick[i] = i;
  while (true) {
    // assign letters to x slots in y-index order: the reference product is
    // not symmetric in x, and its alternant factor fixes this orientation
    std::vector<int> ordered = pick;
    std::sort(ordered.begin(), ordered.end(),
              [&](int a, int b) { return a % p.n != b % p.n ? a % p.n < b % p.n : a < b; });
    std::vector<std::pair<Var, LaurentPoly>> images;
    std::vector<int> which_y;
    for (int i = 0; i < p.n; ++i) {
      images.emplace_back(Var::x(i + 1), letters[ordered[i]]);
      which_y.push_back(ordered[i] % p.n);
    }
    const bool repeated =
        std::adjacent_find(which_y.begin(), which_y.end()) != which_y.end();

    const LaurentPoly fs = substitute(f, images);
    const LaurentPoly gs = substitute(gnum, images);
    if (repeated) {
      ++out.repeated_points;
      if (!(fs.is_zero() && gs.is_zero()) && out.repeated_vanish) {
        out.repeated_vanish = false;
        out.witness = "nonzero at repeated-y subset";
      }
    } else {
      ++out.injective_points;
      // F == G  <=>  F * den(G) == num(G) after substitution
      if (!(fs * gden == gs) && out.injective_match) {
        out.injective_match = false;
        std::string w = "mismatch at letters";
        for (int i = 0; i < p.n; ++i) w += " " + std::to_string(pick[i]);
        out.witness = w;
      }
    }

    // next subset
    int i = p.n - 1;
    while (i >= 0 && pick[i] == total - p.n + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int k = i + 1; k < p.n; ++k) pick[k] = pick[k - 1] + 1;
  }
  return out;
}

SchurExpansionOutcome odd_symmetry_schur(const VariableContext::Ptr& ctx,
                                         const GaudinParams& p) {
  check_gaudin_bounds(p);
  if (p.r % 2 == 0) throw BoundExceeded("union symmetry requires odd level");
  const int s = p.r + 2;
  std::vector<std::vector<LaurentPoly>> m(p.n, std::vector<LaurentPoly>(p.n, LaurentPoly::zero(ctx)));
  for (int i = 1; i <= p.n; ++i) {
    const LaurentPoly xi = LaurentPoly::variable(ctx, Var::x(i));
    const LaurentPoly xis = LaurentPoly::variable(ctx, Var::x(i), s);
    for (int j = 1; j <= p.n; ++j) {
      LaurentPoly e = xi - LaurentPoly::variable(ctx, Var::y(j));
      for (int jp = 1; jp <= p.n; ++jp) {
        if (jp == j) continue;
        e = e * (xis - LaurentPoly::variable(ctx, Var::y(jp), s));
      }
      m[i - 1][j - 1] = e;
    }
  }
  Alphabet xs = Alphabet::x_vars(ctx, p.n);
  Alphabet ys = Alphabet::y_vars(ctx, p.n);
  LaurentPoly q = det_poly(m);
  q = poly_exact_divide(q, vandermonde(xs));
  q = poly_exact_divide(q, y_vandermonde(ctx, p.n));
  q = poly_exact_divide(q, resultant(xs, ys));

  std::vector<Var> slots;
  for (int i = 1; i <= p.n; ++i) slots.push_back(Var::x(i));
  for (int i = 1; i <= p.n; ++i) slots.push_back(Var::y(i));
  auto expansion = schur_expand(q, slots);

  SchurExpansionOutcome out;
  out.single_term = expansion.size() == 1;
  if (!expansion.empty()) {
    out.index = expansion.front().first;
    const LaurentPoly& c = expansion.front().second;
    out.coefficient = c.is_constant() ? c.constant_value() : Rational(0);
  }
  return out;
}

}  // namespace gaudinlab
