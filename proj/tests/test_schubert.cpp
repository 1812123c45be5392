#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaudinlab/linalg.hpp"
#include "gaudinlab/schubert.hpp"

using namespace gaudinlab;

namespace {

LaurentPoly xv(const VariableContext::Ptr& ctx, int i) {
  return LaurentPoly::variable(ctx, Var::x(i));
}
LaurentPoly yv(const VariableContext::Ptr& ctx, int i) {
  return LaurentPoly::variable(ctx, Var::y(i));
}
LaurentPoly cst(const VariableContext::Ptr& ctx, int c) {
  return LaurentPoly::constant(ctx, Rational(c));
}

}  // namespace

TEST_CASE("fraction-field linear algebra") {
  auto ctx = VariableContext::make(2, 1);
  auto fx = [&](const LaurentPoly& p) { return RationalFn::from_poly(p); };
  const auto x1 = xv(ctx, 1), x2 = xv(ctx, 2), y1 = yv(ctx, 1);

  RationalMatrix m = {{fx(x1), fx(y1)}, {fx(y1), fx(x2)}};
  CHECK(rat_equal(det_fraction(m), fx(x1 * x2 - y1 * y1)));
  CHECK(matrix_rank(m) == 2);

  // Second row is x2/x1 times the first: rank drops, determinant vanishes.
  RationalMatrix s = {{fx(x1), fx(y1)},
                      {fx(x2), fx(y1) * fx(x2) / fx(x1)}};
  CHECK(matrix_rank(s) == 1);
  CHECK(det_fraction(s).is_zero());
  CHECK_THROWS_AS(solve_linear(s, {fx(y1), fx(y1)}), NonInvertibleImage);

  // Round trip: solve m c = b, then recompute b.
  std::vector<RationalFn> b = {fx(x1 + y1), fx(x2 * y1)};
  auto c = solve_linear(m, b);
  REQUIRE(c.size() == 2);
  for (int i = 0; i < 2; ++i)
    CHECK(rat_equal(m[i][0] * c[0] + m[i][1] * c[1], b[i]));

  RationalMatrix one = {{fx(x1 - x2)}};
  CHECK(rat_equal(det_fraction(one), fx(x1 - x2)));
  CHECK(matrix_rank(one) == 1);
}

TEST_CASE("factorial powers and small double-alphabet values") {
  auto ctx = VariableContext::make(2, 3);
  const auto x1 = xv(ctx, 1), x2 = xv(ctx, 2);
  const auto y1 = yv(ctx, 1), y2 = yv(ctx, 2);

  CHECK(factorial_power(ctx, Var::x(1), 0) == cst(ctx, 1));
  CHECK(factorial_power(ctx, Var::x(1), 2) == (x1 - y1) * (x1 - y2));

  CHECK(factorial_schur(ctx, {0, 0}) == cst(ctx, 1));
  CHECK(factorial_schur(ctx, {0, 1}) == x1 + x2 - y1 - y2);

  auto ctx1 = VariableContext::make(1, 1);
  CHECK(factorial_schur(ctx1, {0}) == cst(ctx1, 1));
  CHECK(factorial_schur(ctx1, {1}) == xv(ctx1, 1) - yv(ctx1, 1));

  CHECK_THROWS_AS(factorial_schur(ctx, {1, 0}), BoundExceeded);
  CHECK_THROWS_AS(factorial_schur(ctx, {0, 3}), BoundExceeded);
}

TEST_CASE("specializing the second alphabet to zero leaves a Schur function") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& v : increasing_compositions(n, 3)) {
      auto ctx = VariableContext::make(n, std::max(1, v.back() + n - 1));
      const auto y = factorial_schur(ctx, v);
      std::vector<std::pair<Var, LaurentPoly>> to_zero;
      for (int i = 1; i <= ctx->y_count(); ++i)
        to_zero.push_back({Var::y(i), LaurentPoly::zero(ctx)});
      const auto at_zero = substitute(y, to_zero);
      CHECK(at_zero == schur(v, AlphabetDiff::of(Alphabet::x_vars(ctx, n))));
    }
  }
}

TEST_CASE("vanishing at flagged points matches diagram containment") {
  // Spot values first. v = (0,1): substituting {y_{1+u_1}, y_{2+u_2}} into
  // x1 + x2 - y1 - y2 gives y_{1+u_1} + y_{2+u_2} - y1 - y2 by hand.
  CHECK(factorial_schur_at_flag({0, 1}, {0, 0}).is_zero());
  {
    auto val = factorial_schur_at_flag({0, 1}, {1, 1});
    auto ctx = val.context();
    CHECK(val == yv(ctx, 2) + yv(ctx, 3) - yv(ctx, 1) - yv(ctx, 2));
  }

  CHECK(vanishing_check({0, 1}, {0, 0}));
  CHECK_FALSE(vanishing_check({0, 1}, {0, 1}));  // u = v never vanishes
  CHECK_FALSE(vanishing_check({0, 1}, {1, 1}));  // containment holds

  int agree = 0;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& v : increasing_compositions(n, 3)) {
      for (const auto& u : increasing_compositions(n, 3)) {
        const bool vanish = vanishing_check(v, u);
        CHECK(vanish == !flag_contains(u, v));
        if (vanish == !flag_contains(u, v)) ++agree;
      }
    }
  }
  // 4, 6, 7 flag vectors of weight <= 3 at n = 1, 2, 3.
  CHECK(agree == 16 + 36 + 49);
}

TEST_CASE("vanishing conditions pin the polynomial uniquely") {
  // Two x letters, flag indices reach y_4, factorial powers reach y_3.
  auto ctx = VariableContext::make(2, 4);
  const int n = 2;
  for (int d = 0; d <= 2; ++d) {
    for (const auto& v : increasing_compositions(n, d)) {
      if (weight(v) != d) continue;
      const auto target = factorial_schur(ctx, v);

      // Unknowns: Schur coefficients over all partitions of weight <= d with
      // at most n parts (reversals of the flag vectors); conditions: the
      // values at every flagged point of weight <= d. Same count, so the
      // system is square, and solvability certifies uniqueness.
      const auto flags = increasing_compositions(n, d);
      std::vector<Partition> basis;
      for (const auto& w : flags) basis.push_back(sorted_decreasing(w));

      RationalMatrix a;
      std::vector<RationalFn> b;
      for (const auto& u : flags) {
        const auto point = flagged_point(ctx, u);
        std::vector<RationalFn> row;
        for (const auto& lam : basis)
          row.push_back(RationalFn::from_poly(
              schur_from_partition(lam, n, AlphabetDiff::of(point))));
        a.push_back(std::move(row));
        std::vector<std::pair<Var, LaurentPoly>> images;
        for (int i = 0; i < n; ++i)
          images.push_back({Var::x(i + 1), point.letters()[i]});
        b.push_back(RationalFn::from_poly(substitute(target, images)));
      }

      auto coeffs = solve_linear(a, b);  // throws if not unique

      std::vector<Var> slots = {Var::x(1), Var::x(2)};
      auto expansion = schur_expand(target, slots);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        LaurentPoly expected = LaurentPoly::zero(ctx);
        for (const auto& [lam, coeff] : expansion)
          if (trimmed(lam) == trimmed(basis[k])) expected = coeff;
        CHECK(rat_equal(coeffs[k], RationalFn::from_poly(expected)));
      }
    }
  }
}

TEST_CASE("increasing composition enumeration") {
  auto one = increasing_compositions(1, 2);
  CHECK(one == std::vector<Composition>{{0}, {1}, {2}});
  auto two = increasing_compositions(2, 2);
  CHECK(two == std::vector<Composition>{{0, 0}, {0, 1}, {0, 2}, {1, 1}});
  CHECK(increasing_compositions(3, 0) == std::vector<Composition>{{0, 0, 0}});
}
