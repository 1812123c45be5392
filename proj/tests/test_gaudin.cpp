#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaudinlab/gaudin.hpp"
#include "gaudinlab/operators.hpp"

using namespace gaudinlab;

namespace {

RationalFn det2(const std::vector<std::vector<RationalFn>>& m) {
  return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

RationalFn det3(const std::vector<std::vector<RationalFn>>& m) {
  RationalFn d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
  d = d - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]);
  return d + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Independent route: assemble det(1 / prod_k(x_i - t^k y_j)) with generic
// rational arithmetic and normalise by the two alternants.
RationalFn pair_fn_oracle(const VariableContext::Ptr& ctx, int n, int r) {
  std::vector<std::vector<RationalFn>> m(n, std::vector<RationalFn>(n, RationalFn::zero(ctx)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      LaurentPoly d = LaurentPoly::constant(ctx, Rational(1));
      for (int k = 0; k <= r; ++k)
        d = d * (LaurentPoly::variable(ctx, Var::x(i)) -
                 LaurentPoly::variable(ctx, Var::t(), k) *
                     LaurentPoly::variable(ctx, Var::y(j)));
      m[i - 1][j - 1] = RationalFn::from_poly(d).inverse();
    }
  RationalFn det = (n == 2) ? det2(m) : det3(m);
  LaurentPoly res = LaurentPoly::constant(ctx, Rational(1));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 0; k <= r; ++k)
        res = res * (LaurentPoly::variable(ctx, Var::x(i)) -
                     LaurentPoly::variable(ctx, Var::t(), k) *
                         LaurentPoly::variable(ctx, Var::y(j)));
  Alphabet ys = Alphabet::y_vars(ctx, n);
  return det * RationalFn::quotient(
                   res, difference_product(ctx, n) * vandermonde(ys));
}

LaurentPoly yv(const VariableContext::Ptr& ctx, int i) {
  return LaurentPoly::variable(ctx, Var::y(i));
}

}  // namespace

TEST_CASE("single-variable and level-zero pair functions are 1") {
  for (int r = 0; r <= 3; ++r) {
    GaudinParams p{1, r, false};
    auto ctx = gaudin_context(p);
    CHECK(gaudin_raw(ctx, p) == LaurentPoly::constant(ctx, Rational(1)));
    CHECK(gaudin_multischur(ctx, p) == LaurentPoly::constant(ctx, Rational(1)));
  }
  for (int n = 2; n <= 3; ++n) {
    GaudinParams p{n, 0, false};
    auto ctx = gaudin_context(p);
    CHECK(gaudin_raw(ctx, p) == LaurentPoly::constant(ctx, Rational(1)));
    CHECK(gaudin_multischur(ctx, p) == LaurentPoly::constant(ctx, Rational(1)));
  }
}

TEST_CASE("determinant and Schur-determinant forms agree") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}}) {
    GaudinParams p{n, r, false};
    auto ctx = gaudin_context(p);
    CHECK(gaudin_raw(ctx, p) == gaudin_multischur(ctx, p));
  }
}

TEST_CASE("pair function against generic rational oracle") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}}) {
    GaudinParams p{n, r, false};
    auto ctx = gaudin_context(p);
    LaurentPoly f = gaudin_raw(ctx, p);
    CHECK(rat_equal(RationalFn::from_poly(f), pair_fn_oracle(ctx, n, r)));
  }
}

TEST_CASE("degree bounds and symmetry of the pair function") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}}) {
    GaudinParams p{n, r, false};
    auto ctx = gaudin_context(p);
    LaurentPoly f = gaudin_raw(ctx, p);
    // each variable appears with degree at most (n-1)r
    for (int i = 1; i <= n; ++i) {
      CHECK(f.max_exponent(ctx->slot(Var::x(i))) <= (n - 1) * r);
      CHECK(f.max_exponent(ctx->slot(Var::y(i))) <= (n - 1) * r);
    }
    // symmetric in x and in y separately
    for (int i = 1; i < n; ++i) {
      CHECK(f.swapped(Var::x(i), Var::x(i + 1)) == f);
      CHECK(f.swapped(Var::y(i), Var::y(i + 1)) == f);
    }
  }
}

TEST_CASE("worked specialization value at n=2, r=2") {
  GaudinParams p{2, 2, false};
  auto ctx = gaudin_context(p);
  auto y1 = yv(ctx, 1);
  auto y2 = yv(ctx, 2);
  auto t = LaurentPoly::variable(ctx, Var::t());

  // x1 -> y1, x2 -> t^2 y2
  LaurentPoly got = gaudin_at(ctx, p, {y1, t * t * y2});
  LaurentPoly expected =
      t * t * t * (y2 - y1) * (y1 - t * y2) * (y1 - t * y2) * (t * t * y2 - y1);
  CHECK(got == expected);

  // the reference product takes the same value there
  RationalFn g = gaudin_reference_product(ctx, p);
  LaurentPoly gn = substitute(g.numerator_poly(),
                              {{Var::x(1), y1}, {Var::x(2), t * t * y2}});
  CHECK(gn == expected * g.denominator_poly());
}

TEST_CASE("all specializations into the letter pool match the reference product") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}}) {
    GaudinParams p{n, r, false};
    auto ctx = gaudin_context(p);
    auto out = verify_specializations(ctx, p);
    INFO("n=", n, " r=", r, " witness=", out.witness);
    CHECK(out.injective_match);
    CHECK(out.repeated_vanish);
    CHECK(out.injective_points > 0);
    CHECK(out.repeated_points > 0);
  }
}

TEST_CASE("bounds are enforced unless lifted") {
  CHECK_THROWS_AS(gaudin_context(GaudinParams{9, 9, false}), BoundExceeded);
  CHECK_THROWS_AS(gaudin_context(GaudinParams{0, 1, false}), BoundExceeded);
  CHECK_NOTHROW(gaudin_context(GaudinParams{4, 1, true}));
}

TEST_CASE("odd level gives a single Schur function of the union alphabet") {
  {
    GaudinParams p{2, 1, false};
    auto ctx = gaudin_context(p);
    auto out = odd_symmetry_schur(ctx, p);
    CHECK(out.single_term);
    CHECK(out.index == Partition{1, 1});
    CHECK(out.coefficient == Rational(1));
  }
  {
    GaudinParams p{2, 3, false};
    auto ctx = gaudin_context(p);
    auto out = odd_symmetry_schur(ctx, p);
    CHECK(out.single_term);
    CHECK(out.index == Partition{3, 3});
    CHECK(out.coefficient == Rational(1));
  }
  {
    GaudinParams p{2, 2, false};
    auto ctx = gaudin_context(p);
    CHECK_THROWS_AS(odd_symmetry_schur(ctx, p), BoundExceeded);
  }
}

TEST_CASE("specialization data determines the function") {
  // The coefficient space for n=2, r=1 is spanned by Schur functions indexed
  // by partitions inside the square (1,1); evaluation at the 2-subsets of the
  // first three pool letters {y1, y2, t y1} must be injective on that span.
  GaudinParams p{2, 1, false};
  auto ctx = gaudin_context(p);
  auto y1 = yv(ctx, 1);
  auto y2 = yv(ctx, 2);
  auto t = LaurentPoly::variable(ctx, Var::t());

  std::vector<std::vector<LaurentPoly>> points = {
      {y1, y2}, {y1, t * y1}, {y2, t * y1}};
  std::vector<Partition> lams = {{}, {1}, {1, 1}};

  // rows: evaluation points; columns: Schur functions of x at that point
  std::vector<std::vector<LaurentPoly>> m;
  for (const auto& pt : points) {
    Alphabet a(ctx);
    a.add_letter(pt[0]);
    a.add_letter(pt[1]);
    std::vector<LaurentPoly> row;
    for (const auto& lam : lams)
      row.push_back(lam.empty() ? LaurentPoly::constant(ctx, Rational(1))
                                : schur_from_partition(lam, 2, AlphabetDiff::of(a)));
    m.push_back(row);
  }
  CHECK(!det_poly(m).is_zero());
}
