#include "gaudinlab/schubert.hpp"

#include <algorithm>

#include "gaudinlab/errors.hpp"

namespace gaudinlab {

namespace {

void require_increasing(const Composition& v, const char* what) {
  if (v.empty() || v.front() < 0)
    throw BoundExceeded(std::string(what) + " must be nonempty and nonnegative");
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] < v[i - 1])
      throw BoundExceeded(std::string(what) + " must be weakly increasing");
}

void enumerate_increasing(int length, int maxweight, int minpart, Composition& cur,
                          std::vector<Composition>& out) {
  if (static_cast<int>(cur.size()) == length) {
    out.push_back(cur);
    return;
  }
  const int rest = length - static_cast<int>(cur.size());
  for (int p = minpart; p * rest <= maxweight; ++p) {
    cur.push_back(p);
    enumerate_increasing(length, maxweight - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

LaurentPoly factorial_power(const VariableContext::Ptr& ctx, const Var& x, int k) {
  if (k < 0) throw IndexOutOfRange("negative factorial power");
  LaurentPoly out = LaurentPoly::constant(ctx, Rational(1));
  const LaurentPoly base = LaurentPoly::variable(ctx, x);
  for (int m = 1; m <= k; ++m)
    out = out * (base - LaurentPoly::variable(ctx, Var::y(m)));
  return out;
}

LaurentPoly factorial_schur(const VariableContext::Ptr& ctx, const Composition& v) {
  require_increasing(v, "index");
  const int n = ctx->x_count();
  if (static_cast<int>(v.size()) != n)
    throw BoundExceeded("index length must match x count");
  if (v.back() + n - 1 > ctx->y_count())
    throw BoundExceeded("context has too few y variables for this index");
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>());
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j < n; ++j)
      m[i - 1].push_back(factorial_power(ctx, Var::x(i), v[j] + j));
  return poly_exact_divide(det_poly(m), vandermonde(Alphabet::x_vars(ctx, n)));
}

Alphabet flagged_point(const VariableContext::Ptr& ctx, const Composition& u) {
  require_increasing(u, "flag");
  const int n = static_cast<int>(u.size());
  if (u.back() + n > ctx->y_count())
    throw BoundExceeded("context has too few y variables for this flag");
  Alphabet a(ctx);
  for (int i = 0; i < n; ++i)
    a.add_letter(LaurentPoly::variable(ctx, Var::y(i + 1 + u[i])));
  return a;
}

LaurentPoly factorial_schur_at_flag(const Composition& v, const Composition& u) {
  require_increasing(v, "index");
  require_increasing(u, "flag");
  if (v.size() != u.size()) throw BoundExceeded("index and flag length differ");
  const int n = static_cast<int>(v.size());
  const int y_need = std::max({1, v.back() + n - 1, u.back() + n});
  auto ctx = VariableContext::make(n, y_need);
  const LaurentPoly y = factorial_schur(ctx, v);
  const Alphabet point = flagged_point(ctx, u);
  std::vector<std::pair<Var, LaurentPoly>> images;
  for (int i = 0; i < n; ++i) images.push_back({Var::x(i + 1), point.letters()[i]});
  return substitute(y, images);
}

bool vanishing_check(const Composition& v, const Composition& u) {
  return factorial_schur_at_flag(v, u).is_zero();
}

std::vector<Composition> increasing_compositions(int length, int maxweight) {
  if (length < 1 || maxweight < 0) throw BoundExceeded("bad enumeration bounds");
  std::vector<Composition> out;
  Composition cur;
  enumerate_increasing(length, maxweight, 0, cur, out);
  return out;
}

}  // namespace gaudinlab
