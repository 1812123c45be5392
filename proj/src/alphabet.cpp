#include "gaudinlab/alphabet.hpp"

#include <algorithm>

#include "gaudinlab/errors.hpp"

namespace gaudinlab {

Alphabet Alphabet::x_vars(const VariableContext::Ptr& ctx, int n) {
  Alphabet a(ctx);
  for (int i = 1; i <= n; ++i) a.add_letter(LaurentPoly::variable(ctx, Var::x(i)));
  return a;
}

Alphabet Alphabet::y_vars(const VariableContext::Ptr& ctx, int n) {
  Alphabet a(ctx);
  for (int i = 1; i <= n; ++i) a.add_letter(LaurentPoly::variable(ctx, Var::y(i)));
  return a;
}

Alphabet Alphabet::t_geometric(const VariableContext::Ptr& ctx, const Var& base, int r) {
  Alphabet a(ctx);
  const LaurentPoly b = LaurentPoly::variable(ctx, base);
  for (int k = 0; k <= r; ++k)
    a.add_letter(b * LaurentPoly::variable(ctx, Var::t(), k));
  return a;
}

void Alphabet::add_letter(const LaurentPoly& monomial) {
  require_same_context(ctx_, monomial.context());
  if (!monomial.as_monomial()) throw std::invalid_argument("alphabet letter must be a monomial");
  letters_.push_back(monomial);
}

Alphabet Alphabet::joined(const Alphabet& other) const {
  require_same_context(ctx_, other.ctx_);
  Alphabet a = *this;
  for (const auto& l : other.letters_) a.letters_.push_back(l);
  return a;
}

CompleteSeries::CompleteSeries(const AlphabetDiff& d, int maxdeg)
    : ctx_(d.plus.context()), zero_(LaurentPoly::zero(d.plus.context())) {
  require_same_context(d.plus.context(), d.minus.context());
  if (maxdeg < 0) maxdeg = 0;
  // Numerator prod_{b in minus} (1 - zb), a polynomial in z of degree |minus|.
  s_.assign(maxdeg + 1, zero_);
  s_[0] = LaurentPoly::constant(ctx_, Rational(1));
  for (const auto& b : d.minus.letters()) {
    // multiply the z-series by (1 - zb): s'_k = s_k - b*s_{k-1}
    for (int k = maxdeg; k >= 1; --k) s_[k] = s_[k] - b * s_[k - 1];
  }
  for (const auto& a : d.plus.letters()) {
    // divide by (1 - za): s'_k = s_k + a*s'_{k-1}
    for (int k = 1; k <= maxdeg; ++k) s_[k] = s_[k] + a * s_[k - 1];
  }
}

const LaurentPoly& CompleteSeries::at(int j) const {
  if (j < 0 || j >= static_cast<int>(s_.size())) return zero_;
  return s_[j];
}

LaurentPoly complete_function(int j, const AlphabetDiff& d) {
  if (j < 0) return LaurentPoly::zero(d.plus.context());
  CompleteSeries cs(d, j);
  return cs.at(j);
}

LaurentPoly elementary_function(int j, const Alphabet& a) {
  const auto& ctx = a.context();
  if (j < 0 || j > a.size()) return LaurentPoly::zero(ctx);
  // e_j(A) = (-1)^j S_j(0 - A)
  AlphabetDiff d{Alphabet(ctx), a};
  LaurentPoly s = complete_function(j, d);
  return (j % 2 == 0) ? s : -s;
}

LaurentPoly schur(const Composition& v, const AlphabetDiff& d) {
  std::vector<AlphabetDiff> diffs(v.size(), d);
  return multi_schur(v, diffs);
}

LaurentPoly schur_from_partition(const Partition& lambda, int width, const AlphabetDiff& d) {
  if (!is_partition(lambda)) throw std::invalid_argument("not a partition");
  Composition v = padded(trimmed(lambda), width);
  std::reverse(v.begin(), v.end());
  return schur(v, d);
}

LaurentPoly multi_schur(const Composition& v, const std::vector<AlphabetDiff>& diffs) {
  if (v.size() != diffs.size()) throw WeightMismatch("index/alphabet column count mismatch");
  if (v.empty()) {
    throw std::invalid_argument("empty multi-Schur index");
  }
  const auto& ctx = diffs[0].plus.context();
  const int n = static_cast<int>(v.size());
  int maxdeg = 0;
  for (int j = 0; j < n; ++j) maxdeg = std::max(maxdeg, v[j] + n);
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n, LaurentPoly::zero(ctx)));
  for (int j = 0; j < n; ++j) {
    CompleteSeries cs(diffs[j], maxdeg);
    for (int i = 0; i < n; ++i) m[i][j] = cs.at(v[j] + (j + 1) - (i + 1));
  }
  return det_poly(m);
}

LaurentPoly resultant(const Alphabet& a, const Alphabet& b) {
  require_same_context(a.context(), b.context());
  LaurentPoly r = LaurentPoly::constant(a.context(), Rational(1));
  for (const auto& la : a.letters())
    for (const auto& lb : b.letters()) r = r * (la - lb);
  return r;
}

LaurentPoly vandermonde(const Alphabet& a) {
  LaurentPoly r = LaurentPoly::constant(a.context(), Rational(1));
  const auto& ls = a.letters();
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i + 1; j < ls.size(); ++j) r = r * (ls[j] - ls[i]);
  return r;
}

static LaurentPoly det_cofactor(const std::vector<std::vector<LaurentPoly>>& m,
                                std::vector<int>& cols, int row) {
  const int n = static_cast<int>(m.size());
  const auto& ctx = m[0][0].context();
  if (row == n) return LaurentPoly::constant(ctx, Rational(1));
  LaurentPoly acc = LaurentPoly::zero(ctx);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    int c = cols[k];
    if (m[row][c].is_zero()) continue;
    cols.erase(cols.begin() + k);
    LaurentPoly sub = det_cofactor(m, cols, row + 1);
    cols.insert(cols.begin() + k, c);
    LaurentPoly term = m[row][c] * sub;
    if (k % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

// Fraction-free Bareiss elimination; every division is exact by the Sylvester
// identity, so it stays in the polynomial ring.
static LaurentPoly det_bareiss(std::vector<std::vector<LaurentPoly>> m) {
  const int n = static_cast<int>(m.size());
  const auto& ctx = m[0][0].context();
  LaurentPoly prev = LaurentPoly::constant(ctx, Rational(1));
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          p = i;
          break;
        }
      if (p < 0) return LaurentPoly::zero(ctx);
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = poly_exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  LaurentPoly d = m[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

LaurentPoly det_poly(const std::vector<std::vector<LaurentPoly>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw WeightMismatch("non-square matrix");
  if (n == 1) return m[0][0];
  if (n <= 4) {
    std::vector<int> cols(n);
    for (int i = 0; i < n; ++i) cols[i] = i;
    return det_cofactor(m, cols, 0);
  }
  return det_bareiss(m);
}

LaurentPoly monomial_symmetric(const Partition& lambda, const std::vector<Var>& vars,
                               const VariableContext::Ptr& ctx) {
  const int n = static_cast<int>(vars.size());
  if (static_cast<int>(trimmed(lambda).size()) > n) return LaurentPoly::zero(ctx);
  LaurentPoly r(ctx);
  for (const auto& pattern : distinct_permutations(lambda, n)) {
    ExpVec e(ctx->size(), 0);
    for (int i = 0; i < n; ++i) e[ctx->slot(vars[i])] = pattern[i];
    r.add_term(e, Rational(1));
  }
  return r;
}

std::vector<std::pair<Partition, LaurentPoly>> schur_expand(const LaurentPoly& p,
                                                            const std::vector<Var>& alphabet) {
  const auto& ctx = p.context();
  Alphabet a(ctx);
  std::vector<int> slots;
  for (const auto& v : alphabet) {
    a.add_letter(LaurentPoly::variable(ctx, v));
    slots.push_back(ctx->slot(v));
  }
  const AlphabetDiff d = AlphabetDiff::of(a);

  std::vector<std::pair<Partition, LaurentPoly>> out;
  LaurentPoly rem = p;
  int guard = 0;
  while (!rem.is_zero()) {
    if (++guard > 100000) throw std::logic_error("schur expansion does not terminate");
    // Leading alphabet pattern under lex order on the chosen slots.
    std::vector<int> best;
    for (const auto& [e, c] : rem.terms()) {
      std::vector<int> pat(slots.size());
      for (std::size_t i = 0; i < slots.size(); ++i) pat[i] = e[slots[i]];
      if (best.empty() || pat > best) best = pat;
    }
    if (!is_partition(best))
      throw NotProportional("polynomial is not symmetric in the alphabet: leading pattern " +
                            std::to_string(best.empty() ? 0 : best[0]));
    // Coefficient of the leading pattern, alphabet exponents stripped.
    LaurentPoly coeff(ctx);
    for (const auto& [e, c] : rem.terms()) {
      bool match = true;
      for (std::size_t i = 0; i < slots.size() && match; ++i)
        if (e[slots[i]] != best[i]) match = false;
      if (!match) continue;
      ExpVec stripped = e;
      for (int s : slots) stripped[s] = 0;
      coeff.add_term(stripped, c);
    }
    Partition lam = trimmed(best);
    LaurentPoly s = lam.empty() ? LaurentPoly::constant(ctx, Rational(1))
                                : schur_from_partition(lam, static_cast<int>(slots.size()), d);
    rem -= coeff * s;
    out.emplace_back(lam, coeff);
  }
  // Display order: weight ascending, then lexicographically descending within a
  // weight so that e.g. s_(2) precedes s_(1,1).
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    int wl = weight(l.first), wr = weight(r.first);
    if (wl != wr) return wl < wr;
    return l.first > r.first;
  });
  return out;
}

}  // namespace gaudinlab
