#include "gaudinlab/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gaudinlab {

LaurentPoly LaurentPoly::constant(const VariableContext::Ptr& ctx, const Rational& c) {
  LaurentPoly p(ctx);
  if (!gaudinlab::is_zero(c)) p.terms_.emplace(ExpVec(ctx->size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(const VariableContext::Ptr& ctx, const Var& v, int exponent) {
  LaurentPoly p(ctx);
  if (exponent == 0) return constant(ctx, Rational(1));
  ExpVec e(ctx->size(), 0);
  e[ctx->slot(v)] = exponent;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

LaurentPoly LaurentPoly::monomial(const VariableContext::Ptr& ctx, const Rational& c, const ExpVec& e) {
  if (static_cast<int>(e.size()) != ctx->size()) throw ContextMismatch("exponent vector size");
  LaurentPoly p(ctx);
  if (!gaudinlab::is_zero(c)) p.terms_.emplace(e, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const ExpVec& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int32_t v) { return v == 0; });
}

Rational LaurentPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

std::optional<std::pair<ExpVec, Rational>> LaurentPoly::as_monomial() const {
  if (terms_.size() != 1) return std::nullopt;
  return std::make_pair(terms_.begin()->first, terms_.begin()->second);
}

const std::pair<const ExpVec, Rational>& LaurentPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return *terms_.rbegin();
}

bool LaurentPoly::has_negative_exponent() const {
  for (const auto& [e, c] : terms_)
    for (int32_t v : e)
      if (v < 0) return true;
  return false;
}

bool LaurentPoly::polynomial_in_alphabets() const {
  const int nxy = ctx_->x_count() + ctx_->y_count();
  for (const auto& [e, c] : terms_)
    for (int s = 0; s < nxy; ++s)
      if (e[s] < 0) return false;
  return true;
}

int LaurentPoly::min_exponent(int slot) const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[slot] < m) m = e[slot];
    first = false;
  }
  return m;
}

int LaurentPoly::max_exponent(int slot) const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[slot] > m) m = e[slot];
    first = false;
  }
  return m;
}

int LaurentPoly::total_degree() const {
  int best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

void LaurentPoly::add_term(const ExpVec& e, const Rational& c) {
  if (static_cast<int>(e.size()) != ctx_->size()) throw ContextMismatch("exponent vector size");
  if (gaudinlab::is_zero(c)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (gaudinlab::is_zero(it->second)) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(ctx_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same_context(ctx_, o.ctx_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  require_same_context(ctx_, o.ctx_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  require_same_context(ctx_, o.ctx_);
  LaurentPoly r(ctx_);
  if (terms_.empty() || o.terms_.empty()) return r;
  const int n = ctx_->size();
  ExpVec e(n);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly r(ctx_);
  if (gaudinlab::is_zero(c)) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

LaurentPoly LaurentPoly::term_multiplied(const Rational& c, const ExpVec& e) const {
  if (static_cast<int>(e.size()) != ctx_->size()) throw ContextMismatch("exponent vector size");
  LaurentPoly r(ctx_);
  if (gaudinlab::is_zero(c)) return r;
  const int n = ctx_->size();
  for (const auto& [ea, ca] : terms_) {
    ExpVec s(n);
    for (int i = 0; i < n; ++i) s[i] = ea[i] + e[i];
    r.terms_.emplace(std::move(s), ca * c);
  }
  return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e == 0) return constant(ctx_, Rational(1));
  if (e < 0) {
    auto m = as_monomial();
    if (!m) throw NonInvertibleImage("negative power of non-monomial");
    if (gaudinlab::is_zero(m->second)) throw DivisionByZero("negative power of zero");
    ExpVec inv = m->first;
    for (auto& v : inv) v = -v;
    LaurentPoly unit = monomial(ctx_, Rational(1) / m->second, inv);
    return unit.pow(-e);
  }
  LaurentPoly acc = constant(ctx_, Rational(1));
  LaurentPoly base = *this;
  int k = e;
  while (k) {
    if (k & 1) acc = acc * base;
    if (k >>= 1) base = base * base;
  }
  return acc;
}

int LaurentPoly::compare(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.ctx_.get() != b.ctx_.get()) return a.ctx_.get() < b.ctx_.get() ? -1 : 1;
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    int c = cmp(ia->second, ib->second);
    if (c != 0) return c;
  }
  if (ia != a.terms_.end()) return 1;
  if (ib != b.terms_.end()) return -1;
  return 0;
}

LaurentPoly LaurentPoly::permuted_x(const std::vector<int>& perm) const {
  const int k = static_cast<int>(perm.size());
  if (k > ctx_->x_count()) throw IndexOutOfRange("permutation longer than x alphabet");
  LaurentPoly r(ctx_);
  for (const auto& [e, c] : terms_) {
    ExpVec s = e;
    for (int i = 0; i < k; ++i) s[perm[i]] = e[i];
    r.add_term(s, c);
  }
  return r;
}

LaurentPoly LaurentPoly::swapped(const Var& a, const Var& b) const {
  const int sa = ctx_->slot(a), sb = ctx_->slot(b);
  if (sa == sb) return *this;
  LaurentPoly r(ctx_);
  for (const auto& [e, c] : terms_) {
    ExpVec s = e;
    std::swap(s[sa], s[sb]);
    r.terms_.emplace(std::move(s), c);
  }
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest term first reads like handwriting.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (first) {
      if (sgn(a) < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    first = false;
    std::string vars;
    for (std::size_t s = 0; s < e.size(); ++s) {
      if (e[s] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += ctx_->slot_name(static_cast<int>(s));
      if (e[s] != 1) vars += "^" + std::to_string(e[s]);
    }
    if (vars.empty()) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << vars;
    }
  }
  return out.str();
}

LaurentPoly poly_exact_divide(const LaurentPoly& p, const LaurentPoly& d) {
  require_same_context(p.context(), d.context());
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (p.is_zero()) return LaurentPoly::zero(p.context());
  if (auto m = d.as_monomial()) {
    ExpVec inv = m->first;
    for (auto& v : inv) v = -v;
    return p.term_multiplied(Rational(1) / m->second, inv);
  }

  // Leading-term division. For exact quotients the Newton polytopes satisfy
  // N(p) = N(q) + N(d), so every quotient exponent is confined per variable
  // to [min_p - min_d, max_p - max_d]; a candidate outside that box proves
  // non-divisibility (and bounds the loop, which otherwise could chase an
  // infinite Laurent tail).
  const int n = p.context()->size();
  std::vector<int> qmin(n), qmax(n);
  for (int s = 0; s < n; ++s) {
    qmin[s] = p.min_exponent(s) - d.min_exponent(s);
    qmax[s] = p.max_exponent(s) - d.max_exponent(s);
    if (qmin[s] > qmax[s]) throw NotDivisible("quotient exponent box empty");
  }

  const auto& dl = d.leading_term();
  LaurentPoly quot(p.context());
  LaurentPoly rem = p;
  ExpVec m(n);
  while (!rem.is_zero()) {
    const auto& rl = rem.leading_term();
    for (int s = 0; s < n; ++s) {
      m[s] = rl.first[s] - dl.first[s];
      if (m[s] < qmin[s] || m[s] > qmax[s]) throw NotDivisible("remainder survives division");
    }
    Rational c = rl.second / dl.second;
    quot.add_term(m, c);
    rem -= d.term_multiplied(c, m);
  }
  return quot;
}

LaurentPoly substitute(const LaurentPoly& p, const std::vector<std::pair<Var, LaurentPoly>>& images) {
  const auto& ctx = p.context();
  const int n = ctx->size();
  std::vector<const LaurentPoly*> image_by_slot(n, nullptr);
  for (const auto& [v, img] : images) {
    require_same_context(ctx, img.context());
    image_by_slot[ctx->slot(v)] = &img;
  }
  LaurentPoly result(ctx);
  for (const auto& [e, c] : p.terms()) {
    ExpVec rest = e;
    LaurentPoly factor = LaurentPoly::constant(ctx, Rational(1));
    bool dead = false;
    for (int s = 0; s < n && !dead; ++s) {
      if (!image_by_slot[s] || e[s] == 0) continue;
      rest[s] = 0;
      const LaurentPoly& img = *image_by_slot[s];
      if (img.is_zero()) {
        if (e[s] < 0) throw DivisionByZero("negative power of zero image");
        dead = true;
        continue;
      }
      if (e[s] < 0 && !img.as_monomial())
        throw NonInvertibleImage("negative power of non-monomial image");
      factor = factor * img.pow(e[s]);
    }
    if (dead) continue;
    result += factor.term_multiplied(c, rest);
  }
  return result;
}

LaurentPoly gaussian_binomial(const VariableContext::Ptr& ctx, int m, int k) {
  if (k < 0 || m < 0 || k > m) return LaurentPoly::zero(ctx);
  LaurentPoly num = LaurentPoly::constant(ctx, Rational(1));
  LaurentPoly den = LaurentPoly::constant(ctx, Rational(1));
  const LaurentPoly one = LaurentPoly::constant(ctx, Rational(1));
  for (int j = 1; j <= k; ++j) {
    num = num * (one - LaurentPoly::variable(ctx, Var::t(), m - k + j));
    den = den * (one - LaurentPoly::variable(ctx, Var::t(), j));
  }
  return poly_exact_divide(num, den);
}

LaurentPoly t_pochhammer(const VariableContext::Ptr& ctx, int n) {
  LaurentPoly r = LaurentPoly::constant(ctx, Rational(1));
  const LaurentPoly one = LaurentPoly::constant(ctx, Rational(1));
  for (int j = 1; j <= n; ++j) r = r * (one - LaurentPoly::variable(ctx, Var::t(), j));
  return r;
}

LaurentPoly t_factorial(const VariableContext::Ptr& ctx, int n) {
  LaurentPoly r = LaurentPoly::constant(ctx, Rational(1));
  for (int j = 2; j <= n; ++j) {
    LaurentPoly bracket(ctx);
    for (int k = 0; k < j; ++k) bracket += LaurentPoly::variable(ctx, Var::t(), k);
    r = r * bracket;
  }
  return r;
}

}  // namespace gaudinlab
