#include "gaudinlab/kernels.hpp"

#include <sstream>
#include <utility>

#include "gaudinlab/errors.hpp"

namespace gaudinlab {

namespace {

// Map insertion with zero pruning. RationalFn keeps sums factored, so a
// cancellation only becomes visible after reduce().
void accumulate(KernelSeries::TermMap& m, const ExpVec& key, const RationalFn& c) {
  auto it = m.find(key);
  if (it == m.end()) {
    RationalFn v = c;
    v.reduce();
    if (!v.is_zero()) m.emplace(key, std::move(v));
    return;
  }
  RationalFn v = it->second + c;
  v.reduce();
  if (v.is_zero()) {
    m.erase(it);
  } else {
    it->second = std::move(v);
  }
}

std::string key_to_string(const VariableContext::Ptr& ctx, const ExpVec& key) {
  std::ostringstream out;
  bool first = true;
  for (int s = 0; s < static_cast<int>(key.size()); ++s) {
    if (key[s] == 0) continue;
    if (!first) out << "*";
    out << ctx->slot_name(s);
    if (key[s] != 1) out << "^" << key[s];
    first = false;
  }
  if (first) out << "1";
  return out.str();
}

LaurentPoly one_minus(const LaurentPoly& p) {
  return LaurentPoly::constant(p.context(), Rational(1)) - p;
}

}  // namespace

KernelSeries::KernelSeries(VariableContext::Ptr ctx, int trunc) : ctx_(std::move(ctx)), trunc_(trunc) {
  if (trunc_ < 0) throw BoundExceeded("series truncation must be nonnegative");
}

int KernelSeries::y_degree(const ExpVec& key) const {
  int d = 0;
  for (int j = 1; j <= ctx_->y_count(); ++j) d += key[ctx_->slot(Var::y(j))];
  return d;
}

void KernelSeries::add_term(const ExpVec& key, const RationalFn& c) {
  if (y_degree(key) > trunc_) return;
  accumulate(terms_, key, c);
}

KernelSeries KernelSeries::one(const VariableContext::Ptr& ctx, int trunc) {
  KernelSeries s(ctx, trunc);
  s.terms_.emplace(ExpVec(ctx->size(), 0), RationalFn::one(ctx));
  return s;
}

KernelSeries KernelSeries::from_poly(const LaurentPoly& p, int trunc) {
  const auto& ctx = p.context();
  KernelSeries s(ctx, trunc);
  const int ts = ctx->t_slot();
  const int qs = ctx->q_slot();
  for (const auto& [e, c] : p.terms()) {
    ExpVec key = e;
    ExpVec param(ctx->size(), 0);
    param[ts] = key[ts];
    param[qs] = key[qs];
    key[ts] = 0;
    key[qs] = 0;
    for (int s = 0; s < static_cast<int>(key.size()); ++s) {
      if (key[s] < 0) {
        throw NegativeExponentResidue("series term with negative alphabet exponent: " +
                                      key_to_string(ctx, e));
      }
    }
    s.add_term(key, RationalFn::from_poly(LaurentPoly::monomial(ctx, c, param)));
  }
  return s;
}

RationalFn macdonald_pair_coefficient(const VariableContext::Ptr& ctx, int k) {
  if (k < 0) throw BoundExceeded("negative series exponent");
  RationalFn r = RationalFn::one(ctx);
  const LaurentPoly t = LaurentPoly::variable(ctx, Var::t());
  for (int m = 1; m <= k; ++m) {
    const LaurentPoly qpow = LaurentPoly::variable(ctx, Var::q(), m - 1);
    const LaurentPoly qm = LaurentPoly::variable(ctx, Var::q(), m);
    r = r * RationalFn::quotient(one_minus(t * qpow), one_minus(qm));
  }
  return r;
}

KernelSeries KernelSeries::sigma_kernel(const VariableContext::Ptr& ctx, KernelKind kind, int n,
                                        int trunc) {
  if (n < 1 || n > ctx->x_count() || n > ctx->y_count()) {
    throw BoundExceeded("kernel needs n letters in both alphabets");
  }
  // Per-exponent coefficients, shared by every pair (i, j).
  std::vector<RationalFn> coeff;
  coeff.reserve(trunc + 1);
  for (int k = 0; k <= trunc; ++k) {
    switch (kind) {
      case KernelKind::Plain:
        coeff.push_back(RationalFn::one(ctx));
        break;
      case KernelKind::TScaled:
        coeff.push_back(RationalFn::from_poly(LaurentPoly::variable(ctx, Var::t(), k)));
        break;
      case KernelKind::HlFinite:
        coeff.push_back(k == 0
                            ? RationalFn::one(ctx)
                            : RationalFn::from_poly(one_minus(LaurentPoly::variable(ctx, Var::t()))));
        break;
      case KernelKind::Macdonald:
        coeff.push_back(macdonald_pair_coefficient(ctx, k));
        break;
      case KernelKind::MacdonaldQShift:
        coeff.push_back(macdonald_pair_coefficient(ctx, k) *
                        RationalFn::from_poly(LaurentPoly::variable(ctx, Var::q(), k)));
        break;
    }
  }
  KernelSeries result = one(ctx, trunc);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      KernelSeries pair(ctx, trunc);
      for (int k = 0; k <= trunc; ++k) {
        ExpVec key(ctx->size(), 0);
        key[ctx->slot(Var::x(i))] = k;
        key[ctx->slot(Var::y(j))] = k;
        pair.terms_.emplace(key, coeff[k]);
      }
      result = result * pair;
    }
  }
  return result;
}

KernelSeries KernelSeries::operator+(const KernelSeries& o) const {
  require_same_context(ctx_, o.ctx_);
  if (trunc_ != o.trunc_) throw BoundExceeded("adding series with different truncations");
  KernelSeries s = *this;
  for (const auto& [key, c] : o.terms_) accumulate(s.terms_, key, c);
  return s;
}

KernelSeries KernelSeries::operator-(const KernelSeries& o) const {
  require_same_context(ctx_, o.ctx_);
  if (trunc_ != o.trunc_) throw BoundExceeded("subtracting series with different truncations");
  KernelSeries s = *this;
  for (const auto& [key, c] : o.terms_) accumulate(s.terms_, key, -c);
  return s;
}

KernelSeries KernelSeries::operator*(const KernelSeries& o) const {
  require_same_context(ctx_, o.ctx_);
  if (trunc_ != o.trunc_) throw BoundExceeded("multiplying series with different truncations");
  KernelSeries s(ctx_, trunc_);
  for (const auto& [ea, ca] : terms_) {
    const int da = y_degree(ea);
    for (const auto& [eb, cb] : o.terms_) {
      if (da + y_degree(eb) > trunc_) continue;
      ExpVec key(ctx_->size());
      for (std::size_t i = 0; i < key.size(); ++i) key[i] = ea[i] + eb[i];
      accumulate(s.terms_, key, ca * cb);
    }
  }
  return s;
}

KernelSeries KernelSeries::scaled(const RationalFn& c) const {
  require_same_context(ctx_, c.context());
  KernelSeries s(ctx_, trunc_);
  if (c.is_zero()) return s;
  for (const auto& [key, v] : terms_) accumulate(s.terms_, key, v * c);
  return s;
}

RationalFn KernelSeries::coefficient(const ExpVec& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? RationalFn::zero(ctx_) : it->second;
}

KernelSeries KernelSeries::shifted(ShiftKind kind, int n) const {
  if (n < 1 || n > ctx_->x_count()) throw BoundExceeded("shift span exceeds alphabet");
  KernelSeries s(ctx_, trunc_);
  const int base = ctx_->slot(Var::x(1));
  for (const auto& [e, c] : terms_) {
    const int wrap = e[base + n - 1];
    if (kind == ShiftKind::TauZero && wrap > 0) continue;
    ExpVec key = e;
    for (int i = n - 1; i >= 1; --i) key[base + i] = e[base + i - 1];
    key[base] = wrap;
    RationalFn v = c;
    if (wrap > 0) {
      if (kind == ShiftKind::TauQ) {
        v = v * RationalFn::from_poly(LaurentPoly::variable(ctx_, Var::q(), wrap));
      } else if (kind == ShiftKind::Theta) {
        v = v * RationalFn::from_poly(LaurentPoly::variable(ctx_, Var::t(), -wrap));
      }
    }
    accumulate(s.terms_, key, v);
  }
  return s;
}

KernelSeries KernelSeries::shift_product(ShiftKind kind, const std::vector<int>& powers,
                                         int n) const {
  KernelSeries g = *this;
  for (int p : powers) {
    const RationalFn tp = RationalFn::from_poly(LaurentPoly::variable(ctx_, Var::t(), p));
    g = g - g.shifted(kind, n).scaled(tp);
  }
  return g;
}

namespace {

// Exact division of an x-antisymmetric slice by (x_si - x_sj), si < sj as
// slot indices. The quotient term that cancels the lex-leading term is
// leading / x_si; the correction it introduces is lex-smaller, so the loop
// strictly descends and terminates.
KernelSeries::TermMap divide_binomial(KernelSeries::TermMap p, int si, int sj) {
  KernelSeries::TermMap out;
  while (!p.empty()) {
    auto lead = std::prev(p.end());
    const ExpVec e = lead->first;
    const RationalFn c = lead->second;
    if (e[si] <= 0) throw NotDivisible("antisymmetrised series not divisible by difference");
    ExpVec q = e;
    q[si] -= 1;
    accumulate(out, q, c);
    p.erase(lead);
    ExpVec r = q;
    r[sj] += 1;
    accumulate(p, r, c);
  }
  return out;
}

}  // namespace

KernelSeries KernelSeries::cup_omega(int n) const {
  if (n < 1 || n > ctx_->x_count()) throw BoundExceeded("weight span exceeds alphabet");
  KernelSeries weighted = *this * from_poly(t_weight_numerator(ctx_, n), trunc_);
  const int base = ctx_->slot(Var::x(1));

  TermMap antisym;
  for (const auto& w : symmetric_group(n)) {
    const Rational sign(w.sign);
    for (const auto& [e, c] : weighted.terms_) {
      ExpVec key = e;
      for (int i = 0; i < n; ++i) key[base + w.perm[i]] = e[base + i];
      RationalFn v = c;
      v.mul_scalar(sign);
      accumulate(antisym, key, v);
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      antisym = divide_binomial(std::move(antisym), base + i, base + j);
    }
  }

  KernelSeries s(ctx_, trunc_);
  s.terms_ = std::move(antisym);
  return s;
}

bool KernelSeries::matches(const KernelSeries& o, std::string* witness) const {
  require_same_context(ctx_, o.ctx_);
  auto ia = terms_.begin();
  auto ib = o.terms_.begin();
  while (ia != terms_.end() || ib != o.terms_.end()) {
    const bool only_a = ib == o.terms_.end() || (ia != terms_.end() && ia->first < ib->first);
    const bool only_b = ia == terms_.end() || (ib != o.terms_.end() && ib->first < ia->first);
    ExpVec key;
    RationalFn a = RationalFn::zero(ctx_);
    RationalFn b = RationalFn::zero(ctx_);
    if (only_a) {
      key = ia->first;
      a = ia->second;
      ++ia;
    } else if (only_b) {
      key = ib->first;
      b = ib->second;
      ++ib;
    } else {
      key = ia->first;
      a = ia->second;
      b = ib->second;
      ++ia;
      ++ib;
    }
    if (!rat_equal(a, b)) {
      if (witness != nullptr) {
        *witness = "coefficient of " + key_to_string(ctx_, key) + ": " + a.to_string() +
                   " vs " + b.to_string();
      }
      return false;
    }
  }
  if (witness != nullptr) witness->clear();
  return true;
}

}  // namespace gaudinlab
