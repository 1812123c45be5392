#include "gaudinlab/rational_fn.hpp"

#include <sstream>

namespace gaudinlab {

RationalFn RationalFn::from_scalar(const VariableContext::Ptr& ctx, const Rational& c) {
  RationalFn r(ctx);
  r.unit_ = c;
  return r;
}

RationalFn RationalFn::from_poly(const LaurentPoly& p) {
  RationalFn r(p.context());
  r.unit_ = 1;
  r.mul_poly(p);
  return r;
}

RationalFn RationalFn::quotient(const LaurentPoly& num, const LaurentPoly& den) {
  require_same_context(num.context(), den.context());
  RationalFn r = from_poly(num);
  r.mul_poly(den, -1);
  return r;
}

void RationalFn::mul_scalar(const Rational& c) {
  unit_ *= c;
  if (gaudinlab::is_zero(unit_)) factors_.clear();
}

void RationalFn::mul_poly(const LaurentPoly& p, int mult) {
  require_same_context(ctx_, p.context());
  if (mult == 0 || is_zero()) return;
  if (p.is_zero()) {
    if (mult < 0) throw DivisionByZero("zero denominator factor");
    unit_ = 0;
    factors_.clear();
    return;
  }
  if (p.is_constant()) {
    mul_scalar(pow_rational(p.constant_value(), mult));
    return;
  }
  const Rational lc = p.leading_term().second;
  unit_ *= pow_rational(lc, mult);
  LaurentPoly monic = p.scaled(Rational(1) / lc);
  auto it = factors_.find(monic);
  if (it == factors_.end()) {
    factors_.emplace(std::move(monic), mult);
  } else {
    it->second += mult;
    if (it->second == 0) factors_.erase(it);
  }
}

bool RationalFn::is_polynomial() const {
  for (const auto& [f, m] : factors_)
    if (m < 0) return false;
  return true;
}

LaurentPoly RationalFn::numerator_poly() const {
  LaurentPoly n = LaurentPoly::constant(ctx_, unit_);
  for (const auto& [f, m] : factors_)
    if (m > 0) n = n * f.pow(m);
  return n;
}

LaurentPoly RationalFn::denominator_poly() const {
  LaurentPoly d = LaurentPoly::constant(ctx_, Rational(1));
  for (const auto& [f, m] : factors_)
    if (m < 0) d = d * f.pow(-m);
  return d;
}

LaurentPoly RationalFn::as_poly() const {
  if (!is_polynomial()) throw NotDivisible("rational value with denominator left");
  return numerator_poly();
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
  require_same_context(ctx_, o.ctx_);
  if (is_zero() || o.is_zero()) return zero(ctx_);
  RationalFn r = *this;
  r.unit_ *= o.unit_;
  for (const auto& [f, m] : o.factors_) {
    auto it = r.factors_.find(f);
    if (it == r.factors_.end()) {
      r.factors_.emplace(f, m);
    } else {
      it->second += m;
      if (it->second == 0) r.factors_.erase(it);
    }
  }
  return r;
}

RationalFn RationalFn::inverse() const {
  if (is_zero()) throw DivisionByZero("inverting zero rational function");
  RationalFn r(ctx_);
  r.unit_ = Rational(1) / unit_;
  for (const auto& [f, m] : factors_) r.factors_.emplace(f, -m);
  return r;
}

RationalFn RationalFn::operator/(const RationalFn& o) const { return *this * o.inverse(); }

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.unit_ = -r.unit_;
  return r;
}

RationalFn RationalFn::pow(int e) const {
  if (e == 0) return one(ctx_);
  if (is_zero()) {
    if (e < 0) throw DivisionByZero("negative power of zero");
    return zero(ctx_);
  }
  RationalFn r(ctx_);
  r.unit_ = pow_rational(unit_, e);
  for (const auto& [f, m] : factors_) r.factors_.emplace(f, m * e);
  return r;
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
  require_same_context(ctx_, o.ctx_);
  if (is_zero()) return o;
  if (o.is_zero()) return *this;

  // Factor-wise max common denominator keeps the swap symmetry that the
  // divided-difference division step relies on.
  FactorMap den;
  auto collect = [&den](const FactorMap& fm) {
    for (const auto& [f, m] : fm) {
      if (m >= 0) continue;
      auto it = den.find(f);
      if (it == den.end())
        den.emplace(f, -m);
      else if (-m > it->second)
        it->second = -m;
    }
  };
  collect(factors_);
  collect(o.factors_);

  auto lifted = [&den, this](const RationalFn& v) {
    LaurentPoly n = v.numerator_poly();
    for (const auto& [f, need] : den) {
      auto it = v.factors_.find(f);
      int have = (it != v.factors_.end() && it->second < 0) ? -it->second : 0;
      if (need > have) n = n * f.pow(need - have);
    }
    return n;
  };

  LaurentPoly sum = lifted(*this) + lifted(o);
  RationalFn r(ctx_);
  r.unit_ = 1;
  r.mul_poly(sum);
  for (const auto& [f, m] : den) r.mul_poly(f, -m);
  r.reduce();
  return r;
}

RationalFn RationalFn::operator-(const RationalFn& o) const { return *this + (-o); }

void RationalFn::reduce() {
  if (is_zero()) return;
  bool has_den = false;
  for (const auto& [f, m] : factors_)
    if (m < 0) has_den = true;
  if (!has_den) return;

  LaurentPoly num = numerator_poly();
  FactorMap den;
  for (const auto& [f, m] : factors_)
    if (m < 0) den.emplace(f, m);
  factors_.clear();
  unit_ = 1;

  for (auto& [f, m] : den) {
    while (m < 0) {
      try {
        num = poly_exact_divide(num, f);
        ++m;
      } catch (const NotDivisible&) {
        break;
      }
    }
  }
  mul_poly(num);
  for (const auto& [f, m] : den)
    if (m < 0) mul_poly(f, m);
}

RationalFn RationalFn::substituted(const std::vector<std::pair<Var, LaurentPoly>>& images) const {
  RationalFn r(ctx_);
  r.unit_ = unit_;
  if (is_zero()) return r;
  for (const auto& [f, m] : factors_) r.mul_poly(substitute(f, images), m);
  return r;
}

RationalFn RationalFn::swapped(const Var& a, const Var& b) const {
  RationalFn r(ctx_);
  r.unit_ = unit_;
  if (is_zero()) return r;
  for (const auto& [f, m] : factors_) r.mul_poly(f.swapped(a, b), m);
  return r;
}

RationalFn RationalFn::permuted_x(const std::vector<int>& perm) const {
  RationalFn r(ctx_);
  r.unit_ = unit_;
  if (is_zero()) return r;
  for (const auto& [f, m] : factors_) r.mul_poly(f.permuted_x(perm), m);
  return r;
}

std::string RationalFn::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  LaurentPoly num = numerator_poly();
  LaurentPoly den = denominator_poly();
  if (den.is_constant()) return num.to_string();
  out << "(" << num.to_string() << ") / (" << den.to_string() << ")";
  return out.str();
}

bool rat_equal(const RationalFn& a, const RationalFn& b) {
  require_same_context(a.context(), b.context());
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  RationalFn q = a / b;  // shared factors cancel in the map merge
  LaurentPoly lhs = q.numerator_poly();
  LaurentPoly rhs = q.denominator_poly();
  return lhs == rhs;
}

}  // namespace gaudinlab
