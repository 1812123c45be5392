#include "gaudinlab/symfn.hpp"

#include <algorithm>

#include "gaudinlab/operators.hpp"
#include "gaudinlab/qt.hpp"

namespace gaudinlab {

namespace {

LaurentPoly one_minus_power(const VariableContext::Ptr& ctx, const Var& v, int e) {
  return LaurentPoly::constant(ctx, Rational(1)) - LaurentPoly::variable(ctx, v, e);
}

// Bracket factorial prod_{j=1}^{m} (1 + t + ... + t^{j-1}).
LaurentPoly bracket_factorial(const VariableContext::Ptr& ctx, int m) {
  return t_factorial(ctx, m);
}

void check_same_weight(const SymFnExpr& f, const SymFnExpr& g) {
  require_same_context(f.ctx, g.ctx);
  if (f.weight != g.weight) throw WeightMismatch("symmetric functions of unequal weight");
}

// Coefficient vector of f over the fixed partition order at its weight.
std::vector<RationalFn> coefficient_vector(const SymFnExpr& f, const BasisTransition& tr) {
  std::vector<RationalFn> out;
  out.reserve(tr.parts.size());
  for (const auto& lam : tr.parts) out.push_back(f.coefficient(lam));
  return out;
}

// Partitions of weight <= lambda's that precede lambda in the Gram-Schmidt
// elimination order: same weight, strictly smaller in the dominance-refining
// total order (smallest first).
std::vector<Partition> predecessors(const Partition& lambda) {
  std::vector<Partition> out;
  for (const auto& mu : partitions_of_weight(weight(lambda)))
    if (partition_total_less(mu, lambda)) out.push_back(mu);
  std::sort(out.begin(), out.end(),
            [](const Partition& a, const Partition& b) { return partition_total_less(a, b); });
  return out;
}

}  // namespace

SymFnExpr SymFnExpr::monomial(const VariableContext::Ptr& ctx, const Partition& lambda) {
  if (!is_partition(lambda)) throw BoundExceeded("monomial index must be a partition");
  SymFnExpr f{ctx, gaudinlab::weight(lambda), {}};
  f.coeffs.insert_or_assign(trimmed(lambda), RationalFn::one(ctx));
  return f;
}

SymFnExpr SymFnExpr::powersum(const VariableContext::Ptr& ctx, const Partition& mu) {
  if (!is_partition(mu)) throw BoundExceeded("power-sum index must be a partition");
  const auto& tr = basis_transition(gaudinlab::weight(mu));
  SymFnExpr f{ctx, gaudinlab::weight(mu), {}};
  const Partition key = trimmed(mu);
  for (std::size_t m = 0; m < tr.parts.size(); ++m) {
    if (tr.parts[m] != key) continue;
    for (std::size_t l = 0; l < tr.parts.size(); ++l)
      if (!is_zero(tr.p_in_m[m][l]))
        f.coeffs.insert_or_assign(tr.parts[l], RationalFn::from_scalar(ctx, tr.p_in_m[m][l]));
    return f;
  }
  throw IndexOutOfRange("power-sum index not found at its weight");
}

SymFnExpr SymFnExpr::scaled(const RationalFn& c) const {
  SymFnExpr f{ctx, weight, {}};
  if (c.is_zero()) return f;
  for (const auto& [lam, coeff] : coeffs) f.coeffs.insert_or_assign(lam, coeff * c);
  return f;
}

SymFnExpr SymFnExpr::operator+(const SymFnExpr& o) const {
  check_same_weight(*this, o);
  SymFnExpr f{ctx, weight, coeffs};
  for (const auto& [lam, coeff] : o.coeffs) {
    auto it = f.coeffs.find(lam);
    if (it == f.coeffs.end()) {
      f.coeffs.insert_or_assign(lam, coeff);
    } else {
      it->second = it->second + coeff;
      it->second.reduce();
      if (it->second.is_zero()) f.coeffs.erase(it);
    }
  }
  return f;
}

SymFnExpr SymFnExpr::operator-(const SymFnExpr& o) const {
  return *this + o.scaled(RationalFn::from_scalar(ctx, Rational(-1)));
}

RationalFn SymFnExpr::coefficient(const Partition& lambda) const {
  auto it = coeffs.find(trimmed(lambda));
  return it == coeffs.end() ? RationalFn::zero(ctx) : it->second;
}

RationalFn macdonald_scalar(const SymFnExpr& f, const SymFnExpr& g) {
  check_same_weight(f, g);
  const auto& ctx = f.ctx;
  const auto& tr = basis_transition(f.weight);
  const auto fm = coefficient_vector(f, tr);
  const auto gm = coefficient_vector(g, tr);

  RationalFn total = RationalFn::zero(ctx);
  for (std::size_t mu = 0; mu < tr.parts.size(); ++mu) {
    // p-coefficients via m = sum of m_in_p rows.
    RationalFn fp = RationalFn::zero(ctx), gp = RationalFn::zero(ctx);
    for (std::size_t l = 0; l < tr.parts.size(); ++l) {
      if (!is_zero(tr.m_in_p[l][mu])) {
        const auto w = RationalFn::from_scalar(ctx, tr.m_in_p[l][mu]);
        fp = fp + fm[l] * w;
        gp = gp + gm[l] * w;
      }
    }
    fp.reduce();
    gp.reduce();
    if (fp.is_zero() || gp.is_zero()) continue;
    LaurentPoly num = LaurentPoly::constant(ctx, z_lambda(tr.parts[mu]));
    LaurentPoly den = LaurentPoly::constant(ctx, Rational(1));
    for (int part : tr.parts[mu]) {
      num = num * one_minus_power(ctx, Var::q(), part);
      den = den * one_minus_power(ctx, Var::t(), part);
    }
    total = total + fp * gp * RationalFn::quotient(num, den);
  }
  total.reduce();
  return total;
}

SymFnExpr macdonald_p(const VariableContext::Ptr& ctx, const Partition& lambda) {
  if (!is_partition(lambda)) throw BoundExceeded("index must be a partition");
  SymFnExpr p = SymFnExpr::monomial(ctx, lambda);
  for (const auto& mu : predecessors(trimmed(lambda))) {
    const SymFnExpr pmu = macdonald_p(ctx, mu);
    RationalFn corr = macdonald_scalar(p, pmu) / macdonald_scalar(pmu, pmu);
    corr.reduce();
    if (!corr.is_zero()) p = p - pmu.scaled(corr);
  }
  return p;
}

RationalFn b_constant(const VariableContext::Ptr& ctx, const Partition& lambda) {
  const SymFnExpr p = macdonald_p(ctx, lambda);
  return macdonald_scalar(p, p).inverse();
}

LaurentPoly restrict_to_alphabet(const SymFnExpr& f, const std::vector<Var>& vars) {
  LaurentPoly out = LaurentPoly::zero(f.ctx);
  for (const auto& [lam, coeff] : f.coeffs) {
    if (static_cast<int>(lam.size()) > static_cast<int>(vars.size())) continue;
    RationalFn c = coeff;
    c.reduce();
    if (!c.is_polynomial())
      throw NegativeExponentResidue("restriction needs polynomial coefficients");
    out += c.as_poly() * monomial_symmetric(lam, vars, f.ctx);
  }
  return out;
}

LaurentPoly c_lambda(const VariableContext::Ptr& ctx, const Partition& lambda, int n) {
  if (static_cast<int>(trimmed(lambda).size()) > n)
    throw BoundExceeded("partition longer than variable count");
  const auto mult = part_multiplicities(lambda, n);
  LaurentPoly out = LaurentPoly::constant(ctx, Rational(1));
  for (int m : mult) out = out * bracket_factorial(ctx, m);
  return out;
}

LaurentPoly hl_classical(const VariableContext::Ptr& ctx, const Partition& lambda, int n) {
  const Partition lam = padded(trimmed(lambda), n);
  if (static_cast<int>(lam.size()) != n)
    throw BoundExceeded("partition longer than variable count");

  // Antisymmetrized form: sum_w sign(w) w( x^lambda prod_{i<j}(x_i - t x_j) )
  // equals P_lambda * v_lambda(t) * prod_{i<j}(x_i - x_j), all polynomial.
  ExpVec exps(ctx->size(), 0);
  for (int i = 0; i < n; ++i) exps[ctx->slot(Var::x(i + 1))] = lam[i];
  LaurentPoly dominant = LaurentPoly::monomial(ctx, Rational(1), exps);

  const LaurentPoly t_var = LaurentPoly::variable(ctx, Var::t());
  LaurentPoly weight_num = LaurentPoly::constant(ctx, Rational(1));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      weight_num = weight_num * (LaurentPoly::variable(ctx, Var::x(i)) -
                                 t_var * LaurentPoly::variable(ctx, Var::x(j)));

  const LaurentPoly base = dominant * weight_num;
  LaurentPoly sum = LaurentPoly::zero(ctx);
  for (const auto& w : symmetric_group(n)) {
    LaurentPoly img = base.permuted_x(w.perm);
    sum += w.sign > 0 ? img : -img;
  }

  LaurentPoly v_factor = LaurentPoly::constant(ctx, Rational(1));
  for (int m : part_multiplicities(lam, n)) v_factor = v_factor * bracket_factorial(ctx, m);

  return poly_exact_divide(sum, v_factor * difference_product(ctx, n));
}

std::pair<LaurentPoly, RationalFn> hl_from_cup(const VariableContext::Ptr& ctx,
                                               const Partition& lambda, int n) {
  const Partition lam = padded(trimmed(lambda), n);
  if (static_cast<int>(lam.size()) != n)
    throw BoundExceeded("partition longer than variable count");

  ExpVec exps(ctx->size(), 0);
  for (int i = 0; i < n; ++i) exps[ctx->slot(Var::x(i + 1))] = lam[n - 1 - i];
  const LaurentPoly increasing = LaurentPoly::monomial(ctx, Rational(1), exps);
  const LaurentPoly image = cup_omega(increasing, n);
  const LaurentPoly p = hl_classical(ctx, lambda, n);

  RationalFn k = RationalFn::quotient(image, p);
  k.reduce();
  const auto check_x_free = [&](const LaurentPoly& poly) {
    for (int i = 1; i <= n; ++i) {
      const int slot = ctx->slot(Var::x(i));
      if (poly.min_exponent(slot) != 0 || poly.max_exponent(slot) != 0) return false;
    }
    return true;
  };
  if (!check_x_free(k.numerator_poly()) || !check_x_free(k.denominator_poly()))
    throw NotProportional("summed t-weight image is not a scalar multiple");
  return {p, k};
}

}  // namespace gaudinlab
