#ifndef GAUDINLAB_RENDER_HPP
#define GAUDINLAB_RENDER_HPP

#include <string>

#include "gaudinlab/euler_poincare.hpp"
#include "gaudinlab/polynomial.hpp"

namespace gaudinlab {

// Serialization of polynomials and verification reports. Every emitter is a
// pure function of its arguments, so two runs with the same inputs produce
// byte-identical output; elapsed_ms is the only field callers are expected
// to vary between runs.

enum class RenderFormat { Text, Json, Latex };

// Accepts "text", "json", "latex"; anything else throws std::invalid_argument.
RenderFormat parse_format(const std::string& name);

// Canonical compact form, identical to LaurentPoly::to_string.
std::string render_poly_text(const LaurentPoly& p);

// JSON document with a top-level "schema" tag. "vars" lists the slot names
// in context order (x1..xn, y1..yn, t, q); "terms" is sorted ascending by
// exponent vector under that order, each entry {"coeff":"num/den",
// "exps":[..]} with the full-length exponent vector. "poly" repeats the
// compact text form for human diffing. Extra key/value pairs supplied by the
// caller (sizes, suite parameters) are merged at top level.
std::string render_poly_json(const LaurentPoly& p,
                             const std::vector<std::pair<std::string, long long>>& extra);

// One inline formula: fractions as \frac, slot names as subscripted letters
// (x3 -> x_{3}), exponents braced.
std::string render_poly_latex(const LaurentPoly& p);

std::string render_report_text(const VerificationReport& rep, long long elapsed_ms);
// {"schema", "suite", "params", "status", "normalization"?, "witness"?,
//  "elapsed_ms"} -- optional keys appear only when nonempty.
std::string render_report_json(const VerificationReport& rep, long long elapsed_ms);
// Statement of the identity in the source notation (S_v(A-B), R(A,B), Delta)
// followed by the verdict, as a small LaTeX block.
std::string render_report_latex(const VerificationReport& rep, long long elapsed_ms);

}  // namespace gaudinlab

#endif
