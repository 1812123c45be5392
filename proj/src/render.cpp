#include "gaudinlab/render.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace gaudinlab {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "gaudinlab/1";

// Fractions always carry the denominator so the representation is uniform;
// mpq keeps them canonical (positive denominator, lowest terms).
std::string coeff_string(const Rational& c) {
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// x12 -> x_{12}; the parameters t, q have no index.
std::string latex_name(const std::string& slot) {
  if (slot.size() <= 1) return slot;
  return slot.substr(0, 1) + "_{" + slot.substr(1) + "}";
}

std::string latex_magnitude(const Rational& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

// Witness and parameter strings go into \text{}; neutralize the characters
// TeX treats specially there.
std::string latex_escape_text(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    switch (ch) {
      case '\\': out += "\\textbackslash "; break;
      case '_': out += "\\_"; break;
      case '^': out += "\\^{}"; break;
      case '{': out += "\\{"; break;
      case '}': out += "\\}"; break;
      case '&': out += "\\&"; break;
      case '%': out += "\\%"; break;
      case '#': out += "\\#"; break;
      case '$': out += "\\$"; break;
      case '~': out += "\\textasciitilde "; break;
      default: out += ch; break;
    }
  }
  return out;
}

// The statement each suite certifies, in the display notation used
// throughout: S_v(A-B) multi-Schur functions, R(A,B) resultants, Delta for
// difference products, sigma for the kernel series.
std::string latex_statement(const std::string& suite) {
  if (suite == "theorem1")
    return "F_n^r(\\mathbf{x},\\mathbf{y}) = \\frac{\\det M}{\\Delta(\\mathbf{x})\\,"
           "\\Delta(\\mathbf{y})} = \\frac{\\det\\big(S_{(j,(n-1)^r)}\\big(y_i(1+t+\\cdots+t^r)"
           "-\\mathbf{x}\\big)\\big)}{\\Delta(\\mathbf{y})}";
  if (suite == "theorem2")
    return "F_n^r(\\xi,\\mathbf{y}) = \\frac{\\Delta(\\xi)}{\\Delta(\\mathbf{y})}"
           "\\prod_i S_{(n-1)^r}\\big(y_i(1+t+\\cdots+t^r)-\\xi\\big),\\quad"
           "\\xi\\subset\\{t^k y_i\\},\\ |\\xi|=n";
  if (suite == "theta")
    return "\\Big(f\\,R(\\mathbf{x},\\mathbf{y})\\prod_{k=1}^{n-1}(1-t^k\\theta^k)\\Big)"
           "\\cup_\\omega = \\kappa\\,\\big(f\\,x_2\\cdots x_n\\,\\partial_1\\cdots"
           "\\partial_{n-1}\\big)\\,F_n^1(\\mathbf{x},\\mathbf{y})";
  if (suite == "hecke")
    return "\\partial_i^2=0,\\quad \\partial_i\\partial_{i+1}\\partial_i="
           "\\partial_{i+1}\\partial_i\\partial_{i+1},\\quad T_i^2=(t-1)T_i+t,"
           "\\quad \\cup_i^2=(1+t)\\cup_i";
  if (suite == "factorise")
    return "S_{(j,\\beta^\\alpha)}(A-B) = (-1)^j e_j(B)\\,R(A,B),\\quad"
           "|A|=\\alpha,\\ |B|=\\beta";
  if (suite == "hl-gen")
    return "\\Big(\\prod_{i,j}\\frac{1-t\\,x_iy_j}{1-x_iy_j}\\Big)"
           "\\Big|_{\\tau_0}\\cup_\\omega = \\kappa\\,\\tilde F_n(\\mathbf{x},\\mathbf{y})"
           "\\prod_{i,j}\\frac{1}{1-x_iy_j}";
  if (suite == "fgmacdo")
    return "\\sigma[\\mathbf{x}\\mathbf{y}]\\big|_{\\tau_q}\\cup_\\omega = "
           "\\sigma_q[\\mathbf{x}\\mathbf{y}]\\cdot\\Big(\\sigma_{1-t}[\\mathbf{x}\\mathbf{y}]"
           "\\big|_{\\tau_0}\\cup_\\omega\\Big)";
  if (suite == "warnaar")
    return "\\sum_\\lambda b_\\lambda\\prod_{i=1}^n(1-q^{\\lambda_i}t^{n-i+1})\\,"
           "P_\\lambda(\\mathbf{x})P_\\lambda(\\mathbf{y}) = \\kappa\\,"
           "\\tilde F_n(\\mathbf{x},\\mathbf{y})\\,\\sigma[\\mathbf{x}\\mathbf{y}]\\,"
           "\\sigma_t[\\mathbf{x}\\mathbf{y}]";
  if (suite == "cauchy-qt")
    return "\\sum_\\lambda b_\\lambda P_\\lambda(\\mathbf{x})P_\\lambda(\\mathbf{y})"
           " = \\sigma[\\mathbf{x}\\mathbf{y}]";
  if (suite == "schubert")
    return "Y_v(y^{\\langle u\\rangle},\\mathbf{y})=0 \\iff u\\not\\supseteq v,"
           "\\qquad Y_v(\\mathbf{x},0)=S_v(\\mathbf{x})";
  if (suite == "odd-symmetry")
    return "\\frac{\\det\\big((x_i-y_j)\\prod_{j'\\neq j}(x_i^{r+2}-y_{j'}^{r+2})\\big)}"
           "{\\Delta(\\mathbf{x})\\,\\Delta(\\mathbf{y})\\,R(\\mathbf{x},\\mathbf{y})}"
           " = c\\,S_\\lambda(\\mathbf{x}+\\mathbf{y})";
  return "";
}

}  // namespace

RenderFormat parse_format(const std::string& name) {
  if (name == "text") return RenderFormat::Text;
  if (name == "json") return RenderFormat::Json;
  if (name == "latex") return RenderFormat::Latex;
  throw std::invalid_argument("unknown format: " + name + " (expected text, json, latex)");
}

std::string render_poly_text(const LaurentPoly& p) { return p.to_string(); }

std::string render_poly_json(const LaurentPoly& p,
                             const std::vector<std::pair<std::string, long long>>& extra) {
  const auto& ctx = p.context();
  json j;
  j["schema"] = kSchema;
  json vars = json::array();
  for (int s = 0; s < ctx->size(); ++s) vars.push_back(ctx->slot_name(s));
  j["vars"] = vars;
  j["poly"] = p.to_string();
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json term;
    term["coeff"] = coeff_string(c);
    term["exps"] = e;
    terms.push_back(term);
  }
  j["terms"] = terms;
  for (const auto& [key, value] : extra) j[key] = value;
  return j.dump();
}

std::string render_poly_latex(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  const auto& ctx = p.context();
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
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
      vars += latex_name(ctx->slot_name(static_cast<int>(s)));
      if (e[s] != 1) vars += "^{" + std::to_string(e[s]) + "}";
    }
    if (vars.empty()) {
      out << latex_magnitude(a);
    } else {
      if (a != 1) out << latex_magnitude(a) << "\\,";
      out << vars;
    }
  }
  return out.str();
}

std::string render_report_text(const VerificationReport& rep, long long elapsed_ms) {
  std::ostringstream out;
  out << "suite: " << rep.identity << "\n";
  out << "params: " << rep.parameters << "\n";
  out << "status: " << (rep.pass ? "pass" : "fail") << "\n";
  if (!rep.normalization.empty()) out << "normalization: " << rep.normalization << "\n";
  if (!rep.witness.empty()) out << "witness: " << rep.witness << "\n";
  out << "elapsed_ms: " << elapsed_ms << "\n";
  return out.str();
}

std::string render_report_json(const VerificationReport& rep, long long elapsed_ms) {
  json j;
  j["schema"] = kSchema;
  j["suite"] = rep.identity;
  j["params"] = rep.parameters;
  j["status"] = rep.pass ? "pass" : "fail";
  if (!rep.normalization.empty()) j["normalization"] = rep.normalization;
  if (!rep.witness.empty()) j["witness"] = rep.witness;
  j["elapsed_ms"] = elapsed_ms;
  return j.dump();
}

std::string render_report_latex(const VerificationReport& rep, long long elapsed_ms) {
  std::ostringstream out;
  out << "\\begin{aligned}\n";
  out << "&\\text{suite: " << latex_escape_text(rep.identity) << "}\\\\\n";
  const std::string stmt = latex_statement(rep.identity);
  if (!stmt.empty()) out << "&" << stmt << "\\\\\n";
  out << "&\\text{params: " << latex_escape_text(rep.parameters) << "}\\\\\n";
  if (!rep.normalization.empty())
    out << "&\\text{normalization: " << latex_escape_text(rep.normalization) << "}\\\\\n";
  if (!rep.witness.empty())
    out << "&\\text{witness: " << latex_escape_text(rep.witness) << "}\\\\\n";
  out << "&\\text{status: " << (rep.pass ? "pass" : "fail") << " ("
      << elapsed_ms << " ms)}\n";
  out << "\\end{aligned}";
  return out.str();
}

}  // namespace gaudinlab
