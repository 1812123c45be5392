#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "gaudinlab/render.hpp"

using namespace gaudinlab;

namespace {

// 2*x1*y1 - 1/2*t + 1 on a one-x one-y context.
LaurentPoly sample_poly() {
  auto ctx = VariableContext::make(1, 1);
  return LaurentPoly::variable(ctx, Var::x(1)) * LaurentPoly::variable(ctx, Var::y(1)) *
             LaurentPoly::constant(ctx, Rational(2)) +
         LaurentPoly::variable(ctx, Var::t()) * LaurentPoly::constant(ctx, Rational(-1, 2)) +
         LaurentPoly::constant(ctx, Rational(1));
}

VerificationReport sample_report() {
  VerificationReport rep;
  rep.identity = "hl-gen";
  rep.parameters = "n=2";
  rep.pass = true;
  rep.normalization = "(1-t)(1-t^2)";
  return rep;
}

}  // namespace

TEST_CASE("format names parse and reject") {
  CHECK(parse_format("text") == RenderFormat::Text);
  CHECK(parse_format("json") == RenderFormat::Json);
  CHECK(parse_format("latex") == RenderFormat::Latex);
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
  CHECK_THROWS_AS(parse_format(""), std::invalid_argument);
}

TEST_CASE("text rendering is the canonical compact form") {
  const auto p = sample_poly();
  CHECK(render_poly_text(p) == "2*x1*y1 - 1/2*t + 1");
  CHECK(render_poly_text(LaurentPoly::zero(p.context())) == "0");
}

TEST_CASE("json polynomial document") {
  const auto p = sample_poly();
  const std::string doc = render_poly_json(p, {{"n", 1}, {"r", 1}});

  // Byte-stable golden value; key order is the serializer's sorted order.
  CHECK(doc ==
        "{\"n\":1,\"poly\":\"2*x1*y1 - 1/2*t + 1\",\"r\":1,\"schema\":\"gaudinlab/1\","
        "\"terms\":[{\"coeff\":\"1/1\",\"exps\":[0,0,0,0]},"
        "{\"coeff\":\"-1/2\",\"exps\":[0,0,1,0]},"
        "{\"coeff\":\"2/1\",\"exps\":[1,1,0,0]}],"
        "\"vars\":[\"x1\",\"y1\",\"t\",\"q\"]}");

  // Structural round trip: terms sorted ascending by exponent vector, full
  // slot-length exponent rows, denominators always explicit.
  const auto j = nlohmann::json::parse(doc);
  CHECK(j["schema"] == "gaudinlab/1");
  CHECK(j["vars"].size() == 4);
  REQUIRE(j["terms"].size() == 3);
  CHECK(j["terms"][0]["exps"].size() == 4);
  CHECK(j["terms"][1]["coeff"] == "-1/2");
  CHECK(render_poly_json(p, {{"n", 1}, {"r", 1}}) == doc);
}

TEST_CASE("latex polynomial rendering") {
  const auto p = sample_poly();
  CHECK(render_poly_latex(p) == "2\\,x_{1}y_{1} - \\frac{1}{2}\\,t + 1");
  CHECK(render_poly_latex(LaurentPoly::zero(p.context())) == "0");

  auto ctx = VariableContext::make(2, 0);
  const auto m = LaurentPoly::variable(ctx, Var::x(2), 3) *
                 LaurentPoly::variable(ctx, Var::t(), -1);
  CHECK(render_poly_latex(m) == "x_{2}^{3}t^{-1}");
}

TEST_CASE("report serialization keeps optional fields optional") {
  auto rep = sample_report();
  CHECK(render_report_text(rep, 7) ==
        "suite: hl-gen\n"
        "params: n=2\n"
        "status: pass\n"
        "normalization: (1-t)(1-t^2)\n"
        "elapsed_ms: 7\n");
  CHECK(render_report_json(rep, 7) ==
        "{\"elapsed_ms\":7,\"normalization\":\"(1-t)(1-t^2)\",\"params\":\"n=2\","
        "\"schema\":\"gaudinlab/1\",\"status\":\"pass\",\"suite\":\"hl-gen\"}");

  rep.pass = false;
  rep.normalization.clear();
  rep.witness = "coefficient of x1*y1: 1 vs 2";
  const auto j = nlohmann::json::parse(render_report_json(rep, 3));
  CHECK(j["status"] == "fail");
  CHECK(!j.contains("normalization"));
  CHECK(j["witness"] == "coefficient of x1*y1: 1 vs 2");

  // Identical inputs give identical bytes; only elapsed_ms may vary.
  CHECK(render_report_json(rep, 3) == render_report_json(rep, 3));
  CHECK(render_report_json(rep, 3) != render_report_json(rep, 4));
}

TEST_CASE("latex reports state the identity in display notation") {
  const auto rep = sample_report();
  const std::string block = render_report_latex(rep, 5);
  CHECK(block.find("\\begin{aligned}") == 0);
  CHECK(block.find("\\tilde F_n(\\mathbf{x},\\mathbf{y})") != std::string::npos);
  CHECK(block.find("\\cup_\\omega") != std::string::npos);
  // Caret in the normalization text is escaped for \text{}.
  CHECK(block.find("(1-t\\^{}2)") != std::string::npos);
  CHECK(block.find("status: pass") != std::string::npos);

  VerificationReport fac;
  fac.identity = "factorise";
  fac.parameters = "pairs=50";
  fac.pass = true;
  const std::string fblock = render_report_latex(fac, 1);
  CHECK(fblock.find("S_{(j,\\beta^\\alpha)}(A-B)") != std::string::npos);
  CHECK(fblock.find("R(A,B)") != std::string::npos);
}
