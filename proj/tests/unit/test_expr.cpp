#include <doctest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"

using namespace galint;
using testing::G;
using testing::R;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string load_error(const std::string& text) {
  try {
    load_system_text(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse_expr builds the expected tree") {
  Expr e = parse_expr("x3*x5 - x2*x4");
  CHECK(e->kind == ExprNode::Kind::Sub);
  CHECK(e->children[0]->kind == ExprNode::Kind::Mul);
  CHECK(identifiers(e) == std::vector<std::string>{"x3", "x5", "x2", "x4"});

  Expr d = parse_expr("(4-s^2)/(s^2+4)");
  CHECK(d->kind == ExprNode::Kind::Div);
  CHECK(to_ratfn(d, "s") == R("(4-s^2)/(s^2+4)", "s"));
}

TEST_CASE("precedence and unary minus") {
  CHECK(G("-2^2") == GaussRat(-4));
  CHECK(G("2^-2") == G("1/4"));
  CHECK(G("1 - 2 - 3") == GaussRat(-4));
  CHECK(G("12/2/3") == GaussRat(2));
  CHECK(G("(1+i)^2") == G("2*i"));
  CHECK(R("1/t^2").den().degree() == 2);
}

TEST_CASE("parse errors carry byte offsets") {
  auto offset_of = [](const std::string& text) -> long {
    try {
      parse_expr(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("x^y") == 2);
  CHECK(offset_of("x + $") == 4);
  CHECK(offset_of("(x + 1") == 6);
  CHECK(offset_of("x^65") == 2);
  CHECK(offset_of("x^2.5") >= 0);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("1 2") == 2);
}

TEST_CASE("lowering") {
  std::vector<std::string> v{"x", "y"};
  CHECK(parse_poly("x/2 + y", v) == parse_poly("1/2*x + y", v));
  CHECK_THROWS_AS(parse_poly("1/x", v), InputError);
  CHECK_THROWS_AS(parse_poly("z", v), InputError);
  CHECK_THROWS_AS(parse_poly("x/(y-y)", v), InputError);
  CHECK_THROWS_AS(parse_gauss("x"), InputError);
  CHECK_THROWS_AS(parse_ratfn("1/(t-t)", "t"), InputError);
  CHECK(parse_mratfn("1/(x*y)", v).den() == parse_poly("x*y", v));
}

TEST_CASE("load_system on the bundled documents") {
  SystemDesc k5 = load_system_file(testing::data_path("karabut5.json"));
  CHECK(k5.dimension() == 5);
  CHECK(k5.integrals.size() == 2);
  REQUIRE(k5.solution);
  CHECK(k5.solution->param == "s");
  REQUIRE(k5.reduction);
  CHECK(k5.reduction->subsystem_indices == std::vector<size_t>{0, 1, 2});
  CHECK(k5.reduction->level_set_index == 0u);

  SystemDesc k3 = load_system_file(testing::data_path("karabut3.json"));
  REQUIRE(k3.lax);
  CHECK(k3.lax->L.size() == 3);
  CHECK(k3.lax->N[0][1] == parse_poly("-1 - x3", k3.variables));
}

TEST_CASE("load_system errors name the offending path") {
  CHECK(load_error(R"({"variables": ["x","y","z"], "field": ["x","y"]})").rfind("field: dimension mismatch", 0) == 0);
  CHECK(load_error(R"({"variables": ["x"], "field": ["y"]})").rfind("field[0]:", 0) == 0);
  CHECK(load_error(R"({"variables": ["x"]})").rfind("field:", 0) == 0);
  CHECK(load_error(R"({"variables": ["x"], "field": ["x"], "extra": 1})").rfind("extra: unknown key", 0) == 0);
  CHECK(load_error(R"({"variables": ["x"], "field": ["x"], "solution": {"param": "s", "components": ["s"], "sigma": "0"}})")
            .rfind("solution.sigma", 0) == 0);
  CHECK(load_error(R"({"variables": ["x"], "field": ["x"], "reduction": {"subsystem_indices": [2]}})")
            .rfind("reduction.subsystem_indices[0]", 0) == 0);
  CHECK(load_error(R"({"variables": ["x", "x"], "field": ["x", "x"]})").rfind("variables[1]", 0) == 0);
  CHECK(load_error("{not json").rfind("document", 0) == 0);
  CHECK(load_error(R"({"variables": ["x"], "field": ["x"], "lax": {"L": [["x"]]}})").rfind("lax", 0) == 0);
}

TEST_CASE("reports round-trip through JSON") {
  Report rep = run_pipeline(load_system_file(testing::data_path("karabut3.json")), Scope::Verify);
  std::string once = emit_report(rep, Format::Json);
  std::string twice = emit_report(report_from_json(ojson::parse(once)), Format::Json);
  CHECK(once == twice);

  Report empty;
  ojson j = ojson::parse(emit_report(empty, Format::Json));
  CHECK(j["stages"].empty());
}

TEST_CASE("text reports") {
  Report rep = kovacic_report(R("3/(4*t^2) - 1"), "t");
  std::string text = emit_report(rep, Format::Text);
  CHECK(text.find("case: 4") != std::string::npos);
  CHECK(text.find("identity_component: SL(2,C)") != std::string::npos);
  CHECK(text.find("solvable: false") != std::string::npos);

  Report verify = run_pipeline(load_system_file(testing::data_path("karabut3.json")), Scope::Verify);
  std::string vt = emit_report(verify, Format::Text);
  CHECK(vt.find("stage first_integral: confirmed\n  index: 1") != std::string::npos);
  CHECK(vt.find("stage first_integral: confirmed\n  index: 2") != std::string::npos);
}

TEST_CASE("bundled documents parse") {
  for (const char* name : {"karabut3.json", "karabut5.json", "v4.json", "stf_beta0.json", "stf_beta1.json", "e3_2d.json"}) {
    CAPTURE(name);
    CHECK_NOTHROW(load_system_text(read_file(testing::data_path(name))));
  }
}
