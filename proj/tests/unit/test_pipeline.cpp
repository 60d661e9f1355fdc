#include <doctest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"

using namespace galint;
using testing::G;
using testing::R;

namespace {

const Stage* stage(const Report& r, const std::string& name) {
  for (const Stage& s : r.stages)
    if (s.name == name) return &s;
  return nullptr;
}

std::string conclusion(const Report& r) { return r.verdict.value("conclusion", std::string()); }

SystemDesc doc(const char* text) { return load_system_text(text); }

}  // namespace

TEST_CASE("karabut generator and documents") {
  CHECK_THROWS_AS(karabut(4), InputError);
  CHECK_THROWS_AS(karabut(1), InputError);
  SystemDesc k5 = karabut_system(5);
  CHECK(k5.variables == karabut_variables(5));
  CHECK(k5.field == load_system_file(testing::data_path("karabut5.json")).field);
  CHECK(k5.integrals.size() == 2);

  for (int n : {3, 5, 7}) {
    CAPTURE(n);
    ojson j = karabut_document(n);
    SystemDesc back = load_system_text(j.dump());
    CHECK(back.field == karabut(n));
    Report r = run_pipeline(back, Scope::Verify);
    // two integrals suffice only in dimension three
    CHECK(conclusion(r) == (n == 3 ? "completely integrable structure verified" : "declared tensors verified"));
  }
}

TEST_CASE("three-dimensional document verifies completely") {
  Report r = run_pipeline(load_system_file(testing::data_path("karabut3.json")));
  for (const Stage& s : r.stages) CHECK(s.status == Status::Confirmed);
  REQUIRE(stage(r, "lax"));
  REQUIRE(stage(r, "hamiltonian_realization"));
  const Stage* ind = stage(r, "independence");
  REQUIRE(ind);
  CHECK(ind->data.at("independence") == "spot-checked");
  CHECK(ind->data.at("jacobian_rank") == 2);
  CHECK(conclusion(r) == "completely integrable structure verified");
}

TEST_CASE("five-dimensional document reaches case 4") {
  Report r = run_pipeline(load_system_file(testing::data_path("karabut5.json")));
  const Stage* ls = stage(r, "level_set");
  REQUIRE(ls);
  CHECK(ls->data.at("eliminated_index") == 3);
  CHECK(r.verdict.at("case") == "4");
  CHECK(r.verdict.at("galois_finding") == "non-solvable");
  CHECK(conclusion(r).find("no third independent meromorphic first integral") != std::string::npos);
  CHECK(r.verdict.at("independence") == "spot-checked");

  Report ve = run_pipeline(load_system_file(testing::data_path("karabut5.json")), Scope::Variational);
  CHECK(stage(ve, "kovacic") == nullptr);
  CHECK(conclusion(ve) == "reduction chain completed");
  CHECK(ve.verdict.contains("r"));
}

TEST_CASE("V4 and the planar example") {
  Report v4 = run_pipeline(load_system_file(testing::data_path("v4.json")));
  CHECK(v4.verdict.at("case") == "4");
  CHECK(conclusion(v4).find("no rational first integral") != std::string::npos);
  const Stage* sr = stage(v4, "scalar_reduction");
  REQUIRE(sr);
  CHECK(R(sr->data.at("r").get<std::string>(), "s") == R("3/(4*s^2)-1", "s"));

  Report e3 = run_pipeline(load_system_file(testing::data_path("e3_2d.json")));
  const Stage* g = stage(e3, "gradient_integral");
  REQUIRE(g);
  CHECK(g->data.at("constant_zero") == true);
  CHECK(e3.verdict.at("structural_solvability") == "triangular_solvable");
}

TEST_CASE("refuted integral halts the run") {
  Report r = run_pipeline(doc(R"({"variables": ["x1","x2","x3"], "field": ["x3-x2","x1-x3","x2-x1"],
                                  "integrals": ["x1"]})"));
  const Stage* s = stage(r, "first_integral");
  REQUIRE(s);
  CHECK(s->status == Status::Refuted);
  CHECK(conclusion(r).rfind("halted at stage first_integral", 0) == 0);
  CHECK(r.verdict.at("residual") == "-x2+x3");
  CHECK(stage(r, "solution") == nullptr);
}

TEST_CASE("refuted solution halts the run") {
  Report r = run_pipeline(doc(R"({"variables": ["x","y"], "field": ["y","-x"],
                                  "solution": {"param": "s", "components": ["s","0"], "sigma": "1"}})"));
  CHECK(stage(r, "solution")->status == Status::Refuted);
  CHECK(conclusion(r).rfind("halted at stage solution", 0) == 0);
}

TEST_CASE("divergence detection agrees with the multiplier check") {
  std::vector<const char*> fields{R"(["y","-x"])", R"(["x","y"])", R"(["x*y","-y^2-x+1"])", R"(["x^2","-2*x*y"])"};
  for (const char* f : fields) {
    CAPTURE(f);
    std::string text = std::string(R"({"variables": ["x","y"], "field": )") + f + "}";
    SystemDesc d = load_system_text(text);
    Report r = run_pipeline(d, Scope::Verify);
    const Stage* div = stage(r, "divergence");
    REQUIRE(div);
    bool free = check_multiplier(d.field, MRatFn(MPoly(2, GaussRat(1))), d.variables).confirmed();
    CHECK(div->data.at("divergence_free") == free);
  }
}

TEST_CASE("unsupported base field is inconclusive") {
  // scalar equation with r = (s-2)/(s^2-2)^2, whose b differs between the roots of s^2-2
  Report r = run_pipeline(doc(R"({"variables": ["x","y","z"], "field": ["y","z*x","z^2-2"],
      "solution": {"param": "s", "components": ["0","0","s"], "sigma": "s^2-2"},
      "reduction": {"subsystem_indices": [1,2]}})"));
  const Stage* sr = stage(r, "scalar_reduction");
  REQUIRE(sr);
  CHECK(R(sr->data.at("r").get<std::string>(), "s") == R("(s-2)/(s^2-2)^2", "s"));
  CHECK(conclusion(r).rfind("inconclusive: unsupported base field", 0) == 0);
}

TEST_CASE("subcase 1.3 on a reduction detects no obstruction") {
  Report r = run_pipeline(doc(R"({"variables": ["x","y","z"], "field": ["y","(z^2+1)*x","1"],
      "solution": {"param": "s", "components": ["0","0","s"], "sigma": "1"},
      "reduction": {"subsystem_indices": [1,2]}})"));
  const Stage* k = stage(r, "kovacic");
  REQUIRE(k);
  CHECK(r.verdict.at("abelian") == false);
  CHECK(conclusion(r).rfind("no obstruction detected", 0) == 0);
}

TEST_CASE("standalone reports") {
  Report k = kovacic_report(R("-1"), "t");
  CHECK(k.verdict.at("case") == "1");
  CHECK(k.verdict.at("subcase") == "1.1");
  Report poly = kovacic_report(R("t"), "t");
  CHECK(poly.verdict.at("case") == "4");

  Report kv = kovalevskaya_report(karabut_system(5), {G("-i"), G("-1"), G("1"), G("i"), G("0")});
  CHECK(kv.verdict.at("exponents_rational") == false);
  CHECK(kv.verdict.at("reconstruction_exact") == true);
  Report trivial = kovalevskaya_report(karabut_system(5), std::vector<GaussRat>(5));
  CHECK(trivial.verdict.at("conclusion") == "trivial balance, no exponents");
}

TEST_CASE("reports are deterministic") {
  SystemDesc d = load_system_file(testing::data_path("karabut5.json"));
  CHECK(emit_report(run_pipeline(d), Format::Json) == emit_report(run_pipeline(d), Format::Json));
}
