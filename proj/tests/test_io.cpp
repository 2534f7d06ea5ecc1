#include <doctest.h>

#include "fixtures.hpp"
#include "hjrelax/corpus.hpp"
#include "hjrelax/io.hpp"

using namespace hjrelax;
using namespace hjrelax::fixtures;

TEST_CASE("spec parsing: minimal H-only document") {
  auto spec = parse_spec(R"({"hamiltonian": {"breakpoints": [[0, 0]],
                             "slope_left": -1, "slope_right": 1}})");
  REQUIRE(spec.hamiltonian.has_value());
  CHECK(*spec.hamiltonian == abs_h());
  CHECK(spec.hamiltonian->is_coercive());
  CHECK_FALSE(spec.boundary.has_value());
}

TEST_CASE("spec parsing: rational forms") {
  auto spec = parse_spec(R"({"hamiltonian": {"breakpoints": [["-5/4", "0.5"]],
                             "slope_left": "-2", "slope_right": 0.25}})");
  const auto& H = *spec.hamiltonian;
  CHECK(H.breakpoints()[0].x == r(-5, 4));
  CHECK(H.breakpoints()[0].y == r(1, 2));
  CHECK(H.slope_left() == r(-2));
  CHECK(H.slope_right() == r(1, 4));  // decimal literal converted exactly
}

TEST_CASE("spec parsing: rejects non-monotone boundary") {
  CHECK_THROWS_AS(parse_spec(R"({"hamiltonian": {"breakpoints": [[0,0]], "slope_left": -1,
                                  "slope_right": 1},
                                 "boundary": {"type": "dynamic", "f0": {"breakpoints": [[0,0]],
                                  "slope_left": -1, "slope_right": 1}}})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_spec(R"({"hamiltonian": {"breakpoints": [[0,0]], "slope_left": 1,
                                  "slope_right": 1}})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_spec("{"), ParseError);
  CHECK_THROWS_AS(parse_spec(R"({"boundary": {"type": "weird"}})"), ParseError);
}

TEST_CASE("W-shape + constant 1/2 loads the degenerate-example fixture") {
  auto spec = parse_spec(R"({
    "hamiltonian": {"breakpoints": [[-1,0],[0,1],[1,0]], "slope_left": -2, "slope_right": 2},
    "boundary": {"type": "dirichlet", "g": "1/2"}
  })");
  CHECK(*spec.hamiltonian == w_shape());
  REQUIRE(spec.boundary.has_value());
  CHECK(std::get<DirichletBC>(*spec.boundary).g == r(1, 2));
}

TEST_CASE("function csv layout") {
  std::string csv = function_csv(neg_part());
  CHECK(csv == "# slope_left=-1\nx,y,slope_after\n0,0,0\n");
  std::string w = function_csv(w_shape());
  CHECK(w == "# slope_left=-2\nx,y,slope_after\n-1,0,1\n0,1,-1\n1,0,2\n");
}

TEST_CASE("random pairs are deterministic and valid") {
  for (int i = 0; i < 200; ++i) {
    CorpusCase a = random_pair(5, i), b = random_pair(5, i);
    CHECK(a.H == b.H);
    CHECK(a.F0 == b.F0);
    CHECK(a.H.is_coercive());
    CHECK(a.F0.is_nonincreasing());
    CHECK(a.F0.is_semicoercive());
  }
}

TEST_CASE("every 50-case batch contains a tangential contact") {
  for (int batch = 0; batch < 4; ++batch) {
    int tangential = 0;
    for (int i = batch * 50; i < (batch + 1) * 50; ++i) {
      CorpusCase cs = random_pair(99, i);
      for (const auto& comp : zero_set(subtract(cs.H, cs.F0)))
        if (comp.lo < comp.hi) ++tangential;  // a shared segment, not a crossing
    }
    CHECK(tangential >= 1);
  }
}

TEST_CASE("report serialization carries replay data") {
  CorpusReport rep;
  rep.seed = 7;
  rep.cases = 1;
  rep.pass_counts = {{"sandwich", 1}};
  rep.failures.push_back({0, "sandwich", "detail", "H-repr", "F0-repr"});
  auto j = nlohmann::json::parse(corpus_report_json(rep));
  CHECK(j["seed"] == 7);
  CHECK(j["identities"]["sandwich"] == 1);
  CHECK(j["failures"][0]["H"] == "H-repr");
}

TEST_CASE("svg plot emits one polyline per function") {
  PLFunction R = neg_part();
  std::string svg = plot_svg(abs_h(), &R, &R);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);  // dashed boundary function
  CHECK(svg.find("#cc0000") != std::string::npos);           // highlighted relaxed condition
}
