#include <cstdlib>
#include <fstream>

#include "doctest.h"
#include "syzygy/errors.hpp"
#include "syzygy/harness.hpp"
#include "syzygy/models/hyperelliptic.hpp"
#include "syzygy/models/model_io.hpp"
#include "syzygy/models/scroll.hpp"

using namespace syz;
using nlohmann::json;

TEST_CASE("model descriptors") {
  PrimeField f(31991);
  auto h = model_from_json(json::parse(R"({"type":"hyperelliptic","f":[1,0,0,0,0,1]})"), f);
  CHECK(h->genus() == 2);
  CHECK(h->describe()["f"] == json::parse("[1,0,0,0,0,1]"));
  auto r = model_from_json(json::parse(R"({"type":"hyperelliptic","h":3,"seed":4})"), f);
  auto r2 = model_from_json(json::parse(R"({"type":"hyperelliptic","h":3,"seed":4})"), f);
  CHECK(r->describe() == r2->describe());
  auto w = model_from_json(json::parse(R"({"type":"hyperelliptic","h":2,"seed":4,"with_root":true})"), f);
  CHECK(!dynamic_cast<const HyperellipticModel&>(*w).weierstrass_points().empty());
  auto s = model_from_json(json::parse(R"({"type":"hirzebruch","e":0,"class":[3,4],"seed":1})"), f);
  CHECK(s->genus() == 6);
  CHECK(s->describe()["type"] == "hirzebruch");
  auto ci = model_from_json(json::parse(R"({"type":"scroll_curve","e":[2,2,2],"classes":[[2,-2],[2,-2]],"seed":3})"), f);
  CHECK(ci->genus() == 9);
  CHECK(ci->canonical_class() == DivisorClass{1, 0});
  CHECK_THROWS_AS(model_from_json(json::parse(R"({"type":"plane"})"), f), InputError);
  CHECK_THROWS_AS(model_from_json(json::parse(R"({"type":"hirzebruch","e":0})"), f), InputError);
  CHECK_THROWS_AS(model_from_json(json::parse(R"({"type":"hyperelliptic","f":[0,0,1]})"), f), InputError);
}

TEST_CASE("bundle specifications") {
  PrimeField f(31991);
  Rng rng(2);
  auto C = std::make_shared<HyperellipticModel>(HyperellipticModel::random(f, 3, rng));
  const NamedPoints pts = points_from_json(*C, json::parse(R"({"a":"random","b":{"conjugate_of":"a"},"c":"random"})"), rng);
  CHECK(pts.at("b") == C->conjugate(pts.at("a")));
  CHECK(pts.at("c").x != pts.at("a").x);

  CHECK(bundle_from_json(*C, json::parse(R"({"canonical":2,"pencil":1})"), pts, rng).cls == DivisorClass{10});
  // A^2(a + b + c) = 4A - c'
  const Bundle plus = bundle_from_json(*C, json::parse(R"({"pencil":2,"plus":["a","b","c"]})"), pts, rng);
  CHECK(plus.cls == DivisorClass{8});
  CHECK(plus.points.size() == 1);
  CHECK(plus.multiplicity(C->conjugate(pts.at("c"))) == 1);
  CHECK(C->degree(plus) == 7);
  const Bundle minus = bundle_from_json(*C, json::parse(R"({"class":[9],"minus":{"a":2},"random_points":2})"), pts, rng);
  CHECK(C->degree(minus) == 5);
  CHECK(minus.multiplicity(pts.at("a")) == 2);
  CHECK_THROWS_AS(bundle_from_json(*C, json::parse(R"({"class":[4],"minus":{"z":1}})"), pts, rng), InputError);
  CHECK_THROWS_AS(points_from_json(*C, json::parse(R"({"a":[1,1]})"), rng), InputError);

  auto H = ScrollCurveModel::hirzebruch(f, 1, 3, 6, 7);
  CHECK(bundle_from_json(*H, json::parse(R"({"surface_class":[2,3]})"), {}, rng).cls ==
        ScrollCurveModel::hirzebruch_class(1, 2, 3));
  CHECK_THROWS_AS(bundle_from_json(*H, json::parse(R"({"pencil":1,"plus":["a"]})"), pts, rng), InputError);
}

TEST_CASE("modulus precedence") {
  const json file = json::parse(R"({"p":101})");
  CHECK(resolve_modulus(7, file) == 7);
  CHECK(resolve_modulus(std::nullopt, file) == 101);
  CHECK(resolve_modulus(std::nullopt, json::object()) == default_modulus());
  CHECK_THROWS_AS(read_json_file("/nonexistent/model.json"), InputError);
}

TEST_CASE("records and verdicts") {
  ExperimentRecord r;
  r.command = "x";
  r.modulus = 31991;
  r.seed = 4;
  r.wall_time = 12.5;
  CHECK(r.exit_code() == kExitPass);
  r.checks.push_back({"a", "claim", 1, Verdict::ExpectedExcess});
  CHECK(r.exit_code() == kExitPass);
  r.checks.push_back({"b", "claim", 1, Verdict::Indeterminate});
  CHECK(r.exit_code() == kExitIndeterminate);
  r.checks.push_back({"c", "claim", 1, Verdict::Fail});
  CHECK(r.exit_code() == kExitFail);
  CHECK(r.to_json().dump().find("12.5") == std::string::npos);
  const std::string lines = r.verdict_lines();
  std::size_t count = 0;
  for (std::size_t pos = 0; (pos = lines.find("modulus=31991 seed=4", pos)) != std::string::npos; ++pos) ++count;
  CHECK(count == 4);
}

TEST_CASE("balanced invariants") {
  CHECK(balanced_invariants(5, 4) == std::vector<int>{1, 1, 1, 2});
  CHECK(balanced_invariants(6, 3) == std::vector<int>{2, 2, 2});
  CHECK(balanced_invariants(7, 3) == std::vector<int>{2, 2, 3});
  CHECK_THROWS_AS(balanced_invariants(3, 0), InputError);
}

TEST_CASE("command preconditions") {
  SchreyerOptions s;
  s.g = 4;
  s.k = 3;
  CHECK_THROWS_AS(cmd_check_schreyer(s), InputError);
  s.g = 11;
  s.k = 5;
  CHECK_THROWS_AS(cmd_check_schreyer(s), IndeterminateError);
  GonalityOptions g;
  g.g = 6;
  g.k = 4;
  CHECK_THROWS_AS(cmd_check_gonality(g), IndeterminateError);
  ENOptions e;
  CHECK_THROWS_AS(cmd_en(e), InputError);
}

TEST_CASE("gonality check below the bound makes no prediction") {
  GonalityOptions g;
  g.g = 3;
  g.k = 2;
  g.degree = 6;
  const auto r = cmd_check_gonality(g);
  CHECK(r.checks.front().verdict == Verdict::Indeterminate);
  CHECK(r.exit_code() == kExitIndeterminate);
}
