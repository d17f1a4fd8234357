#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include "algflow/serialization.hpp"
#include "test_support.hpp"

using namespace algflow;
using algflow::io::json;
using algflow::testing::random_tensor;

TEST_CASE("tensor round trip uses nested i -> j -> k arrays") {
  CubicTensor t(2);
  t(1, 0, 1) = 3.5;
  const json j = io::to_json(t);
  CHECK(j["dim"] == 2);
  CHECK(j["c"][1][0][1] == 3.5);
  CHECK(j["c"][0][1][1] == 0.0);
  CHECK(io::tensor_from_json(j) == t);

  std::mt19937_64 rng(51);
  for (int m = 1; m <= 4; ++m) {
    const auto q = random_tensor(rng, m);
    CHECK(io::tensor_from_json(json::parse(io::to_json(q).dump())) == q);
  }
}

TEST_CASE("algebra JSON accepts the 2x4 and the tensor form") {
  const Algebra a = flow_algebra(0.8);
  const json j = io::to_json(a);
  CHECK(j.contains("c2x4"));
  CHECK(io::algebra_from_json(j) == a);
  const json tensor_form = io::to_json(a.constants());
  CHECK(io::algebra_from_json(tensor_form) == a);

  const json a1 = json::parse(R"({"dim": 2, "c2x4": [[1, 1, 0, 0], [0, 0, 1, 1]]})");
  CHECK(io::algebra_from_json(a1) == flow_algebra(0.0));
}

TEST_CASE("malformed JSON is rejected") {
  const char* bad[] = {
      R"({"dim": 3, "c2x4": [[1, 1, 0, 0], [0, 0, 1, 1]]})",
      R"({"dim": 2, "c2x4": [[1, 1, 0], [0, 0, 1, 1]]})",
      R"({"dim": 2, "c2x4": [[1, 1, 0, "x"], [0, 0, 1, 1]]})",
      R"({"dim": 2, "c": [[[1, 0], [0, 1]], [[0, 1]]]})",
      R"({"dim": 0, "c": []})",
      R"({"dim": 2})",
      R"([1, 2, 3])",
  };
  for (const char* s : bad) CHECK_THROWS_AS(io::algebra_from_json(json::parse(s)), std::invalid_argument);
  CHECK_THROWS_AS(io::basis_change_from_json(json::parse("[[1, 2], [2, 4]]")), std::invalid_argument);
  CHECK_THROWS_AS(io::label_from_json(json::parse(R"({"class": "ACosPlus"})")), std::invalid_argument);
  CHECK_THROWS_AS(io::label_from_json(json::parse(R"({"class": "Nope"})")), std::invalid_argument);
  CHECK_THROWS_AS(io::bekbaev_from_json(json::parse(R"({"family": 5, "params": [1]})")), std::invalid_argument);
  CHECK_THROWS_AS(io::verdict_from_json(json::parse(R"({"kind": "Maybe"})")), std::invalid_argument);
}

TEST_CASE("verdict round trip") {
  const IsoVerdict v = rotation_iso(0.5, 0.5 + std::numbers::pi);
  const IsoVerdict back = io::verdict_from_json(json::parse(io::to_json(v).dump()));
  CHECK(back.kind == v.kind);
  CHECK(back.certificate->matrix() == v.certificate->matrix());
  CHECK(*back.residual == *v.residual);
  CHECK(back.trace == v.trace);

  const IsoVerdict no = rotation_iso(0.2, 0.3);
  const IsoVerdict no_back = io::verdict_from_json(io::to_json(no));
  CHECK(no_back.kind == VerdictKind::NotIsomorphicExact);
  CHECK(no_back.reason == no.reason);

  const json sep = io::to_json(IsoVerdict::separated_by("associative"));
  CHECK(sep["kind"] == "SeparatedByInvariant");
  CHECK(sep["reason"] == "associative");
}

TEST_CASE("label and form round trips") {
  for (const auto& label : {FlowClassLabel::a1(), FlowClassLabel::a0_plus(), FlowClassLabel::a2(),
                            FlowClassLabel::cos_plus(0.25), FlowClassLabel::cos_minus(0.75)}) {
    CHECK(io::label_from_json(io::to_json(label)) == label);
  }
  CHECK(io::to_json(FlowClassLabel::cos_plus(0.5)) == json::parse(R"({"class": "ACosPlus", "c": 0.5})"));
  const BekbaevForm f(2, {0.5, 0.0, -0.5});
  CHECK(io::bekbaev_from_json(io::to_json(f)) == f);
}

TEST_CASE("algebra files") {
  const auto path = std::filesystem::temp_directory_path() / "algflow_test_algebra.json";
  const Algebra a = flow_algebra(1.7);
  io::save_algebra(path, a);
  CHECK(io::load_algebra(path) == a);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(io::load_algebra(path), std::invalid_argument);

  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(io::load_algebra(path), std::invalid_argument);
  std::filesystem::remove(path);
}
