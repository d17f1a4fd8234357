#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "algflow/partition.hpp"
#include "algflow/serialization.hpp"

using namespace algflow;
using Kind = FlowClassLabel::Kind;
using std::numbers::pi;

TEST_CASE("short grid near zero") {
  const auto recs = partition_grid(0.1, 0.05);
  REQUIRE(recs.size() == 3);
  CHECK(recs[0].t == 0.0);
  CHECK(recs[0].label.kind() == Kind::A1);
  CHECK(recs[1].label.kind() == Kind::ACosPlus);
  CHECK(recs[2].label.kind() == Kind::ACosPlus);
  CHECK(recs[2].t == doctest::Approx(0.1));
}

TEST_CASE("step larger than t_max") {
  const auto recs = partition_grid(0.3, 1.0);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].t == 0.0);
  CHECK(recs[1].t == 0.3);
}

TEST_CASE("exceptional times are inserted exactly") {
  const auto recs = partition_grid(2 * pi, 0.01);
  const double expected[] = {0, pi / 2, 3 * pi / 4, pi, 3 * pi / 2, 7 * pi / 4, 2 * pi};
  for (double x : expected) {
    int hits = 0;
    for (const auto& r : recs) hits += r.t == x;
    CHECK(hits == 1);
  }
  for (std::size_t i = 1; i < recs.size(); ++i) CHECK(recs[i - 1].t < recs[i].t);

  // the class is constant between consecutive exceptional times and changes at each of them
  std::vector<double> changes;
  for (std::size_t i = 1; i < recs.size(); ++i) {
    if (recs[i].label.kind() != recs[i - 1].label.kind()) changes.push_back(recs[i].t);
  }
  const double boundary_after[] = {pi / 2, 3 * pi / 4, pi, 3 * pi / 2, 7 * pi / 4, 2 * pi};
  for (double b : boundary_after) {
    bool seen = false;
    for (double c : changes) seen = seen || c == b || (c > b && c - b < 0.0101);
    CHECK(seen);
  }
  for (double c : changes) {
    bool near = c < 0.0101;
    for (double b : boundary_after) near = near || c == b || (c > b && c - b < 0.0101);
    CHECK(near);
  }

  for (const auto& r : recs) {
    CHECK(r.commutative == (r.label.kind() == Kind::A2));
    CHECK(r.associative == (r.label.kind() == Kind::A1 || r.label.kind() == Kind::A2));
  }
}

TEST_CASE("invalid grids") {
  CHECK_THROWS_AS(partition_grid(0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(partition_grid(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(partition_grid(1.0, -0.1), std::invalid_argument);
}

TEST_CASE("CSV and JSON writers") {
  const auto recs = partition_grid(0.1, 0.05);
  std::ostringstream csv;
  write_partition_csv(csv, recs);
  CHECK(csv.str().rfind("t,class,param_c,commutative,associative\n0,A1,,false,true\n0.05,ACosPlus,", 0) == 0);

  std::ostringstream js;
  write_partition_json(js, recs);
  const auto arr = io::json::parse(js.str());
  REQUIRE(arr.size() == 3);
  CHECK(arr[0]["class"]["class"] == "A1");
  CHECK(arr[1]["class"]["c"] == doctest::Approx(std::cos(0.05)));
  CHECK(arr[2]["associative"] == false);

  std::ostringstream again;
  write_partition_csv(again, partition_grid(0.1, 0.05));
  CHECK(again.str() == csv.str());
}
