#include <catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "xent/errors.hpp"
#include "xent/sweep.hpp"

using xent::Boundary;
using xent::ChainSpec;
using xent::Spacing;

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("csv header is stable") {
  REQUIRE(std::string(xent::kSweepCsvHeader) ==
          "temperature,czz,cxx,v,z_re,z_im,e_hs,b_gbi,concurrence,is_ppt");
}

TEST_CASE("temperature grids") {
  const auto lin = xent::sweep_temperatures(0.5, 2.5, 5, Spacing::linear);
  REQUIRE(lin.size() == 5);
  REQUIRE(lin.front() == 0.5);
  REQUIRE(lin.back() == 2.5);
  REQUIRE(std::abs(lin[1] - 1.0) <= 1e-15);

  const auto geo = xent::sweep_temperatures(0.1, 10.0, 3, Spacing::geometric);
  REQUIRE(geo.size() == 3);
  REQUIRE(geo.front() == 0.1);
  REQUIRE(geo.back() == 10.0);
  REQUIRE(std::abs(geo[1] - 1.0) <= 1e-12);

  REQUIRE(xent::sweep_temperatures(0.7, 9.0, 1, Spacing::linear) == std::vector<double>{0.7});

  REQUIRE_THROWS_AS(xent::sweep_temperatures(0.0, 1.0, 5, Spacing::linear), xent::usage_error);
  REQUIRE_THROWS_AS(xent::sweep_temperatures(2.0, 1.0, 5, Spacing::linear), xent::usage_error);
  REQUIRE_THROWS_AS(xent::sweep_temperatures(0.5, 1.0, 0, Spacing::linear), xent::usage_error);
}

TEST_CASE("sweep rows satisfy the record invariants") {
  const ChainSpec spec{2, -1.0, Boundary::open, {0, 1}};
  const auto rows = xent::run_sweep(spec, 0.1, 2.0, 25, Spacing::linear);
  REQUIRE(rows.size() == 25);

  const double t_star = 0.910239226626837394;  // 1/ln 3
  double prev_t = 0.0;
  for (const auto& r : rows) {
    REQUIRE(r.temperature > prev_t);
    prev_t = r.temperature;
    REQUIRE(std::abs(r.e_hs - r.b_gbi) <= 1e-10);
    REQUIRE(std::abs(r.e_hs - r.concurrence) <= 1e-10);
    REQUIRE(r.is_ppt == (r.e_hs == 0.0));
    if (r.temperature < t_star - 1e-3) REQUIRE(r.e_hs > 0.0);
    if (r.temperature > t_star + 1e-3) REQUIRE(r.e_hs == 0.0);
    REQUIRE(std::abs(r.v - (0.25 + r.czz)) <= 1e-12);
    REQUIRE(std::abs(r.z_re - 2.0 * r.cxx) <= 1e-12);
    REQUIRE(r.z_im == 0.0);
  }
}

TEST_CASE("csv lines round trip at full precision") {
  const ChainSpec spec{3, -1.0, Boundary::periodic, {0, 1}};
  const auto rows = xent::run_sweep(spec, 0.2, 1.5, 7, Spacing::geometric);
  for (const auto& r : rows) {
    const auto fields = split_csv(xent::to_csv_line(r));
    REQUIRE(fields.size() == 10);
    REQUIRE(std::strtod(fields[0].c_str(), nullptr) == r.temperature);
    REQUIRE(std::strtod(fields[3].c_str(), nullptr) == r.v);
    REQUIRE(std::strtod(fields[4].c_str(), nullptr) == r.z_re);
    REQUIRE(std::strtod(fields[6].c_str(), nullptr) == r.e_hs);
    REQUIRE(fields[9] == (r.is_ppt ? "true" : "false"));
  }
}

TEST_CASE("sweep record json") {
  const ChainSpec spec{2, -1.0, Boundary::open, {0, 1}};
  const auto rows = xent::run_sweep(spec, 0.5, 0.5, 1, Spacing::linear);
  REQUIRE(rows.size() == 1);
  const nlohmann::json j = rows[0];
  REQUIRE(j.size() == 10);
  REQUIRE(j.at("temperature").get<double>() == 0.5);
  REQUIRE(j.at("is_ppt").is_boolean());
  REQUIRE(std::abs(j.at("e_hs").get<double>() - 0.42246918845518772) <= 1e-10);
}
