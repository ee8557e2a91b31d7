#include "toriclab/io.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

using namespace toriclab;

TEST(Io, FanRoundTrip) {
  const Fan f(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
              {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, "p3");
  const Fan g = parse_fan(fan_to_json(f));
  EXPECT_TRUE(fans_equal(f, g));
  EXPECT_EQ(g.name(), "p3");
  EXPECT_EQ(fan_to_json(g), fan_to_json(f));
}

TEST(Io, ParserPrimitivisesAndKeepsScaling) {
  const Fan f = parse_fan(R"({"rank": 2, "rays": [[2, 4], [0, -3]], "max_cones": [[0, 1]]})");
  EXPECT_EQ(f.ray(0), (IntVector{1, 2}));
  EXPECT_EQ(f.ray_scaling(), (std::vector<Integer>{2, 3}));
}

TEST(Io, BigIntegersAsStrings) {
  const std::string big = "123456789012345678901234567890";
  const Fan f = parse_fan(R"({"rank": 2, "rays": [[")" + big + R"(", 1], [0, -1]], "max_cones": [[0], [1]]})");
  EXPECT_EQ(f.ray(0)[0], Integer(big));
  const Fan g = parse_fan(fan_to_json(f));
  EXPECT_EQ(g.ray(0)[0], Integer(big));
}

TEST(Io, FanErrors) {
  EXPECT_THROW(parse_fan("{"), InputError);
  EXPECT_THROW(parse_fan(R"({"rays": [[1]], "max_cones": [[0]]})"), InputError);
  EXPECT_THROW(parse_fan(R"({"rank": 1, "rays": [[1]], "max_cones": [[1]]})"), InputError);
  EXPECT_THROW(parse_fan(R"({"rank": 1, "rays": [[1.5]], "max_cones": [[0]]})"), InputError);
  EXPECT_THROW(parse_fan(R"({"rank": 1, "rays": [[1], [2]], "max_cones": [[0], [1]]})"), InputError);
  EXPECT_THROW(parse_fan(R"({"rank": -1, "rays": [], "max_cones": []})"), InputError);
  EXPECT_THROW(parse_fan(R"({"rank": 1, "rays": [["x"]], "max_cones": [[0]]})"), InputError);
  EXPECT_THROW(parse_fan(R"({"rank": 1, "rays": [[1]], "max_cones": [[0]], "name": 3})"), InputError);
  EXPECT_THROW(read_fan("/nonexistent/file.fan.json"), InputError);
}

TEST(Io, LatticeMapRoundTrip) {
  const LatticeMap m{IntMatrix{{0, 0, 0, 1, 0}, {0, 0, -1, 0, 1}}, "P"};
  const LatticeMap back = parse_lattice_map(lattice_map_to_json(m));
  EXPECT_EQ(back.matrix, m.matrix);
  EXPECT_EQ(back.name, "P");
}

TEST(Io, LatticeMapErrors) {
  EXPECT_THROW(parse_lattice_map(R"({"rows": 2, "cols": 1, "entries": [[1]]})"), InputError);
  EXPECT_THROW(parse_lattice_map(R"({"rows": 1, "cols": 2, "entries": [[1]]})"), InputError);
  EXPECT_THROW(parse_lattice_map(R"({"rows": 1, "cols": 1})"), InputError);
}

TEST(Io, KDivReportShape) {
  KDivReport r;
  r.k = 2;
  r.subset_size = 2;
  SubsetResult ok{{0, 1}, true, MonomialWitness{{0, 1}, {{1, 0}, {0, 1}}}, std::nullopt};
  SubsetResult bad{{1, 2}, false, std::nullopt,
                   InfeasibilityCertificate{{Rational(1), Rational(1, 2)}, {1, 1}, "a1 = -b1"}};
  r.subsets = {ok, bad};
  const auto doc = nlohmann::json::parse(kdiv_report_to_json(r));
  EXPECT_EQ(doc["subsets"][0]["status"], "feasible");
  EXPECT_EQ(doc["subsets"][0]["cones"], nlohmann::json({0, 1}));
  EXPECT_EQ(doc["subsets"][0]["witness"][1], nlohmann::json({0, 1}));
  EXPECT_EQ(doc["subsets"][1]["status"], "infeasible");
  EXPECT_EQ(doc["subsets"][1]["certificate"]["multipliers"][1], "1/2");
  EXPECT_EQ(doc["subsets"][1]["certificate"]["relation"], "a1 = -b1");
  EXPECT_EQ(doc["k_divisorial"], false);
}
