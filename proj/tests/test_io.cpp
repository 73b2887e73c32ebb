#include <filesystem>
#include <sstream>

#include "support.hpp"
#include "toric/io.hpp"
#include "toric/verify.hpp"

using namespace toric;

namespace {

const std::string kData = TORIC_DATA_DIR;

}  // namespace

TEST(Io, BundledFilesMatchBuiltins) {
  for (const auto& want : bundled_configurations()) {
    const auto got = load_config(kData + "/configs/" + want.name + ".json");
    EXPECT_EQ(got.name, want.name);
    EXPECT_EQ(got.field, want.field);
    EXPECT_EQ(got.config, want.config);
    EXPECT_EQ(got.graph.has_value(), want.graph.has_value());
  }
}

TEST(Io, ConfigRoundTrip) {
  for (const auto& c : bundled_configurations()) {
    const auto back = parse_config(config_to_json(c).dump());
    EXPECT_EQ(back.config, c.config);
    EXPECT_EQ(back.field, c.field);
    EXPECT_EQ(config_hash(back.config), config_hash(c.config));
  }
}

TEST(Io, GraphFilesAgree) {
  for (const char* name : {"k5", "triangle", "four_cycle", "two_triangles", "path4"}) {
    const auto a = load_graph(kData + "/graphs/" + name + ".json");
    const auto b = load_graph(kData + "/graphs/" + name + ".txt");
    EXPECT_EQ(a.n(), b.n()) << name;
    EXPECT_EQ(a.edges(), b.edges()) << name;
  }
  EXPECT_EQ(load_graph(kData + "/graphs/k5.txt").s(), 10u);
}

TEST(Io, ConfigWithoutGraph) {
  const auto c = parse_config(R"({"field": {"p": 7}, "exponents": [[1,0],[0,1],[-1,-1]]})");
  EXPECT_EQ(c.field, (FieldSpec{7, 1}));
  EXPECT_EQ(c.config.s(), 3u);
  EXPECT_FALSE(c.graph.has_value());
}

TEST(Io, ParseErrors) {
  EXPECT_TORIC_ERROR(parse_config("{"), ErrorCode::ParseError);
  EXPECT_TORIC_ERROR(parse_config(R"({"exponents": [[1]]})"), ErrorCode::ParseError);
  EXPECT_TORIC_ERROR(parse_config(R"({"field": {"p": 5}, "exponents": [[1,0],[1]]})"),
                     ErrorCode::ParseError);
  EXPECT_TORIC_ERROR(
      parse_config(R"({"field": {"p": 5}, "exponents": [[1,1,0]], "graph": {"n": 3, "edges": [[2,3]]}})"),
      ErrorCode::ParseError);
  EXPECT_TORIC_ERROR(parse_graph("1 2\n2\n"), ErrorCode::ParseError);
  EXPECT_TORIC_ERROR(parse_graph("1 2 3\n"), ErrorCode::ParseError);
  EXPECT_TORIC_ERROR(parse_graph("0 1\n"), ErrorCode::ParseError);
  EXPECT_TORIC_ERROR(parse_graph("1 2\n2 1\n"), ErrorCode::ParseError);
  EXPECT_TORIC_ERROR(parse_graph(R"({"n": 2, "edges": [[1,3]]})"), ErrorCode::ParseError);
  EXPECT_TORIC_ERROR(load_config("/nonexistent/x.json"), ErrorCode::ParseError);
  EXPECT_TORIC_ERROR(parse_field_spec("seven"), ErrorCode::ParseError);
}

TEST(Io, FieldSpec) {
  EXPECT_EQ(parse_field_spec("7"), (FieldSpec{7, 1}));
  EXPECT_EQ(parse_field_spec("2,3"), (FieldSpec{2, 3}));
  EXPECT_EQ(parse_field_spec("2,3").q(), 8u);
}

TEST(Io, TextGraphComments) {
  const auto g = parse_graph("# square\n1 2\n2 3  # middle\n\n3 4\n4 1\n");
  EXPECT_EQ(g.n(), 4u);
  EXPECT_EQ(g.s(), 4u);
}

TEST(Io, HashIsStableAndSensitive) {
  const auto a = incidence_configuration(Graph::cycle(4));
  EXPECT_EQ(config_hash(a), config_hash(incidence_configuration(Graph::cycle(4))));
  EXPECT_NE(config_hash(a), config_hash(incidence_configuration(Graph::path(4))));
  // FNV-1a of "1;1", computed by hand.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : std::string("1;1")) h = (h ^ ch) * 1099511628211ull;
  EXPECT_EQ(config_hash(PointConfiguration(1, std::vector<IntVec>{{1}})), h);
  EXPECT_EQ(hex64(0xabc).size(), 16u);
  const auto hdr = output_header({5, 1}, a);
  EXPECT_EQ(hdr["field"]["q"], 5);
  EXPECT_EQ(hdr["config_hash"], hex64(config_hash(a)));
}

TEST(Io, PointLogsOutput) {
  const auto f = FiniteField::make(5, 1);
  const auto T = projective_torus(f, 2);
  std::ostringstream os;
  write_point_logs(os, T);
  // Points (1,1), (1,2), (1,3), (1,4) with generator 2: 3 = 2^3, 4 = 2^2.
  ASSERT_EQ(f.generator(), 2u);
  EXPECT_EQ(os.str(), "0 0\n0 1\n0 3\n0 2\n");
}
