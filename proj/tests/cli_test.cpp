#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cyclotorsion/cli.hpp"
#include "gtest/gtest.h"

namespace cyclotorsion {
namespace {

CycloNum z(long level, long k) { return CycloNum::zeta(level, k); }

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("cyclotorsion_" + name);
  std::ofstream(path) << text;
  return path.string();
}

TEST(Parser, ReferenceMatrix) {
  const MatrixFile mf = parse_matrix_file("order = 30\na = -z^7 - z^6 + z^2\nb = z^7 - z^2\nc = 1\nd = -z^6 - 1\n");
  EXPECT_EQ(mf.order, 30);
  EXPECT_EQ(mf.map(), fixtures::gamma1());
}

TEST(Parser, SeparatorsCommentsAndScalars) {
  const MatrixFile id = parse_matrix_file("order = 1; a = 1; b = 0; c = 0; d = 1");
  EXPECT_EQ(id.map(), MobiusMap::identity());
  const MatrixFile scalar = parse_matrix_file("# scalar\norder = 4 ; a = z ; b = 0 # none\nc = 0\nd = z\n");
  EXPECT_EQ(scalar.map(), MobiusMap::identity());
}

TEST(Parser, ExpressionForms) {
  EXPECT_EQ(parse_expression("-(z + 1/2)*2", 5), -(z(5, 1) * CycloNum(2)) - CycloNum(1));
  EXPECT_EQ(parse_expression("z^-1", 7), z(7, 6));
  EXPECT_EQ(parse_expression("z^31", 30), z(30, 1));
  EXPECT_EQ(parse_expression("--3", 1), CycloNum(3));
  Rational big(Integer("12345678901234567891"), Integer(6));
  big.canonicalize();
  EXPECT_EQ(parse_expression("12345678901234567891/6", 1), CycloNum(big));
}

TEST(Parser, ErrorsCarryLineAndColumn) {
  try {
    parse_matrix_file("order = 5\na = z +\nb = 1; c = 0; d = 1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 8);
  }
  try {
    parse_matrix_file("order = 5\na = 1; b = 2 $ 3\nc = 0; d = 1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 14);
  }
  EXPECT_THROW(parse_matrix_file("order = 5; a = z^99999999999999999999; b = 0; c = 0; d = 1"), ParseError);
  EXPECT_THROW(parse_matrix_file("order = 5; a = 1/0; b = 0; c = 0; d = 1"), ParseError);
  EXPECT_THROW(parse_matrix_file("order = 5; a = 1; b = 0; c = 0"), ParseError);
  EXPECT_THROW(parse_matrix_file("order = 0; a = 1; b = 0; c = 0; d = 1"), ParseError);
  EXPECT_THROW(parse_matrix_file("order = 5; e = 1"), ParseError);
  EXPECT_THROW(parse_matrix_file("order = 5; a = 1; b = 2; c = 2; d = 4"), DegenerateMap);
}

TEST(Parser, PrintedExpressionsRoundTrip) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5), level(1, 40);
  for (int iter = 0; iter < 300; ++iter) {
    const long n = level(rng);
    std::vector<Rational> c(euler_phi(n));
    for (auto& v : c) {
      v = Rational(num(rng), den(rng));
      v.canonicalize();
    }
    const CycloNum x = CycloNum::from_power_sum(n, c);
    EXPECT_EQ(parse_expression(x.to_string(), n), x) << x.to_string();
  }
  MatrixFile mf = parse_matrix_file("order = 60; a = z^3 - 1/2; b = z; c = 7; d = -z^59");
  EXPECT_EQ(parse_matrix_file(format_matrix_file(mf)).map(), mf.map());
}

TEST(Report, JsonRoundTripAndKeyOrder) {
  const auto r = cli::verify_example("s1");
  const OrderedJson j = to_json(r.doc);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"case", "conductor", "bound", "points", "distribution", "notes"}));
  EXPECT_EQ(report_from_json(OrderedJson::parse(j.dump())), r.doc);
  EXPECT_EQ(j["points"][0], OrderedJson::parse(R"({"n":1,"x":0,"y":0})"));
}

TEST(Cli, VerifyExamples) {
  const Outcome s1 = run({"verify-example", "s1"});
  EXPECT_EQ(s1.code, 0);
  EXPECT_NE(s1.out.find("14 points, match: OK"), std::string::npos);
  const Outcome s2 = run({"verify-example", "s2", "--threads", "3"});
  EXPECT_EQ(s2.code, 0);
  EXPECT_NE(s2.out.find("14 points, match: OK"), std::string::npos);
  EXPECT_EQ(run({"verify-example", "s3"}).code, 1);
}

TEST(Cli, JsonIsDeterministicAcrossRunsAndThreads) {
  const std::string g1 = write_temp("g1.txt", "order = 30\na = -z^7 - z^6 + z^2\nb = z^7 - z^2\nc = 1\nd = -z^6 - 1\n");
  const Outcome a = run({"distribute", g1, "--json"});
  const Outcome b = run({"--json", "--threads", "4", "distribute", g1});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"verify-example", "s2", "--json"}).out, run({"verify-example", "s2", "--json", "--threads", "5"}).out);
}

TEST(Cli, ExitCodes) {
  const std::string id = write_temp("id.txt", "order = 1; a = 1; b = 0; c = 0; d = 1");
  const Outcome inf = run({"enumerate", id});
  EXPECT_EQ(inf.code, 2);
  EXPECT_NE(inf.out.find("infinite"), std::string::npos);
  const std::string bad = write_temp("bad.txt", "order = 5\na = z +\n");
  const Outcome err = run({"enumerate", bad});
  EXPECT_EQ(err.code, 1);
  EXPECT_NE(err.err.find(":2:8:"), std::string::npos);
  EXPECT_EQ(run({"enumerate", "/nonexistent/file"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"oracle", id}).code, 1);  // --max-order is required
}

TEST(Cli, OtherSubcommands) {
  const std::string g1 = write_temp("g1r.txt", "order = 30\na = -z^7 - z^6 + z^2\nb = z^7 - z^2\nc = 1\nd = -z^6 - 1\n");
  const Outcome red = run({"reduce", g1});
  EXPECT_EQ(red.code, 0);
  const MatrixFile reduced = parse_matrix_file(red.out);
  EXPECT_EQ(reduced.order, 5);
  EXPECT_EQ(reduced.map(), fixtures::gamma1());

  const Outcome bound = run({"bound", g1, "--json"});
  EXPECT_EQ(OrderedJson::parse(bound.out)["bound"]["total"], 18);

  const Outcome poly = run({"polytope", g1, g1, "--json"});
  EXPECT_EQ(OrderedJson::parse(poly.out)["bound"], "2");

  const Outcome orc = run({"oracle", g1, "--max-order", "30", "--json"});
  EXPECT_EQ(OrderedJson::parse(orc.out)["points"].size(), 14u);

  const Outcome en = run({"enumerate", g1, "--translate-modulus", "120"});
  EXPECT_EQ(en.code, 0);
  EXPECT_NE(en.out.find("14 torsion points"), std::string::npos);
}

}  // namespace
}  // namespace cyclotorsion
