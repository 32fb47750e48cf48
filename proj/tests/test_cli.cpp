#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "jok/cli.hpp"
#include "jok/json_io.hpp"
#include "jok/orbits.hpp"
#include "jok/rng.hpp"
#include "test_util.hpp"

using namespace jok;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args,
               const std::string& stdin_text = "") {
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  const int code = cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(JsonIo, ElementRoundTrip) {
  Rng rng(3);
  for (const auto& a : testutil::desk_algebras()) {
    const Element x = testutil::random_element(a, rng);
    const json j = io::element_to_json(x);
    EXPECT_EQ(j.at("algebra").at("family").get<std::string>(),
              family_name(a->family));
    const json reparsed = json::parse(j.dump());
    const Element back = io::element_from_json(reparsed);
    EXPECT_EQ((back.coords - x.coords).norm(), 0.0);
    EXPECT_TRUE(same_algebra(*back.algebra, *a));
  }
}

TEST(JsonIo, UnknownFamilyRejected) {
  EXPECT_THROW(io::family_from_string("octonionic"), precondition_error);
  EXPECT_THROW(
      io::element_from_json(json::parse(R"({"coords":[1,2,3]})")),
      precondition_error);
}

TEST(Cli, ClassifyFromFile) {
  const auto a = make_algebra(Family::SymR, 3);
  const Element xi = orbit_representative(a, {2, 1});
  const std::string path =
      write_temp("xi21.json", io::element_to_json(xi).dump());
  const auto r =
      run_cli({"classify", "--algebra", "symR:3", "--in", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("signature"), json::array({2, 1}));
}

TEST(Cli, ClassifyFromStdin) {
  const auto a = make_algebra(Family::Spin, 5);
  const Element xi = orbit_representative(a, {1, 1});
  const auto r = run_cli({"classify"}, io::element_to_json(xi).dump());
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out).at("signature"), json::array({1, 1}));
}

TEST(Cli, AlgebraMismatchIsPreconditionError) {
  const auto a = make_algebra(Family::SymR, 3);
  const Element xi = orbit_representative(a, {1, 0});
  const auto r = run_cli({"classify", "--algebra", "symR:4"},
                         io::element_to_json(xi).dump());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("precondition"), std::string::npos);
}

TEST(Cli, MalformedJsonIsPreconditionError) {
  const auto r = run_cli({"classify"}, "this is not json");
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"no-such-command"}).code, 1);
  EXPECT_EQ(run_cli({"tensor"}).code, 1);  // missing required options
}

TEST(Cli, SpectralOutputShape) {
  const auto a = make_algebra(Family::HermC, 3);
  Rng rng(7);
  const Element x = testutil::random_element(a, rng);
  const auto r = run_cli({"spectral"}, io::element_to_json(x).dump());
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  for (const char* key :
       {"eigenvalues", "multiplicities", "idempotents", "warnings"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  // idempotents decode back to elements reconstructing x
  Element recon = zero_element(a);
  for (size_t i = 0; i < j.at("idempotents").size(); ++i) {
    recon = add(recon, scale(j.at("eigenvalues").at(i).get<double>(),
                             io::element_from_json(j.at("idempotents").at(i))));
  }
  EXPECT_LE((recon.coords - x.coords).norm(), 1e-8 * (1.0 + x.coords.norm()));
}

TEST(Cli, PeirceSystemAndComponents) {
  const auto a = make_algebra(Family::Albert, 3);
  const Element c = standard_frame(a).idempotents[0];
  const auto sys_run = run_cli({"peirce"}, io::element_to_json(c).dump());
  ASSERT_EQ(sys_run.code, 0) << sys_run.err;
  EXPECT_EQ(json::parse(sys_run.out).at("dims"), json::array({1, 16, 10}));

  Rng rng(11);
  const Element x = testutil::random_element(a, rng);
  const json in{{"c", io::element_to_json(c)}, {"x", io::element_to_json(x)}};
  const auto comp_run = run_cli({"peirce"}, in.dump());
  ASSERT_EQ(comp_run.code, 0) << comp_run.err;
  const json j = json::parse(comp_run.out);
  ASSERT_EQ(j.at("components").size(), 3u);
  Element total = zero_element(a);
  for (const auto& part : j.at("components"))
    total = add(total, io::element_from_json(part));
  EXPECT_LE((total.coords - x.coords).norm(), 1e-9);

  // non-idempotent c is a precondition error (exit 2)
  const json bad{{"c", io::element_to_json(x)}};
  EXPECT_EQ(run_cli({"peirce"}, bad.dump()).code, 2);
}

TEST(Cli, FrobeniusReport) {
  const auto a = make_algebra(Family::SymR, 4);
  const Element c = standard_frame(a).idempotents[0];
  const auto sys = peirce_system(c);
  Rng rng(13);
  const Element x = sys.E12.apply(testutil::random_element(a, rng));
  const json in{{"c", io::element_to_json(c)},
                {"x", io::element_to_json(x)},
                {"xprime", io::element_to_json(scale(-0.5, x))},
                {"t", 1.25}};
  const auto r = run_cli({"frobenius"}, in.dump());
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  for (const char* key : {"paper_triple", "oracle_triple", "discrepancy", "n_t"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_LT(j.at("discrepancy").at(0).get<double>(), 1e-9);
  EXPECT_LT(j.at("discrepancy").at(1).get<double>(), 1e-9);

  const json missing{{"c", io::element_to_json(c)}, {"t", 1.0}};
  EXPECT_EQ(run_cli({"frobenius"}, missing.dump()).code, 2);
}

TEST(Cli, TensorReport) {
  const auto r = run_cli(
      {"tensor", "--group", "E7", "--signatures", "1,0", "0,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("stable_range"), "equality");
  EXPECT_EQ(j.at("dual_space"), "F4(-20)/Spin(9)");
  EXPECT_EQ(j.at("total_signature"), json::array({1, 2}));
  EXPECT_FALSE(j.at("extension_unique").get<bool>());
}

TEST(Cli, TensorWithTheta) {
  const auto r = run_cli({"tensor", "--group", "sp:5", "--signatures", "1,0",
                          "0,1", "--pi", "sigma"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("stable_range"), "strict");
  EXPECT_TRUE(j.at("extension_unique").get<bool>());
  EXPECT_EQ(j.at("theta").at("inducing_chain").at("pi_label"), "sigma");
  const Element xi =
      io::element_from_json(j.at("theta").at("inducing_chain").at("xi"));
  EXPECT_EQ(classify_orbit(xi), (Signature{1, 1}));
}

TEST(Cli, TensorViolatedIsReportNotError) {
  const auto r = run_cli(
      {"tensor", "--group", "o2:5", "--signatures", "1,0", "1,0", "1,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("stable_range"), "violated");
  EXPECT_TRUE(j.at("dual_space").is_null());
  EXPECT_FALSE(j.at("notes").empty());
}

TEST(Cli, TableOutput) {
  const auto r = run_cli({"table"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_NE(j.at("groups_table").get<std::string>().find("Herm(3,O)"),
            std::string::npos);
  EXPECT_NE(j.at("xpq_table").get<std::string>().find("F4(-52)/Spin(9)"),
            std::string::npos);

  const auto pretty = run_cli({"table", "--pretty"});
  ASSERT_EQ(pretty.code, 0);
  EXPECT_NE(pretty.out.find("E7(-25)"), std::string::npos);
  EXPECT_EQ(pretty.out.find("{"), std::string::npos);
}

TEST(Cli, VerifySuiteRunsAndIsDeterministic) {
  const auto r1 = run_cli({"verify", "--suite", "octonion", "--seed", "7"});
  ASSERT_EQ(r1.code, 0) << r1.out;
  const auto r2 = run_cli({"verify", "--suite", "octonion", "--seed", "7"});
  EXPECT_EQ(r1.out, r2.out);
  const json j = json::parse(r1.out);
  EXPECT_EQ(j.at("failed").get<int>(), 0);

  const auto lam = run_cli({"verify", "--suite", "lambda", "--pretty"});
  ASSERT_EQ(lam.code, 0);
  EXPECT_NE(lam.out.find("all checks passed"), std::string::npos);

  EXPECT_EQ(run_cli({"verify", "--suite", "bogus"}).code, 2);
}

TEST(Cli, VerifyTablesAgainstGolden) {
  const auto r = run_cli(
      {"verify", "--suite", "tables", "--golden", JOK_GOLDEN_DIR});
  ASSERT_EQ(r.code, 0) << r.out;
}

TEST(Cli, VerifyListsSuites) {
  const auto r = run_cli({"verify", "--list"});
  ASSERT_EQ(r.code, 0);
  for (const auto& name : verify::suite_names()) {
    EXPECT_NE(r.out.find(name), std::string::npos) << name;
  }
}
