#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "blackwell/blackwell_order.hpp"
#include "blackwell/cli.hpp"
#include "blackwell/error.hpp"
#include "blackwell/fixtures.hpp"
#include "blackwell/io.hpp"
#include "oracles.hpp"

using namespace blackwell;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("bw_test_" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& body = "") const {
    auto p = (path_ / name).string();
    if (!body.empty()) std::ofstream(p) << body;
    return p;
  }

 private:
  fs::path path_;
};

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST(ParseNumber, Forms) {
  EXPECT_EQ(parse_number("0.25"), 0.25);
  EXPECT_EQ(parse_number("1e-3"), 1e-3);
  EXPECT_EQ(parse_number("1/3"), 1.0 / 3.0);
  EXPECT_EQ(parse_number("7/16"), 7.0 / 16.0);
  EXPECT_TRUE(std::isinf(parse_number("inf")));
  EXPECT_EQ(parse_number(" 2 "), 2.0);
  for (const char* bad : {"", "abc", "1/0", "1/", "0.5x", "1/3/4"}) {
    try {
      parse_number(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
  EXPECT_EQ(parse_json_number(nlohmann::json(0.5)), 0.5);
  EXPECT_EQ(parse_json_number(nlohmann::json("2/5")), 0.4);
}

TEST(ExperimentJson, RoundTripIsBitExact) {
  std::mt19937_64 rng(91);
  TempDir dir;
  for (int trial = 0; trial < 50; ++trial) {
    auto e = oracle::random_exp(rng, 2 + trial % 5);
    auto p = make_experiment(e.p0, e.p1);
    auto path = dir.file("e.json");
    write_experiment(path, p);
    auto back = read_experiment(path);
    ASSERT_EQ(back.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      EXPECT_EQ(std::memcmp(&back.p0()[i], &p.p0()[i], sizeof(double)), 0);
      EXPECT_EQ(std::memcmp(&back.p1()[i], &p.p1()[i], sizeof(double)), 0);
      EXPECT_EQ(back.outcomes()[i], p.outcomes()[i]);
    }
  }
}

TEST(ExperimentJson, RationalsAndDefaults) {
  auto doc = nlohmann::json::parse(R"({"p0": ["1/3", "2/3"], "p1": [0.5, 0.5]})");
  auto p = experiment_from_json(doc);
  EXPECT_EQ(p.p0()[0], 1.0 / 3.0);
  EXPECT_EQ(p.outcomes()[1], "x2");
  auto bad = nlohmann::json::parse(R"({"p0": [0.5, 0.5]})");
  EXPECT_THROW(experiment_from_json(bad), Error);
}

TEST(SpecJson, InfiniteOrder) {
  auto s = spec_from_json(nlohmann::json::parse(R"({"m0": [["inf", 0.5], [2, 1]], "m1": []})"));
  ASSERT_EQ(s.m0().size(), 2u);
  EXPECT_TRUE(std::isinf(s.m0()[0].t));
  EXPECT_EQ(s.m0()[1].weight, 1.0);
}

TEST(PmfJson, BothShapes) {
  EXPECT_EQ(pmf_from_json(nlohmann::json::parse("[0.5, 0.5]")).size(), 2u);
  EXPECT_EQ(pmf_from_json(nlohmann::json::parse(R"({"probs": ["1/4", "3/4"]})")).probs()[0], 0.25);
}

TEST(MultiStateJson, Shape) {
  auto m = multistate_from_json(nlohmann::json::parse(R"({"states": 3, "probs": [[0.5, 0.5], [0.2, 0.8], [0.9, 0.1]]})"));
  EXPECT_EQ(m.states(), 3u);
  EXPECT_THROW(multistate_from_json(nlohmann::json::parse("[1, 2]")), Error);
  EXPECT_THROW(multistate_from_json(nlohmann::json::parse(R"({"states": 2, "probs": [[0.5, 0.5], [0.2, 0.8], [0.9, 0.1]]})")), Error);
}

TEST(Config, Validation) {
  Config c;
  EXPECT_NO_THROW(c.validate());
  c.tol = 0.1;
  EXPECT_THROW(c.validate(), Error);
  c = Config{};
  c.grid_points = 2;
  EXPECT_THROW(c.validate(), Error);
  c = Config{};
  c.n_cap = 0;
  EXPECT_THROW(c.validate(), Error);
}

TEST(Fixtures, NamesAndDefaults) {
  for (const auto& n : fixture_names()) EXPECT_NO_THROW(load_fixture(n)) << n;
  auto az = parse_fixture("azrieli(0.305, 0.1)");
  EXPECT_NEAR(az.p.p0()[0], 0.1, 1e-15);
  EXPECT_NEAR(az.q.p0()[0], 0.305, 1e-15);
  EXPECT_NEAR(az.q.p1()[0], 0.695, 1e-15);
  try {
    load_fixture("nope");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownFixture);
  }
  try {
    eventualfail(1e-3);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroEntry);
  }
  EXPECT_NEAR(azrieli_margin(0.305, 0.1), std::sqrt(0.305 * 0.695) - 0.2 - 0.25, 1e-15);
}

TEST(Cli, CompareThresholdGarblingIsEquivalent) {
  TempDir dir;
  std::vector<std::vector<double>> m(1000);
  for (int i = 0; i < 1000; ++i) m[i] = i < 500 ? std::vector<double>{1, 0} : std::vector<double>{0, 1};
  auto p = dir.file("p.json"), q = dir.file("q.json");
  write_experiment(p, garble(example1().p, Garbling(m)));
  write_experiment(q, example1_q(0.625));
  auto r = cli({"compare", p, q});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(first_line(r.out), "Equivalent");
  auto x = cli({"compare", p, q, "--cross-validate"});
  EXPECT_EQ(x.code, kExitOk) << x.err;
}

TEST(Cli, NegativeVerdictsExitOne) {
  EXPECT_EQ(cli({"compare", "--fixture", "footnote3", "--mode", "renyi"}).code, kExitNegative);
  auto b = cli({"compare", "--fixture", "footnote3"});
  EXPECT_EQ(b.code, kExitNegative);
  EXPECT_EQ(first_line(b.out), "Incomparable");
}

TEST(Cli, UsageAndInputErrorsExitTwo) {
  EXPECT_EQ(cli({}).code, kExitInput);
  EXPECT_EQ(cli({"compare"}).code, kExitInput);
  EXPECT_EQ(cli({"nonsense"}).code, kExitInput);
  EXPECT_EQ(cli({"compare", "/no/such/file.json", "/no/such/other.json"}).code, kExitInput);
  EXPECT_EQ(cli({"--tol", "0.5", "paper-suite"}).code, kExitInput);
  TempDir dir;
  auto bad = dir.file("bad.json", R"({"outcomes": ["a", "a"], "p0": [0.5, 0.5], "p1": [0.2, 0.8]})");
  auto r = cli({"validate", bad});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("DuplicateLabel"), std::string::npos) << r.err;
}

TEST(Cli, ValidateAcceptsGoodFile) {
  TempDir dir;
  auto good = dir.file("good.json", R"({"p0": [0.5, 0.5], "p1": ["1/4", "3/4"]})");
  EXPECT_EQ(cli({"validate", good}).code, kExitOk);
}

TEST(Cli, SuiteIsDeterministicAndPasses) {
  auto a = cli({"paper-suite"}), b = cli({"paper-suite"});
  EXPECT_EQ(a.code, kExitOk) << a.out;
  EXPECT_EQ(a.out, b.out);
  for (const auto& row : fixture_suite()) EXPECT_TRUE(row.passed) << row.name << " " << row.detail;
}

TEST(Cli, PlotDataHeader) {
  auto r = cli({"plot-data", "--example1", "--p", "0.63"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(first_line(r.out), "t,R_P_theta0,R_Q_theta0,R_P_theta1,R_Q_theta1");
  EXPECT_NE(r.out.find("\ninf,"), std::string::npos);
}

TEST(Cli, FixtureWritesBothExperiments) {
  TempDir dir;
  auto p = dir.file("fp.json"), q = dir.file("fq.json");
  EXPECT_EQ(cli({"fixture", "azrieli(0.25,1/16)", "--out-p", p, "--out-q", q}).code, kExitOk);
  auto f = azrieli(0.25, 1.0 / 16.0);
  EXPECT_EQ(blackwell_dominates(read_experiment(p), f.p).verdict, BlackwellVerdict::Equivalent);
  EXPECT_EQ(blackwell_dominates(read_experiment(q), f.q).verdict, BlackwellVerdict::Equivalent);
  auto ls = cli({"--n-cap", "6", "large-sample", p, q});
  EXPECT_EQ(ls.code, kExitOk) << ls.err;
  EXPECT_NE(ls.out.find("minimal n: 4"), std::string::npos) << ls.out;
}

TEST(Cli, CatalystAndPower) {
  TempDir dir;
  auto r = dir.file("r.json");
  auto c = cli({"catalyst", "--fixture", "azrieli(0.305,0.1)", "-n", "2", "--out", r});
  EXPECT_EQ(c.code, kExitOk) << c.err;
  EXPECT_NE(c.out.find("P x R vs Q x R: Dominates"), std::string::npos) << c.out;
  EXPECT_TRUE(fs::exists(r));
  EXPECT_EQ(cli({"catalyst", "--fixture", "azrieli(0.305,0.1)", "-n", "1"}).code, kExitNegative);
  auto p = dir.file("s.json");
  write_experiment(p, symmetric_binary(0.8));
  auto pw = cli({"power", p, "-n", "2"});
  EXPECT_EQ(pw.code, kExitOk) << pw.err;
  EXPECT_EQ(first_line(pw.out), "value,prob");
}

TEST(Cli, DivergenceAndMajorize) {
  TempDir dir;
  auto spec = dir.file("spec.json", R"({"m0": [[1, 1]], "m1": []})");
  auto e = dir.file("e.json", R"({"p0": ["1/3", "2/3"], "p1": ["2/3", "1/3"]})");
  auto d = cli({"divergence", spec, e});
  EXPECT_EQ(d.code, kExitOk) << d.err;
  EXPECT_NEAR(std::stod(d.out), std::log(2.0) / 3.0, 1e-12);
  auto mu = dir.file("mu.json", "[0.6, 0.3, 0.1]"), nu = dir.file("nu.json", "[0.4, 0.35, 0.25]");
  EXPECT_EQ(cli({"majorize", mu, nu}).code, kExitOk);
  EXPECT_EQ(cli({"majorize", nu, mu}).code, kExitNegative);
}
