#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "blackwell/divergence.hpp"
#include "blackwell/error.hpp"
#include "blackwell/fixtures.hpp"
#include "oracles.hpp"

using namespace blackwell;

namespace {

DivergenceSpec random_spec(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<SpecAtom> m0, m1;
  for (int k = 0; k < 3; ++k) {
    m0.push_back({0.5 + 10 * u(rng), u(rng)});
    m1.push_back({0.5 + 10 * u(rng), u(rng)});
  }
  if (u(rng) < 0.3) m0.push_back({INFINITY, u(rng)});
  if (u(rng) < 0.3) m1.push_back({1.0, u(rng)});
  return {m0, m1};
}

double spec_by_oracle(const DivergenceSpec& s, const oracle::Pmf& mu, const oracle::Pmf& nu) {
  double d = 0.0;
  for (const auto& a : s.m0()) d += a.weight * oracle::renyi(mu, nu, a.t);
  for (const auto& a : s.m1()) d += a.weight * oracle::renyi(nu, mu, a.t);
  return d;
}

}  // namespace

TEST(Divergence, EmptySpecIsZero) {
  DivergenceSpec s;
  std::vector<double> mu{0.2, 0.8}, nu{0.6, 0.4};
  EXPECT_EQ(divergence_eval(s, mu, nu), 0.0);
  EXPECT_EQ(s.total_mass(), 0.0);
}

TEST(Divergence, UnitMassAtOneIsKl) {
  DivergenceSpec s({{1.0, 1.0}}, {});
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    auto mu = oracle::random_pmf(rng, 4), nu = oracle::random_pmf(rng, 4);
    double kl = 0.0;
    for (std::size_t i = 0; i < 4; ++i) kl += mu[i] * std::log(mu[i] / nu[i]);
    EXPECT_NEAR(divergence_eval(s, mu, nu), kl, 1e-12);
  }
}

TEST(Divergence, HandValue) {
  DivergenceSpec s({{2.0, 0.5}}, {{INFINITY, 0.25}});
  auto p = footnote3().p;
  EXPECT_NEAR(divergence_eval(s, p), 0.5 * std::log(1.5) + 0.25 * std::log(2.0), 1e-14);
  EXPECT_DOUBLE_EQ(s.total_mass(), 0.75);
}

TEST(Divergence, MatchesOracleOnRandomSpecs) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = random_spec(rng);
    auto mu = oracle::random_pmf(rng, 3), nu = oracle::random_pmf(rng, 3);
    double want = spec_by_oracle(s, mu, nu);
    EXPECT_NEAR(divergence_eval(s, mu, nu), want, 1e-9 * std::max(1.0, want));
  }
}

TEST(Divergence, DataProcessing) {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 300; ++trial) {
    auto s = random_spec(rng);
    auto mu = oracle::random_pmf(rng, 4), nu = oracle::random_pmf(rng, 4);
    std::vector<std::vector<double>> m;
    for (int i = 0; i < 4; ++i) m.push_back(oracle::random_pmf(rng, 3, 0.0));
    EXPECT_TRUE(check_dpi(s, mu, nu, Garbling(m))) << trial;
  }
}

TEST(Divergence, Additivity) {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = random_spec(rng);
    auto a = oracle::random_pmf(rng, 3), b = oracle::random_pmf(rng, 3);
    auto c = oracle::random_pmf(rng, 2), d = oracle::random_pmf(rng, 2);
    EXPECT_TRUE(check_additivity(s, a, b, c, d)) << trial;
  }
}

TEST(Divergence, MonotoneAlongBlackwellChain) {
  DivergenceSpec s({{0.7, 1.0}, {3.0, 0.2}}, {{1.5, 0.4}});
  double prev = 0.0;
  for (double q : {0.55, 0.6, 0.7, 0.8, 0.9}) {
    double d = divergence_eval(s, symmetric_binary(q));
    EXPECT_GT(d, prev);
    prev = d;
  }
}

TEST(Divergence, InvalidSpecs) {
  for (auto bad : {SpecAtom{0.4, 1.0}, SpecAtom{1.0, -1.0}, SpecAtom{2.0, INFINITY}, SpecAtom{NAN, 1.0}}) {
    try {
      DivergenceSpec s({bad}, {});
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::DomainError);
    }
  }
  DivergenceSpec ok({{1.0, 1.0}}, {});
  std::vector<double> a{0.5, 0.5}, b{0.2, 0.3, 0.5};
  EXPECT_THROW(divergence_eval(ok, a, b), Error);
}
