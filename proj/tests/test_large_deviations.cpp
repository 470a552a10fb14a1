#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "blackwell/error.hpp"
#include "blackwell/experiment.hpp"
#include "blackwell/fixtures.hpp"
#include "blackwell/large_deviations.hpp"
#include "blackwell/renyi.hpp"
#include "oracles.hpp"

using namespace blackwell;

namespace {

AtomicDistribution coin(double p_up = 0.5) { return AtomicDistribution::from_atoms({{-1.0, 1 - p_up}, {1.0, p_up}}); }

std::vector<double> values_of(const AtomicDistribution& x) {
  std::vector<double> v;
  for (const auto& a : x.atoms()) v.push_back(a.value);
  return v;
}

std::vector<double> probs_of(const AtomicDistribution& x) {
  std::vector<double> v;
  for (const auto& a : x.atoms()) v.push_back(a.prob);
  return v;
}

// K* of a +-1 coin with P(+1) = p, at a in (-1, 1)
double coin_rate(double p, double a) {
  double q = (1 + a) / 2;
  return q * std::log(q / p) + (1 - q) * std::log((1 - q) / (1 - p));
}

}  // namespace

TEST(Cgf, FairCoinIsLogCosh) {
  auto x = coin();
  for (double t : {-5.0, -0.3, 0.0, 0.7, 12.0}) EXPECT_NEAR(cgf(x, t), std::log(std::cosh(t)), 1e-12);
  EXPECT_NEAR(cgf(x, 800.0), 800.0 - std::log(2.0), 1e-9);
  EXPECT_NEAR(cgf_derivative(x, 0.5), std::tanh(0.5), 1e-12);
}

TEST(Cgf, LlrCgfIsScaledRenyi) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    auto e = oracle::random_exp(rng, 3);
    auto x = llr_distribution(make_experiment(e.p0, e.p1), State::One);
    for (double t : {0.5, 1.0, 3.0}) EXPECT_NEAR(cgf(x, t), t * oracle::renyi(e.p1, e.p0, t + 1), 1e-10);
  }
}

TEST(Fenchel, CoinClosedForm) {
  for (double p : {0.5, 0.8, 0.95})
    for (double a : {-0.9, -0.2, 0.0, 0.4, 0.99}) EXPECT_NEAR(fenchel(coin(p), a), coin_rate(p, a), 1e-9);
}

TEST(Fenchel, EndpointsAndOutside) {
  auto x = AtomicDistribution::from_atoms({{-1.0, 0.2}, {0.5, 0.3}, {2.0, 0.5}});
  EXPECT_NEAR(fenchel(x, 2.0), -std::log(0.5), 1e-12);
  EXPECT_NEAR(fenchel(x, -1.0), -std::log(0.2), 1e-12);
  EXPECT_NEAR(fenchel(x, x.mean()), 0.0, 1e-12);
  try {
    fenchel(x, 2.5);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfSupport);
  }
  EXPECT_TRUE(std::isinf(rate_function(x, -1.5)));
}

TEST(Fenchel, MatchesNumericalConjugate) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    auto e = oracle::random_exp(rng, 2 + trial % 4);
    auto x = llr_distribution(make_experiment(e.p0, e.p1), State::One);
    if (x.size() < 2) continue;
    double a = x.min() + (x.max() - x.min()) * (0.02 + 0.96 * u(rng));
    EXPECT_NEAR(fenchel(x, a), oracle::conjugate(values_of(x), probs_of(x), a), 1e-7);
  }
}

TEST(Fenchel, SignFlip) {
  auto x = AtomicDistribution::from_atoms({{-1.0, 0.2}, {0.5, 0.3}, {2.0, 0.5}});
  for (double a : {-0.5, 0.0, 1.2}) EXPECT_NEAR(fenchel(x.negated(), -a), fenchel(x, a), 1e-10);
}

TEST(EtaSearch, SymmetricPairGridMatchesOracle) {
  auto p = symmetric_binary(0.8), q = symmetric_binary(0.65);
  EtaOptions opts;
  opts.grid_points = 200;
  auto r = eta_search(p, q, opts);
  EXPECT_GT(r.eta, 0.0);
  EXPECT_FALSE(r.grid.empty());
  for (const auto& g : r.grid) {
    auto x = llr_distribution(p, g.theta), y = llr_distribution(q, g.theta);
    if (g.condition == 1) {
      double kx = oracle::conjugate(values_of(x), probs_of(x), g.a + r.eta);
      double ky = oracle::conjugate(values_of(y), probs_of(y), g.a);
      EXPECT_GT(ky - r.eta, kx - 1e-7) << g.a;
    } else {
      double kx = oracle::conjugate(values_of(x), probs_of(x), g.a);
      double ky = oracle::conjugate(values_of(y), probs_of(y), g.a - r.eta);
      EXPECT_LT(ky, kx - r.eta + 1e-7) << g.a;
    }
  }
  // doubling eta must fail, or the ladder would have stopped earlier
  bool larger = true;
  for (State s : {State::Zero, State::One})
    larger = larger && eta_admissible(llr_distribution(p, s), llr_distribution(q, s), s, 2 * r.eta, 200);
  EXPECT_FALSE(larger);
}

TEST(EtaSearch, Preconditions) {
  auto p = symmetric_binary(0.8);
  for (const auto& [a, b] : {std::pair{p, p}, std::pair{footnote3().p, footnote3().q}}) {
    try {
      eta_search(a, b);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
    }
  }
}

TEST(SampleBound, SymmetricPair) {
  auto s = sample_bound(symmetric_binary(0.8), symmetric_binary(0.65));
  EXPECT_NEAR(s.b, std::log(4.0), 1e-14);
  EXPECT_EQ(s.n0, std::ceil(8 * s.b * s.b / (s.eta * s.eta * s.eta)));
  EXPECT_GT(s.n0, 64.0);
}

TEST(Tail, CoinByHand) {
  auto x = coin();
  EXPECT_NEAR(exact_tail(x, 4, 0.0), 5.0 / 16.0, 1e-15);
  EXPECT_NEAR(exact_tail(x, 4, 0.0, false), 11.0 / 16.0, 1e-15);
  EXPECT_NEAR(exact_tail(x, 5, 0.5), 3.0 / 16.0, 1e-15);
}

TEST(Tail, MatchesTupleEnumeration) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    auto pr = oracle::random_pmf(rng, 3);
    std::vector<double> v{u(rng), u(rng), u(rng)};
    auto x = AtomicDistribution::from_atoms({{v[0], pr[0]}, {v[1], pr[1]}, {v[2], pr[2]}});
    int n = 1 + trial % 7;
    double a = u(rng) * 0.8;
    EXPECT_NEAR(exact_tail(x, n, a), oracle::tail_by_tuples(v, pr, n, a), 1e-12);
  }
}

TEST(Chernoff, CoinBound) {
  auto x = coin();
  for (int n : {1, 10, 100}) {
    double b = chernoff_bound(x, 0.5, n);
    EXPECT_NEAR(std::log(b), -n * coin_rate(0.5, 0.5), 1e-9);
    EXPECT_LE(exact_tail(x, n, 0.5), b);
  }
  EXPECT_THROW(chernoff_bound(x, -0.5, 3), Error);
  EXPECT_THROW(chernoff_bound(x, 0.5, 0), Error);
}

TEST(Chernoff, SandwichOnLlrLaws) {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int nontrivial = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto e = oracle::random_exp(rng, 3);
    auto x = llr_distribution(make_experiment(e.p0, e.p1), State::One);
    double eta = 0.05 + 0.2 * u(rng);
    double lo = std::max(x.mean(), x.min()), hi = x.max() - eta;
    if (!(hi > lo)) continue;
    double a = lo + (hi - lo) * u(rng);
    for (int n : {5, 40, 200}) {
      double tail = exact_tail(x, n, a);
      double lower = ld_lower_bound(x, a, eta, n);
      EXPECT_LE(lower, tail + 1e-15) << trial;
      EXPECT_LE(tail, chernoff_bound(x, a, n) + 1e-15) << trial;
      nontrivial += lower > 0.0;
    }
  }
  EXPECT_GT(nontrivial, 10);
}

TEST(Chernoff, LowerBoundDomain) {
  auto x = coin();
  EXPECT_THROW(ld_lower_bound(x, 0.9, 0.2, 10), Error);
  EXPECT_THROW(ld_lower_bound(x, -1.5, 0.2, 10), Error);
  EXPECT_THROW(ld_lower_bound(x, 0.0, 0.0, 10), Error);
  EXPECT_EQ(ld_lower_bound(x, 0.0, 0.1, 10), 0.0);
}

TEST(Chernoff, TailComparisonFromRateGap) {
  auto x = coin(0.95), y = coin(0.5);
  const double a = 0.7, eta = 0.25;
  const int n = 320;
  EXPECT_GT(fenchel(y, a) - eta, fenchel(x, a + eta));
  double lower_x = ld_lower_bound(x, a, eta, n);
  double upper_y = chernoff_bound(y, a, n);
  EXPECT_NEAR(lower_x, std::exp(-n * coin_rate(0.95, a + eta)) * 0.8, 1e-12);
  EXPECT_GT(lower_x, upper_y);
  EXPECT_GT(exact_tail(x, n, a), exact_tail(y, n, a));
}
