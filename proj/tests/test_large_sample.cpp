#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "blackwell/error.hpp"
#include "blackwell/experiment.hpp"
#include "blackwell/fixtures.hpp"
#include "blackwell/large_sample.hpp"
#include "oracles.hpp"

using namespace blackwell;

namespace {

FiniteExperiment to_exp(const oracle::Exp& e) { return make_experiment(e.p0, e.p1); }

LargeSampleOptions quick(int cap) {
  LargeSampleOptions o;
  o.cap = cap;
  o.compute_n0 = false;
  return o;
}

}  // namespace

TEST(DominanceVector, MatchesDecisionProblemOracle) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    auto e = oracle::random_exp(rng, 3), g = oracle::random_exp(rng, 2 + trial % 2);
    auto rep = dominance_vector(to_exp(e), to_exp(g), quick(5));
    ASSERT_EQ(rep.vector.size(), 5u);
    for (int n = 1; n <= 5; ++n) {
      auto pa = oracle::power_atoms(e, n), qa = oracle::power_atoms(g, n);
      BlackwellVerdict v = rep.vector[n - 1];
      bool pq = v == BlackwellVerdict::Dominates || v == BlackwellVerdict::Equivalent;
      bool qp = v == BlackwellVerdict::DominatedBy || v == BlackwellVerdict::Equivalent;
      EXPECT_EQ(pq, oracle::dominates(pa, qa)) << trial << " n=" << n;
      EXPECT_EQ(qp, oracle::dominates(qa, pa)) << trial << " n=" << n;
    }
  }
}

TEST(DominanceVector, AzrieliQuarterSixteenthStartsAtFour) {
  auto f = azrieli(0.25, 1.0 / 16.0);
  auto rep = dominance_vector(f.p, f.q, quick(64));
  ASSERT_TRUE(rep.minimal_n.has_value());
  EXPECT_EQ(*rep.minimal_n, 4);
  EXPECT_FALSE(weakly_dominates(rep.vector[0]));
  EXPECT_FALSE(weakly_dominates(rep.vector[2]));
  for (int n = 4; n <= 64; ++n) EXPECT_TRUE(weakly_dominates(rep.vector[n - 1])) << n;
  EXPECT_TRUE(rep.generic);
  EXPECT_EQ(rep.renyi_verdict.kind, RenyiVerdictKind::DominatesOnGrid);
}

TEST(DominanceVector, NonMonotoneExample) {
  auto f = azrieli(0.305, 0.1);
  auto rep = dominance_vector(f.p, f.q, quick(3));
  EXPECT_EQ(rep.vector[0], BlackwellVerdict::Incomparable);
  EXPECT_EQ(rep.vector[1], BlackwellVerdict::Dominates);
  EXPECT_EQ(rep.vector[2], BlackwellVerdict::Incomparable);
  EXPECT_FALSE(rep.minimal_n.has_value());
  EXPECT_GT(rep.worst_gap[2], 1e-9);
}

TEST(DominanceVector, CapValidation) { EXPECT_THROW(dominance_vector(footnote3().p, footnote3().q, quick(0)), Error); }

TEST(DominanceVector, TheoryBoundWhenAvailable) {
  LargeSampleOptions o;
  o.cap = 6;
  auto rep = dominance_vector(symmetric_binary(0.8), symmetric_binary(0.65), o);
  ASSERT_TRUE(rep.theory_n0.has_value());
  ASSERT_TRUE(rep.eta.has_value());
  EXPECT_EQ(*rep.minimal_n, 1);
}

TEST(LargeSampleVerdict, Kinds) {
  auto s = large_sample_verdict(symmetric_binary(0.8), symmetric_binary(0.65));
  EXPECT_EQ(s.kind, LargeSampleKind::PredictDominates);
  EXPECT_TRUE(s.n0.has_value());
  auto f = footnote3();
  EXPECT_EQ(large_sample_verdict(f.p, f.q).kind, LargeSampleKind::PredictNotDominates);
  EXPECT_EQ(large_sample_verdict(f.p, f.p).kind, LargeSampleKind::NonGeneric);
  auto ev = eventualfail(5e-4);
  EXPECT_EQ(large_sample_verdict(ev.p, ev.q).kind, LargeSampleKind::NonGeneric);
  EXPECT_EQ(to_string(LargeSampleKind::NonGeneric), "NonGeneric");
}

TEST(LargeSampleVerdict, ClosedFormSource) {
  auto v = large_sample_verdict(example1_renyi_source(), RenyiSource::from_experiment(example1_q(0.63)));
  EXPECT_EQ(v.kind, LargeSampleKind::PredictDominates);
  EXPECT_FALSE(v.n0.has_value());
}

TEST(Catalyst, RestoresDominance) {
  auto f = azrieli(0.305, 0.1);
  auto r = catalyst(f.p, f.q, 2);
  EXPECT_EQ(compare_with_catalyst(f.p, f.q, r).verdict, BlackwellVerdict::Dominates);
  // same check by explicit products
  auto pr = llr_distribution(product(f.p, r), State::One), qr = llr_distribution(product(f.q, r), State::One);
  std::vector<oracle::LlrAtom> a, b;
  for (const auto& x : pr.atoms()) a.push_back({x.value, x.prob, x.prob * std::exp(-x.value)});
  for (const auto& x : qr.atoms()) b.push_back({x.value, x.prob, x.prob * std::exp(-x.value)});
  EXPECT_TRUE(oracle::dominates(a, b));
}

TEST(Catalyst, ExplicitAndReducedAreEquivalent) {
  auto f = azrieli(0.305, 0.1);
  CatalystOptions opt;
  opt.explicit_products = true;
  auto big = catalyst(f.p, f.q, 2, opt);
  auto small = catalyst(f.p, f.q, 2);
  EXPECT_GT(big.size(), small.size());
  EXPECT_EQ(blackwell_dominates(big, small).verdict, BlackwellVerdict::Equivalent);
}

TEST(Catalyst, NeedsDominanceAtN) {
  auto f = azrieli(0.305, 0.1);
  try {
    catalyst(f.p, f.q, 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
  }
  EXPECT_THROW(catalyst(f.p, f.q, 0), Error);
}

TEST(Catalyst, LargerNFromMinimalPower) {
  auto f = azrieli(0.25, 1.0 / 16.0);
  for (int n : {4, 5}) {
    auto r = catalyst(f.p, f.q, n);
    EXPECT_TRUE(weakly_dominates(compare_with_catalyst(f.p, f.q, r).verdict)) << n;
  }
}

TEST(RatioSearch, PairsMatchOracle) {
  auto p = symmetric_binary(0.8), q = symmetric_binary(0.65);
  auto res = ratio_search(p, q, 5, quick(1));
  ASSERT_EQ(res.pairs.size(), 5u);
  oracle::Exp e{{0.2, 0.8}, {0.8, 0.2}}, g{{0.35, 0.65}, {0.65, 0.35}};
  for (auto [n, m] : res.pairs) {
    if (m > 0) {
      EXPECT_TRUE(oracle::dominates(oracle::power_atoms(e, n), oracle::power_atoms(g, m))) << n;
    }
    EXPECT_FALSE(oracle::dominates(oracle::power_atoms(e, n), oracle::power_atoms(g, m + 1))) << n;
    EXPECT_LE(m, n * res.renyi_ratio.value + 1e-6);
  }
  EXPECT_GT(res.best_ratio, 1.0);
  EXPECT_THROW(ratio_search(p, q, 0), Error);
}
