#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace blackwell {

class MultiStateExperiment {
 public:
  // probs[state][outcome], at least two states
  explicit MultiStateExperiment(std::vector<std::vector<double>> probs);

  std::size_t states() const { return probs_.size(); }
  std::size_t outcomes() const { return probs_.front().size(); }
  double prob(std::size_t state, std::size_t outcome) const { return probs_[state][outcome]; }
  const std::vector<std::vector<double>>& probs() const { return probs_; }
  // restriction of the state set to {i, j}
  std::vector<std::vector<double>> pair(std::size_t i, std::size_t j) const;

 private:
  std::vector<std::vector<double>> probs_;
};

MultiStateExperiment multistate_product(const MultiStateExperiment& a, const MultiStateExperiment& b);
MultiStateExperiment multistate_power(const MultiStateExperiment& a, int n);

// t has one entry per state other than i, in increasing state order
double multistate_log_mgf(const MultiStateExperiment& e, std::size_t i, std::span<const double> t);
double multistate_mgf(const MultiStateExperiment& e, std::size_t i, std::span<const double> t);

enum class Curvature { Convex, Concave, Neither };

struct CurvatureResult {
  Curvature kind;
  bool strict;
};

// v(p) = (k+1) prod p_i^{alpha_i}; all-zero alpha_1..alpha_k (linear v) reports Convex, not strict
CurvatureResult v_convexity(std::span<const double> alpha);
// sign-carrying factor of the second derivative of v at p along x (the positive factor v(p) dropped)
double v_second_derivative(std::span<const double> alpha, std::span<const double> p, std::span<const double> x);
std::string to_string(Curvature c);

struct MultiStateOptions {
  int directions = 200;
  int magnitudes = 10;
  std::uint64_t seed = 64;
  double tol = 1e-9;
};

struct MultiStateReport {
  bool generic = false;
  bool cond_i = true;
  bool cond_ii = true;
  bool cond_iii = true;
  bool passed() const { return cond_i && cond_ii && cond_iii; }
  // first failure: part ("i", "ii", "iii"), state, t (for i/ii) or other state j (for iii), signed gap
  std::string witness_part;
  std::size_t witness_state = 0;
  std::size_t witness_other = 0;
  std::vector<double> witness_t;
  double witness_gap = 0.0;
};

MultiStateReport multistate_necessary(const MultiStateExperiment& p, const MultiStateExperiment& q,
                                      const MultiStateOptions& opts = {});

struct FalsifierResult {
  // a convex piecewise-linear utility under which Q pays strictly more than P was found
  bool refuted = false;
  double gap = 0.0;
  int trial = -1;
};

// random max-of-affine utilities on the belief simplex under a uniform prior
FalsifierResult multistate_falsifier(const MultiStateExperiment& p, const MultiStateExperiment& q, int trials,
                                     std::uint64_t seed, int pieces = 4, double tol = 1e-12);

}  // namespace blackwell
