#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blackwell/experiment.hpp"

namespace blackwell {

class FinitePmf {
 public:
  explicit FinitePmf(std::vector<double> probs);
  static FinitePmf uniform(std::size_t n);

  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }

 private:
  std::vector<double> probs_;
};

// sorted-descending prefix sums of mu dominate those of nu; shorter pmfs are padded with zeros
bool majorizes(std::span<const double> mu, std::span<const double> nu, double tol = 1e-12);
bool majorizes(const FinitePmf& mu, const FinitePmf& nu, double tol = 1e-12);

double renyi_entropy(const FinitePmf& mu, double alpha);
// log|S| + (1/|S|) sum log mu(s)
double renyi_entropy_slope_at_zero(const FinitePmf& mu);

// P1 = mu, P0 = uniform on the same support
FiniteExperiment uniform_pairing(const FinitePmf& mu);

std::vector<double> pmf_power(std::span<const double> mu, int n, std::size_t cap = kProductCap);

struct JensenOptions {
  int cap = 10;
  double alpha_max = 64.0;
  int grid_points = 512;
  double tol = 1e-9;
  std::size_t size_cap = 1u << 20;
};

struct JensenReport {
  bool generic = false;
  bool condition_holds = false;
  // some entropy comparison goes the wrong way by more than tol (not just a tie)
  bool strict_reversal = false;
  // "alpha>0", "alpha<0", "slope" or empty
  std::string failed_part;
  double witness_alpha = 0.0;
  double witness_gap = 0.0;
  // per n = 1..cap: mu^n majorizes nu^n, and strictly (not the other way too)
  std::vector<bool> majorizes_at_n;
  std::vector<bool> strict_at_n;
  std::optional<int> suffix_start;
  // a strict reversal of the entropy condition rules out majorization at every n
  bool consistent = true;
};

JensenReport jensen_check(const FinitePmf& mu, const FinitePmf& nu, const JensenOptions& opts = {});

}  // namespace blackwell
