#pragma once

#include <vector>

#include "blackwell/experiment.hpp"
#include "blackwell/renyi.hpp"

namespace blackwell {

inline constexpr double kFenchelBracket = 1e4;

double cgf(const AtomicDistribution& x, double t);
double cgf_derivative(const AtomicDistribution& x, double t);
// throws OutOfSupport outside [min, max]
double fenchel(const AtomicDistribution& x, double a);
// +inf outside the support instead of throwing
double rate_function(const AtomicDistribution& x, double a);

struct EtaGridPoint {
  State theta;
  // 1: K*_Y(a) - eta > K*_X(a + eta) on [E[X] - eta, max Y]
  // 2: K*_Y(a - eta) < K*_X(a) - eta on [0, E[Y] + eta]
  int condition;
  double a;
  double kstar_x;
  double kstar_y;
};

struct EtaOptions {
  int grid_points = 1000;
  int ladder_depth = 30;
  RenyiGridOptions renyi;
};

struct EtaSearchResult {
  double eta;
  std::vector<EtaGridPoint> grid;
};

// checks both inequalities and E[X] - eta > E[Y] for one state; fills grid when given
bool eta_admissible(const AtomicDistribution& x, const AtomicDistribution& y, State theta, double eta,
                    int grid_points, std::vector<EtaGridPoint>* grid = nullptr);
EtaSearchResult eta_search(const FiniteExperiment& p, const FiniteExperiment& q, const EtaOptions& opts = {});

struct LargeDeviationSummary {
  double b;
  double eta;
  // ceil(8 b^2 / eta^3); kept as a double because small eta overflows 64-bit integers
  double n0;
  std::vector<EtaGridPoint> verification_grid;
};

double support_bound(const FiniteExperiment& p, const FiniteExperiment& q);
LargeDeviationSummary sample_bound(const FiniteExperiment& p, const FiniteExperiment& q, const EtaOptions& opts = {});

double chernoff_bound(const AtomicDistribution& x, double a, int n);
double ld_lower_bound(const AtomicDistribution& x, double a, double eta, int n);
double log_chernoff_bound(const AtomicDistribution& x, double a, int n);
// Pr{X_1 + ... + X_n > na}, or >= when strict is false
double exact_tail(const AtomicDistribution& x, int n, double a, bool strict = true,
                  std::size_t cap = kEnumerationCap);

}  // namespace blackwell
