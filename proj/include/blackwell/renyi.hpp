#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "blackwell/experiment.hpp"

namespace blackwell {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr double kNearOne = 1e-8;

double renyi_divergence(std::span<const double> mu, std::span<const double> nu, double t);
// R_t from the law of X = log(dmu/dnu) under mu
double renyi_divergence(const AtomicDistribution& x, double t);

// Either the two LLR laws of a finite experiment or closed-form divergence curves.
class RenyiSource {
 public:
  using Curve = std::function<double(State, double)>;

  static RenyiSource from_experiment(const FiniteExperiment& p);
  static RenyiSource from_llr(AtomicDistribution x0, AtomicDistribution x1);
  // curve(theta, t) for finite t > 0; sup0/sup1 are the t = infinity values
  static RenyiSource closed_form(std::string name, Curve curve, double sup0, double sup1);

  bool atomic() const { return !curve_; }
  const AtomicDistribution& llr(State s) const;
  double divergence(State s, double t) const;
  double kl(State s) const { return divergence(s, 1.0); }
  double sup(State s) const;
  bool trivial(double tol = 1e-9) const;
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  AtomicDistribution x_[2];
  Curve curve_;
  double sup_[2] = {0.0, 0.0};
};

struct RenyiGridOptions {
  double t_max = 64.0;
  int grid_points = 512;
  double tol = 1e-9;
};

// log-spaced on [1/2, t_max], with 1/2, 1 and 2 (when in range) present exactly
std::vector<double> renyi_grid(double t_max, int grid_points);

struct RenyiProfile {
  State theta;
  std::vector<double> grid;
  std::vector<double> values;
  double at_infinity;
};

RenyiProfile renyi_profile(const RenyiSource& p, State theta, double t_max = 64.0, int grid_points = 512);
RenyiProfile renyi_profile(const FiniteExperiment& p, State theta, double t_max = 64.0, int grid_points = 512);

enum class RenyiVerdictKind { DominatesOnGrid, FailsAt, Inconclusive };

struct RenyiVerdict {
  RenyiVerdictKind kind = RenyiVerdictKind::Inconclusive;
  State theta = State::Zero;
  // 0 stands for the t -> 0+ limit
  double t = 0.0;
  // R_P - R_Q at the witness
  double gap = 0.0;
  // scaled sign statistic used for the decision (positive means P above Q)
  double margin = 0.0;
  double t_max = 64.0;
  int grid_points = 512;
};

RenyiVerdict renyi_order_check(const RenyiSource& p, const RenyiSource& q, const RenyiGridOptions& opts = {});
RenyiVerdict renyi_order_check(const FiniteExperiment& p, const FiniteExperiment& q,
                               const RenyiGridOptions& opts = {});

// sign statistic of g(s) = E[e^{sX}] - E[e^{sY}] divided by s and by sum |c_k| e^{s x_k};
// at s = 0 this is (E[X] - E[Y]) / sum |c_k|
double exp_poly_margin(const AtomicDistribution& x, const AtomicDistribution& y, double s);

struct DominanceRatio {
  double value;
  State theta;
  double t;
  double t_max;
  int grid_points;
};

DominanceRatio dominance_ratio(const RenyiSource& p, const RenyiSource& q, const RenyiGridOptions& opts = {});
DominanceRatio dominance_ratio(const FiniteExperiment& p, const FiniteExperiment& q,
                               const RenyiGridOptions& opts = {});

std::string to_string(RenyiVerdictKind kind);

}  // namespace blackwell
