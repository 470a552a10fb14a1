#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "blackwell/experiment.hpp"

namespace blackwell {

// alpha + e^{a + log_beta} on each segment; log_beta = -inf encodes beta = 0
class PiecewiseExpCurve {
 public:
  struct Segment {
    double alpha;
    double log_beta;
  };

  PiecewiseExpCurve() = default;
  PiecewiseExpCurve(std::vector<double> breakpoints, std::vector<Segment> segments);

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  // segments()[0] covers (-inf, a_1), segments()[i] covers [a_i, a_{i+1})
  const std::vector<Segment>& segments() const { return segments_; }
  double operator()(double a) const;
  // value of segment i at a (used for continuity checks)
  double segment_value(std::size_t i, double a) const;

 private:
  std::vector<double> breakpoints_;
  std::vector<Segment> segments_;
};

PiecewiseExpCurve perfected_cdf(const AtomicDistribution& f1);

struct FosdCheck {
  bool holds = true;
  // max over breakpoints of F(a) - G(a), and where it occurs
  double worst_gap = 0.0;
  double witness = 0.0;
};

// F <= G + tol on [from, inf); from = -inf checks the whole line
FosdCheck curve_below(const PiecewiseExpCurve& f, const PiecewiseExpCurve& g, double tol = 1e-9,
                      double from = -INFINITY);
bool fosd_perfected(const FiniteExperiment& p, const FiniteExperiment& q, double tol = 1e-9);
// plain cdf comparison F(a) <= G(a) + tol for a >= from
bool cdf_below(const AtomicDistribution& f, const AtomicDistribution& g, double from, double tol = 1e-9);

// Lambda(p) = integral of the cdf from 0 to p
double lambda(const PosteriorDistribution& pi, double p);
bool mps_check(const PosteriorDistribution& pi, const PosteriorDistribution& tau, double tol = 1e-9);

enum class BlackwellVerdict { Dominates, DominatedBy, Equivalent, Incomparable };
enum class BlackwellMode { Perfected, Mps, CrossValidate };

struct BlackwellComparison {
  BlackwellVerdict verdict = BlackwellVerdict::Incomparable;
  bool p_over_q = false;
  bool q_over_p = false;
  // worst violation of P over Q (F_P - G_Q) and of Q over P, with locations in LLR units
  double gap_pq = 0.0, witness_pq = 0.0;
  double gap_qp = 0.0, witness_qp = 0.0;
};

BlackwellComparison compare_llr(const AtomicDistribution& f1, const AtomicDistribution& g1, double tol = 1e-9);
BlackwellComparison blackwell_dominates(const FiniteExperiment& p, const FiniteExperiment& q,
                                        BlackwellMode mode = BlackwellMode::Perfected, double tol = 1e-9);
std::string to_string(BlackwellVerdict v);
// Dominates or Equivalent
bool weakly_dominates(BlackwellVerdict v);

bool verify_garbling(const FiniteExperiment& p, const FiniteExperiment& q, const Garbling& sigma, double tol = 1e-9);

class ConvexUtility {
 public:
  // kinks sorted by belief; linear extrapolation past the ends
  static ConvexUtility from_kinks(std::vector<std::pair<double, double>> kinks);
  double operator()(double p) const;
  const std::vector<std::pair<double, double>>& kinks() const { return kinks_; }

 private:
  std::vector<std::pair<double, double>> kinks_;
};

double expected_indirect_utility(const PosteriorDistribution& pi, const ConvexUtility& v);
double expected_indirect_utility(const FiniteExperiment& p, const ConvexUtility& v);

}  // namespace blackwell
