#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "blackwell/blackwell_order.hpp"
#include "blackwell/large_deviations.hpp"
#include "blackwell/renyi.hpp"

namespace blackwell {

struct LargeSampleOptions {
  int cap = 64;
  double tol = 1e-9;
  bool compute_n0 = true;
  RenyiGridOptions renyi;
  EtaOptions eta;
  std::size_t atom_cap = kEnumerationCap;
};

struct DominanceReport {
  // vector[n - 1] is the verdict for P^n against Q^n
  std::vector<BlackwellVerdict> vector;
  // worst F~_P - G~_Q per n; positive above tol means P^n does not dominate
  std::vector<double> worst_gap;
  // smallest n whose whole tested suffix (up to cap) dominates
  std::optional<int> minimal_n;
  std::optional<double> theory_n0;
  std::optional<double> eta;
  RenyiVerdict renyi_verdict;
  bool generic = false;
  int cap = 0;
};

DominanceReport dominance_vector(const FiniteExperiment& p, const FiniteExperiment& q,
                                 const LargeSampleOptions& opts = {});

enum class LargeSampleKind { PredictDominates, PredictNotDominates, NonGeneric };

struct LargeSampleVerdict {
  LargeSampleKind kind;
  std::optional<double> n0;
  std::optional<double> eta;
  RenyiVerdict renyi;
};

LargeSampleVerdict large_sample_verdict(const FiniteExperiment& p, const FiniteExperiment& q,
                                        const LargeSampleOptions& opts = {});
// for closed-form sources; no n0 is attempted
LargeSampleVerdict large_sample_verdict(const RenyiSource& p, const RenyiSource& q,
                                        const LargeSampleOptions& opts = {});
std::string to_string(LargeSampleKind kind);

struct CatalystOptions {
  double tol = 1e-9;
  // build each P^j (x) Q^(n-j) explicitly instead of its likelihood-ratio reduction
  bool explicit_products = false;
  std::size_t cap = kProductCap;
};

// R = (1/n) sum_{j<n} P^j (x) Q^(n-j)
FiniteExperiment catalyst(const FiniteExperiment& p, const FiniteExperiment& q, int n,
                          const CatalystOptions& opts = {});
BlackwellComparison compare_with_catalyst(const FiniteExperiment& p, const FiniteExperiment& q,
                                          const FiniteExperiment& r, double tol = 1e-9);

struct RatioSearchResult {
  // (n, largest m with P^n over Q^m)
  std::vector<std::pair<int, int>> pairs;
  double best_ratio = 0.0;
  DominanceRatio renyi_ratio;
};

RatioSearchResult ratio_search(const FiniteExperiment& p, const FiniteExperiment& q, int n_max,
                               const LargeSampleOptions& opts = {});

}  // namespace blackwell
