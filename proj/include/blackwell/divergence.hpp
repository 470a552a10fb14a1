#pragma once

#include <span>
#include <vector>

#include "blackwell/experiment.hpp"

namespace blackwell {

struct SpecAtom {
  // order in [1/2, inf]; inf allowed
  double t;
  double weight;
};

class DivergenceSpec {
 public:
  DivergenceSpec() = default;
  DivergenceSpec(std::vector<SpecAtom> m0, std::vector<SpecAtom> m1);

  const std::vector<SpecAtom>& m0() const { return m0_; }
  const std::vector<SpecAtom>& m1() const { return m1_; }
  double total_mass() const;

 private:
  std::vector<SpecAtom> m0_, m1_;
};

// sum over m0 of w R_t(mu || nu) plus sum over m1 of w R_t(nu || mu)
double divergence_eval(const DivergenceSpec& spec, std::span<const double> mu, std::span<const double> nu);
// evaluated on (P_1, P_0)
double divergence_eval(const DivergenceSpec& spec, const FiniteExperiment& p);

std::vector<double> product_pmf(std::span<const double> a, std::span<const double> b);

bool check_additivity(const DivergenceSpec& spec, std::span<const double> mu1, std::span<const double> nu1,
                      std::span<const double> mu2, std::span<const double> nu2, double tol = 1e-9);
bool check_dpi(const DivergenceSpec& spec, std::span<const double> mu, std::span<const double> nu,
               const Garbling& sigma, double tol = 1e-9);

}  // namespace blackwell
