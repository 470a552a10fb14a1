#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blackwell/experiment.hpp"
#include "blackwell/renyi.hpp"

namespace blackwell {

struct ExperimentPair {
  std::string name;
  FiniteExperiment p;
  FiniteExperiment q;
};

// (q, 1-q / 1-q, q); q = 1/2 is trivial
FiniteExperiment symmetric_binary(double q);
// (1/2, 1/2 / 1-p, p)
FiniteExperiment example1_q(double p);
// three-outcome P of the Azrieli family: (beta, 1/2, 1/2-beta / 1/2-beta, 1/2, beta)
FiniteExperiment azrieli_p(double beta);

ExperimentPair footnote3();
ExperimentPair example1(double p = 0.63, int bins = 1000);
ExperimentPair azrieli(double alpha, double beta);
// requires 0 < eps < 1/1600 so that every entry stays positive
ExperimentPair eventualfail(double eps);
ExperimentPair symmetric(double q, double q2 = 0.5);

// closed-form divergences of the continuous experiment with densities 1 and 1/2 + s on [0,1]
RenyiSource example1_renyi_source();
// sqrt(alpha(1-alpha)) - sqrt(beta(1/2-beta)) - 1/4
double azrieli_margin(double alpha, double beta);

// by name with numeric parameters; missing parameters take the defaults above
ExperimentPair load_fixture(std::string_view name, std::span<const double> params = {});
// "azrieli(0.305, 0.1)", "footnote3", "example1(0.63,1000)"
ExperimentPair parse_fixture(std::string_view call);
std::vector<std::string> fixture_names();

}  // namespace blackwell
