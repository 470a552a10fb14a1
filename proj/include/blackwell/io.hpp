#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "blackwell/divergence.hpp"
#include "blackwell/experiment.hpp"
#include "blackwell/majorization.hpp"
#include "blackwell/multistate.hpp"

namespace blackwell {

// "0.25", "1e-3", "1/3", "inf"; rationals are divided once so the double is correctly rounded
double parse_number(std::string_view text);
// a JSON number or a string accepted by parse_number
double parse_json_number(const nlohmann::json& value);

FiniteExperiment experiment_from_json(const nlohmann::json& doc);
// probabilities written as shortest round-trip decimal strings
nlohmann::json experiment_to_json(const FiniteExperiment& p);
DivergenceSpec spec_from_json(const nlohmann::json& doc);
// {"probs": [...]} or a bare array
FinitePmf pmf_from_json(const nlohmann::json& doc);
MultiStateExperiment multistate_from_json(const nlohmann::json& doc);

nlohmann::json read_json(const std::string& path);
void write_json(const std::string& path, const nlohmann::json& doc);
FiniteExperiment read_experiment(const std::string& path);
void write_experiment(const std::string& path, const FiniteExperiment& p);

struct Config {
  double tol = 1e-9;
  double t_max = 64.0;
  int grid_points = 512;
  int n_cap = 64;
  std::uint64_t seed = 64;

  // tol in (0, 1e-3], positive caps, t_max >= 1, grid_points >= 3
  void validate() const;
};

}  // namespace blackwell
