#include "blackwell/divergence.hpp"

#include <cmath>

#include "blackwell/error.hpp"
#include "blackwell/renyi.hpp"

namespace blackwell {

namespace {

void check_atoms(const std::vector<SpecAtom>& atoms) {
  for (const auto& a : atoms) {
    if (!(a.t >= 0.5)) throw Error(ErrorCode::DomainError, "spec order below 1/2");
    if (!(a.weight >= 0.0) || std::isinf(a.weight)) throw Error(ErrorCode::DomainError, "spec weight must be finite and >= 0");
  }
}

}  // namespace

DivergenceSpec::DivergenceSpec(std::vector<SpecAtom> m0, std::vector<SpecAtom> m1)
    : m0_(std::move(m0)), m1_(std::move(m1)) {
  check_atoms(m0_);
  check_atoms(m1_);
}

double DivergenceSpec::total_mass() const {
  double s = 0.0;
  for (const auto& a : m0_) s += a.weight;
  for (const auto& a : m1_) s += a.weight;
  return s;
}

double divergence_eval(const DivergenceSpec& spec, std::span<const double> mu, std::span<const double> nu) {
  if (mu.size() != nu.size()) throw Error(ErrorCode::DimensionMismatch, "pmfs differ in length");
  double d = 0.0;
  for (const auto& a : spec.m0())
    if (a.weight > 0.0) d += a.weight * renyi_divergence(mu, nu, a.t);
  for (const auto& a : spec.m1())
    if (a.weight > 0.0) d += a.weight * renyi_divergence(nu, mu, a.t);
  return d;
}

double divergence_eval(const DivergenceSpec& spec, const FiniteExperiment& p) {
  return divergence_eval(spec, p.p1(), p.p0());
}

std::vector<double> product_pmf(std::span<const double> a, std::span<const double> b) {
  std::vector<double> out;
  out.reserve(a.size() * b.size());
  for (double x : a)
    for (double y : b) out.push_back(x * y);
  return out;
}

bool check_additivity(const DivergenceSpec& spec, std::span<const double> mu1, std::span<const double> nu1,
                      std::span<const double> mu2, std::span<const double> nu2, double tol) {
  if (mu1.size() != nu1.size() || mu2.size() != nu2.size())
    throw Error(ErrorCode::DimensionMismatch, "pmfs differ in length");
  double joint = divergence_eval(spec, product_pmf(mu1, mu2), product_pmf(nu1, nu2));
  double parts = divergence_eval(spec, mu1, nu1) + divergence_eval(spec, mu2, nu2);
  return std::fabs(joint - parts) <= tol;
}

bool check_dpi(const DivergenceSpec& spec, std::span<const double> mu, std::span<const double> nu,
               const Garbling& sigma, double tol) {
  if (mu.size() != nu.size() || sigma.rows() != mu.size())
    throw Error(ErrorCode::DimensionMismatch, "garbling rows do not match the pmf length");
  auto a = sigma.apply(mu), b = sigma.apply(nu);
  // outcomes unreachable under both measures carry no divergence
  std::vector<double> sa, sb;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > 0.0 || b[j] > 0.0) sa.push_back(a[j]), sb.push_back(b[j]);
  return divergence_eval(spec, sa, sb) <= divergence_eval(spec, mu, nu) + tol;
}

}  // namespace blackwell
