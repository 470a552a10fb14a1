#include "blackwell/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "blackwell/error.hpp"

namespace blackwell {

FinitePmf::FinitePmf(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw Error(ErrorCode::DimensionMismatch, "empty pmf");
  long double s = 0.0L;
  for (double x : probs_) {
    if (!(x > 0.0)) throw Error(ErrorCode::ZeroEntry, "pmf entries must be strictly positive");
    s += x;
  }
  if (std::fabs(static_cast<double>(s) - 1.0) > 1e-12) throw Error(ErrorCode::RowSumMismatch, "pmf does not sum to 1");
}

FinitePmf FinitePmf::uniform(std::size_t n) { return FinitePmf(std::vector<double>(n, 1.0 / n)); }

bool majorizes(std::span<const double> mu, std::span<const double> nu, double tol) {
  std::vector<double> a(mu.begin(), mu.end()), b(nu.begin(), nu.end());
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  std::size_t n = std::max(a.size(), b.size());
  a.resize(n, 0.0);
  b.resize(n, 0.0);
  long double sa = 0.0L, sb = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa < sb - tol) return false;
  }
  return true;
}

bool majorizes(const FinitePmf& mu, const FinitePmf& nu, double tol) { return majorizes(mu.probs(), nu.probs(), tol); }

double renyi_entropy(const FinitePmf& mu, double alpha) {
  const auto& p = mu.probs();
  if (std::isnan(alpha)) throw Error(ErrorCode::DomainError, "alpha is NaN");
  if (alpha == INFINITY) return -std::log(*std::max_element(p.begin(), p.end()));
  if (alpha == -INFINITY) return -std::log(*std::min_element(p.begin(), p.end()));
  if (alpha == 0.0) return std::log(static_cast<double>(p.size()));
  double shannon = 0.0;
  for (double x : p) shannon -= x * std::log(x);
  if (std::fabs(alpha - 1.0) < 1e-8) {
    // H(alpha) = H(1) - (alpha - 1) Var(log mu) / 2 + ...
    double m = -shannon, v = 0.0;
    for (double x : p) v += x * (std::log(x) - m) * (std::log(x) - m);
    return shannon - (alpha - 1.0) * v / 2.0;
  }
  double mx = -INFINITY;
  for (double x : p) mx = std::max(mx, alpha * std::log(x));
  double s = 0.0;
  for (double x : p) s += std::exp(alpha * std::log(x) - mx);
  return (mx + std::log(s)) / (1.0 - alpha);
}

double renyi_entropy_slope_at_zero(const FinitePmf& mu) {
  double s = 0.0;
  for (double x : mu.probs()) s += std::log(x);
  double n = static_cast<double>(mu.size());
  return std::log(n) + s / n;
}

FiniteExperiment uniform_pairing(const FinitePmf& mu) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < mu.size(); ++i) names.push_back("s" + std::to_string(i + 1));
  return FiniteExperiment(std::move(names), std::vector<double>(mu.size(), 1.0 / mu.size()), mu.probs());
}

std::vector<double> pmf_power(std::span<const double> mu, int n, std::size_t cap) {
  if (n < 1) throw Error(ErrorCode::DomainError, "n must be positive");
  if (std::pow(static_cast<double>(mu.size()), n) > static_cast<double>(cap))
    throw Error(ErrorCode::SizeOverflow, "product pmf exceeds cap");
  std::vector<double> out(mu.begin(), mu.end());
  for (int k = 1; k < n; ++k) {
    std::vector<double> next;
    next.reserve(out.size() * mu.size());
    for (double a : out)
      for (double b : mu) next.push_back(a * b);
    out.swap(next);
  }
  return out;
}

JensenReport jensen_check(const FinitePmf& mu, const FinitePmf& nu, const JensenOptions& opts) {
  if (mu.size() != nu.size()) throw Error(ErrorCode::SupportMismatch, "support sizes differ");
  JensenReport rep;
  rep.generic = std::fabs(renyi_entropy(mu, INFINITY) - renyi_entropy(nu, INFINITY)) > opts.tol &&
                std::fabs(renyi_entropy(mu, -INFINITY) - renyi_entropy(nu, -INFINITY)) > opts.tol;

  // positive orders down to 2^-6 and the infinite end, mirrored for negative orders
  std::vector<double> alphas;
  const double lo = std::log(1.0 / 64.0), hi = std::log(opts.alpha_max);
  for (int i = 0; i < opts.grid_points; ++i) alphas.push_back(std::exp(lo + (hi - lo) * i / (opts.grid_points - 1)));
  alphas.push_back(INFINITY);

  bool holds = true;
  auto fail = [&](const char* part, double alpha, double gap) {
    if (holds) rep.failed_part = part, rep.witness_alpha = alpha, rep.witness_gap = gap;
    holds = false;
    if (gap < -opts.tol) rep.strict_reversal = true;
  };
  for (double a : alphas) {
    // want H_mu < H_nu for a > 0 and H_mu > H_nu for a < 0; gaps are signed so positive is good
    double gp = renyi_entropy(nu, a) - renyi_entropy(mu, a);
    if (!(gp > opts.tol)) fail("alpha>0", a, gp);
    double gn = renyi_entropy(mu, -a) - renyi_entropy(nu, -a);
    if (!(gn > opts.tol)) fail("alpha<0", -a, gn);
  }
  double gs = renyi_entropy_slope_at_zero(nu) - renyi_entropy_slope_at_zero(mu);
  if (!(gs > opts.tol)) fail("slope", 0.0, gs);
  rep.condition_holds = holds;

  for (int n = 1; n <= opts.cap; ++n) {
    auto a = pmf_power(mu.probs(), n, opts.size_cap);
    auto b = pmf_power(nu.probs(), n, opts.size_cap);
    bool fwd = majorizes(a, b), back = majorizes(b, a);
    rep.majorizes_at_n.push_back(fwd);
    rep.strict_at_n.push_back(fwd && !back);
  }
  for (int n = opts.cap; n >= 1 && rep.strict_at_n[n - 1]; --n) rep.suffix_start = n;
  bool any = std::find(rep.majorizes_at_n.begin(), rep.majorizes_at_n.end(), true) != rep.majorizes_at_n.end();
  rep.consistent = !(rep.strict_reversal && any);
  return rep;
}

}  // namespace blackwell
