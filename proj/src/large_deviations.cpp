#include "blackwell/large_deviations.hpp"

#include <algorithm>
#include <cmath>

#include "blackwell/error.hpp"

namespace blackwell {

namespace {

bool at_point(double a, double v) { return std::fabs(a - v) <= 1e-12 * std::max(1.0, std::fabs(v)); }

}  // namespace

double cgf(const AtomicDistribution& x, double t) { return x.log_mgf(t); }

double cgf_derivative(const AtomicDistribution& x, double t) { return x.tilted_mean(t); }

double rate_function(const AtomicDistribution& x, double a) {
  const auto& atoms = x.atoms();
  if (at_point(a, x.max())) return -std::log(atoms.back().prob);
  if (at_point(a, x.min())) return -std::log(atoms.front().prob);
  if (a < x.min() || a > x.max()) return INFINITY;
  double lo = -kFenchelBracket, hi = kFenchelBracket;
  if (x.tilted_mean(hi) <= a) {
    lo = hi;
  } else if (x.tilted_mean(lo) >= a) {
    hi = lo;
  } else {
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      (x.tilted_mean(mid) < a ? lo : hi) = mid;
    }
  }
  double t = 0.5 * (lo + hi);
  return std::max(0.0, t * a - x.log_mgf(t));
}

double fenchel(const AtomicDistribution& x, double a) {
  if (!(at_point(a, x.min()) || at_point(a, x.max())) && (a < x.min() || a > x.max()))
    throw Error(ErrorCode::OutOfSupport, "a = " + std::to_string(a) + " outside the support");
  return rate_function(x, a);
}

bool eta_admissible(const AtomicDistribution& x, const AtomicDistribution& y, State theta, double eta,
                    int grid_points, std::vector<EtaGridPoint>* grid) {
  if (!(x.mean() - eta > y.mean())) return false;
  auto sweep = [&](double lo, double hi, int condition) {
    if (lo > hi) return true;
    for (int i = 0; i < grid_points; ++i) {
      double a = grid_points == 1 ? lo : lo + (hi - lo) * i / (grid_points - 1);
      double kx, ky;
      bool ok;
      if (condition == 1) {
        kx = rate_function(x, a + eta);
        ky = rate_function(y, a);
        ok = std::isfinite(kx) && ky - eta > kx;
      } else {
        kx = rate_function(x, a);
        ky = rate_function(y, a - eta);
        ok = std::isfinite(ky) && ky < kx - eta;
      }
      if (!ok) return false;
      if (grid) grid->push_back({theta, condition, a, kx, ky});
    }
    return true;
  };
  return sweep(x.mean() - eta, y.max(), 1) && sweep(0.0, y.mean() + eta, 2);
}

EtaSearchResult eta_search(const FiniteExperiment& p, const FiniteExperiment& q, const EtaOptions& opts) {
  if (!is_generic_pair(p, q)) throw Error(ErrorCode::PreconditionFailed, "pair is not generic");
  auto rv = renyi_order_check(p, q, opts.renyi);
  if (rv.kind != RenyiVerdictKind::DominatesOnGrid)
    throw Error(ErrorCode::PreconditionFailed, "P does not dominate Q in the Renyi order on the grid");
  AtomicDistribution xs[2] = {llr_distribution(p, State::Zero), llr_distribution(p, State::One)};
  AtomicDistribution ys[2] = {llr_distribution(q, State::Zero), llr_distribution(q, State::One)};
  double eta = 1.0;
  for (int k = 1; k <= opts.ladder_depth; ++k) {
    eta *= 0.5;
    bool ok = true;
    for (int s = 0; s < 2 && ok; ++s) ok = eta_admissible(xs[s], ys[s], State(s), eta, opts.grid_points);
    if (!ok) continue;
    EtaSearchResult r{eta, {}};
    for (int s = 0; s < 2; ++s) eta_admissible(xs[s], ys[s], State(s), eta, opts.grid_points, &r.grid);
    return r;
  }
  throw Error(ErrorCode::NoEtaFound, "no eta down to 2^-" + std::to_string(opts.ladder_depth));
}

double support_bound(const FiniteExperiment& p, const FiniteExperiment& q) {
  double b = 0.0;
  for (State s : {State::Zero, State::One})
    for (const auto* e : {&p, &q}) {
      auto d = llr_distribution(*e, s);
      b = std::max({b, std::fabs(d.min()), std::fabs(d.max())});
    }
  return b;
}

LargeDeviationSummary sample_bound(const FiniteExperiment& p, const FiniteExperiment& q, const EtaOptions& opts) {
  auto r = eta_search(p, q, opts);
  double b = support_bound(p, q);
  return {b, r.eta, std::ceil(8.0 * b * b / (r.eta * r.eta * r.eta)), std::move(r.grid)};
}

double log_chernoff_bound(const AtomicDistribution& x, double a, int n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "n must be positive");
  if (a < x.mean() - 1e-12) throw Error(ErrorCode::DomainError, "Chernoff bound needs a >= E[X]");
  return -n * rate_function(x, a);
}

double chernoff_bound(const AtomicDistribution& x, double a, int n) { return std::exp(log_chernoff_bound(x, a, n)); }

double ld_lower_bound(const AtomicDistribution& x, double a, double eta, int n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "n must be positive");
  if (!(eta > 0.0)) throw Error(ErrorCode::DomainError, "eta must be positive");
  if (a < x.min() || !(a < x.max() - eta)) throw Error(ErrorCode::DomainError, "need a in [min X, max X - eta)");
  double b = std::max(std::fabs(x.min()), std::fabs(x.max()));
  double factor = 1.0 - 4.0 * b * b / (n * eta * eta);
  if (factor <= 0.0) return 0.0;
  return std::exp(-n * rate_function(x, a + eta)) * factor;
}

double exact_tail(const AtomicDistribution& x, int n, double a, bool strict, std::size_t cap) {
  auto s = convolution_power(x, n, cap);
  const double na = n * a;
  long double tail = 0.0L;
  for (const auto& at : s.atoms()) {
    bool tie = merge_close(at.value, na);
    if (strict ? (at.value > na && !tie) : (at.value >= na || tie)) tail += at.prob;
  }
  return static_cast<double>(tail);
}

}  // namespace blackwell
