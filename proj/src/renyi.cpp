#include "blackwell/renyi.hpp"

#include <algorithm>
#include <cmath>

#include "blackwell/error.hpp"

namespace blackwell {

namespace {

struct Term {
  double x;
  double c;
};

// coefficients of E[e^{sX}] - E[e^{sY}] with shared exponents merged
std::vector<Term> exp_poly_terms(const AtomicDistribution& x, const AtomicDistribution& y) {
  std::vector<Term> raw;
  for (const auto& a : x.atoms()) raw.push_back({a.value, a.prob});
  for (const auto& a : y.atoms()) raw.push_back({a.value, -a.prob});
  std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) { return a.x < b.x; });
  std::vector<Term> out;
  std::size_t i = 0;
  while (i < raw.size()) {
    double anchor = raw[i].x, c = 0.0, scale = 0.0;
    std::size_t j = i;
    for (; j < raw.size() && merge_close(anchor, raw[j].x); ++j) {
      c += raw[j].c;
      scale += std::fabs(raw[j].c);
    }
    if (std::fabs(c) > 1e-14 * scale) out.push_back({anchor, c});
    i = j;
  }
  return out;
}

}  // namespace

std::string to_string(RenyiVerdictKind kind) {
  switch (kind) {
    case RenyiVerdictKind::DominatesOnGrid: return "DominatesOnGrid";
    case RenyiVerdictKind::FailsAt: return "FailsAt";
    case RenyiVerdictKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

double renyi_divergence(const AtomicDistribution& x, double t) {
  if (!(t > 0.0)) throw Error(ErrorCode::DomainError, "Renyi order must be positive");
  if (std::isinf(t)) return x.max();
  double s = t - 1.0;
  if (std::fabs(s) < kNearOne) return x.mean() + s * x.variance() / 2.0;
  return x.log_mgf(s) / s;
}

double renyi_divergence(std::span<const double> mu, std::span<const double> nu, double t) {
  if (mu.size() != nu.size()) throw Error(ErrorCode::DimensionMismatch, "pmfs differ in length");
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (!(mu[i] > 0.0 && nu[i] > 0.0)) throw Error(ErrorCode::ZeroEntry, "pmfs must be strictly positive");
    atoms.push_back({std::log(mu[i]) - std::log(nu[i]), mu[i]});
  }
  return renyi_divergence(AtomicDistribution::from_atoms(std::move(atoms), 0.0), t);
}

RenyiSource RenyiSource::from_experiment(const FiniteExperiment& p) {
  return from_llr(llr_distribution(p, State::Zero), llr_distribution(p, State::One));
}

RenyiSource RenyiSource::from_llr(AtomicDistribution x0, AtomicDistribution x1) {
  RenyiSource r;
  r.name_ = "atomic";
  r.sup_[0] = x0.max();
  r.sup_[1] = x1.max();
  r.x_[0] = std::move(x0);
  r.x_[1] = std::move(x1);
  return r;
}

RenyiSource RenyiSource::closed_form(std::string name, Curve curve, double sup0, double sup1) {
  RenyiSource r;
  r.name_ = std::move(name);
  r.curve_ = std::move(curve);
  r.sup_[0] = sup0;
  r.sup_[1] = sup1;
  return r;
}

const AtomicDistribution& RenyiSource::llr(State s) const {
  if (!atomic()) throw Error(ErrorCode::PreconditionFailed, "closed-form source has no atoms");
  return x_[index(s)];
}

double RenyiSource::divergence(State s, double t) const {
  if (!(t > 0.0)) throw Error(ErrorCode::DomainError, "Renyi order must be positive");
  if (std::isinf(t)) return sup_[index(s)];
  if (curve_) return curve_(s, t);
  return renyi_divergence(x_[index(s)], t);
}

double RenyiSource::sup(State s) const { return sup_[index(s)]; }

bool RenyiSource::trivial(double tol) const {
  if (atomic()) return std::max(std::fabs(x_[1].min()), std::fabs(x_[1].max())) <= tol;
  return kl(State::One) <= tol;
}

std::vector<double> renyi_grid(double t_max, int grid_points) {
  if (!(t_max >= 1.0)) throw Error(ErrorCode::DomainError, "t_max must be at least 1");
  if (grid_points < 3) throw Error(ErrorCode::DomainError, "need at least 3 grid points");
  std::vector<double> g(grid_points);
  const double span = std::log(2.0 * t_max);
  for (int i = 0; i < grid_points; ++i) g[i] = 0.5 * std::exp(span * i / (grid_points - 1));
  g.front() = 0.5;
  g.back() = t_max;
  std::vector<double> extra;
  auto pinned = [](double v) { return v == 0.5 || v == 1.0 || v == 2.0; };
  for (double target : {1.0, 2.0}) {
    if (target > t_max) continue;
    std::size_t k = 0;
    for (std::size_t i = 1; i < g.size(); ++i)
      if (std::fabs(std::log(g[i] / target)) < std::fabs(std::log(g[k] / target))) k = i;
    if (g[k] == target) continue;
    if (k == 0 || k + 1 == g.size() || pinned(g[k]))
      extra.push_back(target);
    else
      g[k] = target;
  }
  g.insert(g.end(), extra.begin(), extra.end());
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

RenyiProfile renyi_profile(const RenyiSource& p, State theta, double t_max, int grid_points) {
  RenyiProfile prof{theta, renyi_grid(t_max, grid_points), {}, p.sup(theta)};
  prof.values.reserve(prof.grid.size());
  for (double t : prof.grid) prof.values.push_back(p.divergence(theta, t));
  return prof;
}

RenyiProfile renyi_profile(const FiniteExperiment& p, State theta, double t_max, int grid_points) {
  return renyi_profile(RenyiSource::from_experiment(p), theta, t_max, grid_points);
}

double exp_poly_margin(const AtomicDistribution& x, const AtomicDistribution& y, double s) {
  auto terms = exp_poly_terms(x, y);
  if (terms.empty()) return 0.0;
  double xm = 0.0;
  for (const auto& k : terms) xm = std::max(xm, std::fabs(k.x));
  if (s == 0.0) {
    double num = 0.0, den = 0.0;
    for (const auto& k : terms) {
      num += k.c * k.x;
      den += std::fabs(k.c);
    }
    return num / den;
  }
  if (std::fabs(s) * xm < 30.0) {
    // sum c_k = 0, so g(s)/s = sum c_k x_k (e^{s x_k} - 1)/(s x_k)
    double num = 0.0, den = 0.0;
    for (const auto& k : terms) {
      double z = s * k.x;
      num += k.c * k.x * (z == 0.0 ? 1.0 : std::expm1(z) / z);
      den += std::fabs(k.c) * std::exp(z);
    }
    return num / den;
  }
  double m = -INFINITY;
  for (const auto& k : terms) m = std::max(m, s * k.x);
  double num = 0.0, den = 0.0;
  for (const auto& k : terms) {
    double e = std::exp(s * k.x - m);
    num += k.c * e;
    den += std::fabs(k.c) * e;
  }
  return num / (den * s);
}

RenyiVerdict renyi_order_check(const RenyiSource& p, const RenyiSource& q, const RenyiGridOptions& opts) {
  const auto grid = renyi_grid(opts.t_max, opts.grid_points);
  const bool exact_sign = p.atomic() && q.atomic();
  RenyiVerdict strict, tie, bad;
  bool have_strict = false, have_tie = false, have_bad = false;

  auto record = [&](State theta, double t, double gap, double margin) {
    RenyiVerdict v{RenyiVerdictKind::FailsAt, theta, t, gap, margin, opts.t_max, opts.grid_points};
    if (!std::isfinite(margin)) {
      if (!have_bad) bad = v, bad.kind = RenyiVerdictKind::Inconclusive, have_bad = true;
    } else if (margin < -opts.tol) {
      if (!have_strict) strict = v, have_strict = true;
    } else if (margin <= opts.tol) {
      if (!have_tie) tie = v, have_tie = true;
    }
  };

  for (State theta : {State::Zero, State::One}) {
    for (double t : grid) {
      double gap = p.divergence(theta, t) - q.divergence(theta, t);
      double margin = exact_sign ? exp_poly_margin(p.llr(theta), q.llr(theta), t - 1.0) : gap;
      record(theta, t, gap, margin);
    }
    // weak at infinity: shared maxima are allowed
    double top = p.sup(theta) - q.sup(theta);
    if (!std::isfinite(top))
      record(theta, kInfinity, top, top);
    else if (top < -opts.tol)
      record(theta, kInfinity, top, top);
    // t -> 0+: R^theta(t) / t tends to the KL divergence of the other state
    State o = other(theta);
    double kl_gap = p.kl(o) - q.kl(o);
    record(theta, 0.0, kl_gap, exact_sign ? exp_poly_margin(p.llr(o), q.llr(o), 0.0) : kl_gap);
  }

  if (have_strict) return strict;
  if (have_tie) return tie;
  if (have_bad) return bad;
  RenyiVerdict ok;
  ok.kind = RenyiVerdictKind::DominatesOnGrid;
  ok.t_max = opts.t_max;
  ok.grid_points = opts.grid_points;
  return ok;
}

RenyiVerdict renyi_order_check(const FiniteExperiment& p, const FiniteExperiment& q, const RenyiGridOptions& opts) {
  return renyi_order_check(RenyiSource::from_experiment(p), RenyiSource::from_experiment(q), opts);
}

DominanceRatio dominance_ratio(const RenyiSource& p, const RenyiSource& q, const RenyiGridOptions& opts) {
  if (p.trivial() || q.trivial()) throw Error(ErrorCode::TrivialExperiment, "dominance ratio needs non-trivial experiments");
  DominanceRatio best{kInfinity, State::Zero, 0.0, opts.t_max, opts.grid_points};
  const auto grid = renyi_grid(opts.t_max, opts.grid_points);
  for (State theta : {State::Zero, State::One}) {
    for (double t : grid) {
      double r = p.divergence(theta, t) / q.divergence(theta, t);
      if (r < best.value) best.value = r, best.theta = theta, best.t = t;
    }
    double r = p.sup(theta) / q.sup(theta);
    if (r < best.value) best.value = r, best.theta = theta, best.t = kInfinity;
  }
  return best;
}

DominanceRatio dominance_ratio(const FiniteExperiment& p, const FiniteExperiment& q, const RenyiGridOptions& opts) {
  return dominance_ratio(RenyiSource::from_experiment(p), RenyiSource::from_experiment(q), opts);
}

}  // namespace blackwell
