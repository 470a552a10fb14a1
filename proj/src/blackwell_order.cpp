#include "blackwell/blackwell_order.hpp"

#include <algorithm>
#include <cmath>

#include "blackwell/error.hpp"

namespace blackwell {

PiecewiseExpCurve::PiecewiseExpCurve(std::vector<double> breakpoints, std::vector<Segment> segments)
    : breakpoints_(std::move(breakpoints)), segments_(std::move(segments)) {
  if (segments_.size() != breakpoints_.size() + 1)
    throw Error(ErrorCode::DimensionMismatch, "curve needs one more segment than breakpoints");
}

double PiecewiseExpCurve::segment_value(std::size_t i, double a) const {
  const auto& s = segments_[i];
  return s.alpha + (std::isinf(s.log_beta) ? 0.0 : std::exp(a + s.log_beta));
}

double PiecewiseExpCurve::operator()(double a) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), a);
  return segment_value(static_cast<std::size_t>(it - breakpoints_.begin()), a);
}

PiecewiseExpCurve perfected_cdf(const AtomicDistribution& f1) {
  const auto& atoms = f1.atoms();
  const std::size_t k = atoms.size();
  if (k == 0) throw Error(ErrorCode::InvalidLlr, "empty distribution");
  // suffix[i] = log sum_{j >= i} e^{-u_j} p_j
  std::vector<double> suffix(k + 1, -INFINITY);
  for (std::size_t i = k; i-- > 0;) {
    double term = std::log(atoms[i].prob) - atoms[i].value;
    double m = std::max(term, suffix[i + 1]);
    suffix[i] = std::isinf(suffix[i + 1]) ? term : m + std::log(std::exp(term - m) + std::exp(suffix[i + 1] - m));
  }
  if (std::fabs(std::exp(suffix[0]) - 1.0) > 1e-6)
    throw Error(ErrorCode::InvalidLlr, "change-of-measure sum is " + std::to_string(std::exp(suffix[0])));
  std::vector<double> br;
  std::vector<PiecewiseExpCurve::Segment> seg;
  br.reserve(k);
  seg.reserve(k + 1);
  seg.push_back({0.0, suffix[0]});
  double cum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    cum += atoms[i].prob;
    br.push_back(atoms[i].value);
    seg.push_back({cum, suffix[i + 1]});
  }
  return PiecewiseExpCurve(std::move(br), std::move(seg));
}

FosdCheck curve_below(const PiecewiseExpCurve& f, const PiecewiseExpCurve& g, double tol, double from) {
  FosdCheck out;
  out.worst_gap = -INFINITY;
  auto visit = [&](double a) {
    double d = f(a) - g(a);
    if (d > out.worst_gap) out.worst_gap = d, out.witness = a;
  };
  if (std::isfinite(from)) visit(from);
  for (double a : f.breakpoints())
    if (a >= from) visit(a);
  for (double a : g.breakpoints())
    if (a >= from) visit(a);
  if (std::isinf(out.worst_gap)) out.worst_gap = 0.0;
  out.holds = out.worst_gap <= tol;
  return out;
}

bool fosd_perfected(const FiniteExperiment& p, const FiniteExperiment& q, double tol) {
  return curve_below(perfected_cdf(llr_distribution(p, State::One)), perfected_cdf(llr_distribution(q, State::One)),
                     tol)
      .holds;
}

bool cdf_below(const AtomicDistribution& f, const AtomicDistribution& g, double from, double tol) {
  auto check = [&](double a) { return f.cdf(a) <= g.cdf(a) + tol; };
  if (!check(from)) return false;
  for (const auto& at : f.atoms())
    if (at.value >= from && !check(at.value)) return false;
  for (const auto& at : g.atoms())
    if (at.value >= from && !check(at.value)) return false;
  return true;
}

double lambda(const PosteriorDistribution& pi, double p) {
  double s = 0.0;
  for (const auto& a : pi.atoms()) {
    if (a.belief > p) break;
    s += a.prob * (p - a.belief);
  }
  return s;
}

namespace {

// Lambda at sorted query points by a single sweep
std::vector<double> lambda_at(const PosteriorDistribution& pi, const std::vector<double>& pts) {
  std::vector<double> out;
  out.reserve(pts.size());
  const auto& atoms = pi.atoms();
  std::size_t j = 0;
  double mass = 0.0, moment = 0.0;
  for (double p : pts) {
    while (j < atoms.size() && atoms[j].belief <= p) {
      mass += atoms[j].prob;
      moment += atoms[j].prob * atoms[j].belief;
      ++j;
    }
    out.push_back(p * mass - moment);
  }
  return out;
}

}  // namespace

bool mps_check(const PosteriorDistribution& pi, const PosteriorDistribution& tau, double tol) {
  if (std::fabs(pi.mean() - tau.mean()) > 1e-9)
    throw Error(ErrorCode::MeanMismatch, "posterior means differ");
  std::vector<double> pts;
  for (const auto& a : pi.atoms()) pts.push_back(a.belief);
  for (const auto& a : tau.atoms()) pts.push_back(a.belief);
  std::sort(pts.begin(), pts.end());
  auto lp = lambda_at(pi, pts);
  auto lt = lambda_at(tau, pts);
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (lp[i] < lt[i] - tol) return false;
  return true;
}

std::string to_string(BlackwellVerdict v) {
  switch (v) {
    case BlackwellVerdict::Dominates: return "Dominates";
    case BlackwellVerdict::DominatedBy: return "DominatedBy";
    case BlackwellVerdict::Equivalent: return "Equivalent";
    case BlackwellVerdict::Incomparable: return "Incomparable";
  }
  return "?";
}

bool weakly_dominates(BlackwellVerdict v) {
  return v == BlackwellVerdict::Dominates || v == BlackwellVerdict::Equivalent;
}

namespace {

BlackwellVerdict classify(bool pq, bool qp) {
  if (pq && qp) return BlackwellVerdict::Equivalent;
  if (pq) return BlackwellVerdict::Dominates;
  if (qp) return BlackwellVerdict::DominatedBy;
  return BlackwellVerdict::Incomparable;
}

}  // namespace

BlackwellComparison compare_llr(const AtomicDistribution& f1, const AtomicDistribution& g1, double tol) {
  auto f = perfected_cdf(f1);
  auto g = perfected_cdf(g1);
  auto pq = curve_below(f, g, tol);
  auto qp = curve_below(g, f, tol);
  BlackwellComparison c;
  c.p_over_q = pq.holds;
  c.q_over_p = qp.holds;
  c.gap_pq = pq.worst_gap;
  c.witness_pq = pq.witness;
  c.gap_qp = qp.worst_gap;
  c.witness_qp = qp.witness;
  c.verdict = classify(c.p_over_q, c.q_over_p);
  return c;
}

BlackwellComparison blackwell_dominates(const FiniteExperiment& p, const FiniteExperiment& q, BlackwellMode mode,
                                        double tol) {
  if (mode == BlackwellMode::Mps) {
    auto pi = posterior_distribution(p), tau = posterior_distribution(q);
    BlackwellComparison c;
    c.p_over_q = mps_check(pi, tau, tol);
    c.q_over_p = mps_check(tau, pi, tol);
    c.verdict = classify(c.p_over_q, c.q_over_p);
    return c;
  }
  auto c = compare_llr(llr_distribution(p, State::One), llr_distribution(q, State::One), tol);
  if (mode == BlackwellMode::CrossValidate) {
    auto pi = posterior_distribution(p), tau = posterior_distribution(q);
    bool a = mps_check(pi, tau, tol), b = mps_check(tau, pi, tol);
    if (a != c.p_over_q || b != c.q_over_p)
      throw Error(ErrorCode::OracleDisagreement, "perfected-cdf and posterior-spread checks disagree");
  }
  return c;
}

bool verify_garbling(const FiniteExperiment& p, const FiniteExperiment& q, const Garbling& sigma, double tol) {
  auto g = garble(p, sigma);
  if (g.size() != q.size()) return false;
  std::vector<bool> used(q.size(), false);
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < q.size() && !found; ++j) {
      if (used[j]) continue;
      if (std::fabs(g.p0()[i] - q.p0()[j]) <= tol && std::fabs(g.p1()[i] - q.p1()[j]) <= tol) used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

ConvexUtility ConvexUtility::from_kinks(std::vector<std::pair<double, double>> kinks) {
  if (kinks.empty()) throw Error(ErrorCode::DomainError, "utility needs at least one kink");
  std::sort(kinks.begin(), kinks.end());
  for (std::size_t i = 1; i < kinks.size(); ++i)
    if (!(kinks[i].first > kinks[i - 1].first)) throw Error(ErrorCode::DomainError, "duplicate kink belief");
  double prev = -INFINITY;
  for (std::size_t i = 1; i < kinks.size(); ++i) {
    double slope = (kinks[i].second - kinks[i - 1].second) / (kinks[i].first - kinks[i - 1].first);
    if (slope < prev - 1e-12 * std::max(1.0, std::fabs(prev)))
      throw Error(ErrorCode::NonConvexUtility, "slopes decrease at belief " + std::to_string(kinks[i - 1].first));
    prev = slope;
  }
  ConvexUtility v;
  v.kinks_ = std::move(kinks);
  return v;
}

double ConvexUtility::operator()(double p) const {
  if (kinks_.size() == 1) return kinks_.front().second;
  auto it = std::upper_bound(kinks_.begin(), kinks_.end(), p,
                             [](double x, const std::pair<double, double>& k) { return x < k.first; });
  std::size_t hi = static_cast<std::size_t>(it - kinks_.begin());
  hi = std::clamp<std::size_t>(hi, 1, kinks_.size() - 1);
  const auto& a = kinks_[hi - 1];
  const auto& b = kinks_[hi];
  return a.second + (b.second - a.second) * (p - a.first) / (b.first - a.first);
}

double expected_indirect_utility(const PosteriorDistribution& pi, const ConvexUtility& v) {
  double s = 0.0;
  for (const auto& a : pi.atoms()) s += a.prob * v(a.belief);
  return s;
}

double expected_indirect_utility(const FiniteExperiment& p, const ConvexUtility& v) {
  return expected_indirect_utility(posterior_distribution(p), v);
}

}  // namespace blackwell
