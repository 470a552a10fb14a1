#include "blackwell/large_sample.hpp"

#include <cmath>

#include "blackwell/error.hpp"

namespace blackwell {

namespace {

bool generic_sources(const RenyiSource& p, const RenyiSource& q, double tol) {
  // min X^1 = -max X^0, so the two sups cover both endpoints
  return std::fabs(p.sup(State::One) - q.sup(State::One)) > tol &&
         std::fabs(p.sup(State::Zero) - q.sup(State::Zero)) > tol;
}

AtomicDistribution unit_atom() { return AtomicDistribution::from_atoms({{0.0, 1.0}}); }

}  // namespace

std::string to_string(LargeSampleKind kind) {
  switch (kind) {
    case LargeSampleKind::PredictDominates: return "PredictDominates";
    case LargeSampleKind::PredictNotDominates: return "PredictNotDominates";
    case LargeSampleKind::NonGeneric: return "NonGeneric";
  }
  return "?";
}

DominanceReport dominance_vector(const FiniteExperiment& p, const FiniteExperiment& q,
                                 const LargeSampleOptions& opts) {
  if (opts.cap < 1) throw Error(ErrorCode::DomainError, "cap must be positive");
  DominanceReport rep;
  rep.cap = opts.cap;
  rep.generic = is_generic_pair(p, q);
  rep.renyi_verdict = renyi_order_check(p, q, opts.renyi);

  const auto f = llr_distribution(p, State::One);
  const auto g = llr_distribution(q, State::One);
  auto fn = f, gn = g;
  for (int n = 1; n <= opts.cap; ++n) {
    if (n > 1) {
      fn = convolve(fn, f, opts.atom_cap);
      gn = convolve(gn, g, opts.atom_cap);
    }
    auto c = compare_llr(fn, gn, opts.tol);
    rep.vector.push_back(c.verdict);
    rep.worst_gap.push_back(c.gap_pq);
  }
  for (int n = opts.cap; n >= 1 && weakly_dominates(rep.vector[n - 1]); --n) rep.minimal_n = n;

  if (opts.compute_n0 && rep.generic && rep.renyi_verdict.kind == RenyiVerdictKind::DominatesOnGrid) {
    try {
      auto lds = sample_bound(p, q, opts.eta);
      rep.theory_n0 = lds.n0;
      rep.eta = lds.eta;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoEtaFound) throw;
    }
  }
  return rep;
}

LargeSampleVerdict large_sample_verdict(const RenyiSource& p, const RenyiSource& q, const LargeSampleOptions& opts) {
  LargeSampleVerdict v{LargeSampleKind::NonGeneric, std::nullopt, std::nullopt, {}};
  if (!generic_sources(p, q, opts.tol)) return v;
  v.renyi = renyi_order_check(p, q, opts.renyi);
  v.kind = v.renyi.kind == RenyiVerdictKind::DominatesOnGrid ? LargeSampleKind::PredictDominates
                                                             : LargeSampleKind::PredictNotDominates;
  return v;
}

LargeSampleVerdict large_sample_verdict(const FiniteExperiment& p, const FiniteExperiment& q,
                                        const LargeSampleOptions& opts) {
  auto v = large_sample_verdict(RenyiSource::from_experiment(p), RenyiSource::from_experiment(q), opts);
  if (v.kind == LargeSampleKind::PredictDominates && opts.compute_n0) {
    try {
      auto lds = sample_bound(p, q, opts.eta);
      v.n0 = lds.n0;
      v.eta = lds.eta;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoEtaFound) throw;
    }
  }
  return v;
}

BlackwellComparison compare_with_catalyst(const FiniteExperiment& p, const FiniteExperiment& q,
                                          const FiniteExperiment& r, double tol) {
  auto fr = llr_distribution(r, State::One);
  return compare_llr(convolve(llr_distribution(p, State::One), fr), convolve(llr_distribution(q, State::One), fr),
                     tol);
}

FiniteExperiment catalyst(const FiniteExperiment& p, const FiniteExperiment& q, int n, const CatalystOptions& opts) {
  if (n < 1) throw Error(ErrorCode::DomainError, "catalyst needs n >= 1");
  auto pre = compare_llr(power_llr(p, n, State::One), power_llr(q, n, State::One), opts.tol);
  if (!weakly_dominates(pre.verdict))
    throw Error(ErrorCode::PreconditionFailed, "P^" + std::to_string(n) + " does not dominate Q^" + std::to_string(n));

  const auto f = llr_distribution(p, State::One);
  const auto g = llr_distribution(q, State::One);
  std::vector<FiniteExperiment> parts;
  for (int j = 0; j < n; ++j) {
    if (opts.explicit_products) {
      FiniteExperiment qs = power(q, n - j, opts.cap);
      parts.push_back(j == 0 ? qs : product(power(p, j, opts.cap), qs, opts.cap));
    } else {
      auto lj = j == 0 ? unit_atom() : convolution_power(f, j);
      parts.push_back(experiment_from_llr(convolve(lj, convolution_power(g, n - j)), "s"));
    }
  }
  std::vector<double> w(n, 1.0 / n);
  auto r = mixture(parts, w);
  auto post = compare_with_catalyst(p, q, r, opts.tol);
  if (!weakly_dominates(post.verdict))
    throw Error(ErrorCode::OracleDisagreement, "catalyst postcondition failed, gap " + std::to_string(post.gap_pq));
  return r;
}

RatioSearchResult ratio_search(const FiniteExperiment& p, const FiniteExperiment& q, int n_max,
                               const LargeSampleOptions& opts) {
  if (n_max < 1) throw Error(ErrorCode::DomainError, "n_max must be positive");
  RatioSearchResult res;
  res.renyi_ratio = dominance_ratio(p, q, opts.renyi);
  const auto f = llr_distribution(p, State::One);
  const auto g = llr_distribution(q, State::One);
  std::vector<AtomicDistribution> gpow{unit_atom()};
  auto fn = f;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) fn = convolve(fn, f, opts.atom_cap);
    int m_hi = static_cast<int>(std::floor(n * res.renyi_ratio.value + 1e-6));
    while (static_cast<int>(gpow.size()) <= m_hi) gpow.push_back(convolve(gpow.back(), g, opts.atom_cap));
    int best = 0;
    for (int m = m_hi; m >= 1; --m) {
      if (weakly_dominates(compare_llr(fn, gpow[m], opts.tol).verdict)) {
        best = m;
        break;
      }
    }
    res.pairs.emplace_back(n, best);
    res.best_ratio = std::max(res.best_ratio, static_cast<double>(best) / n);
  }
  return res;
}

}  // namespace blackwell
