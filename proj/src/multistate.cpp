#include "blackwell/multistate.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "blackwell/error.hpp"

namespace blackwell {

MultiStateExperiment::MultiStateExperiment(std::vector<std::vector<double>> probs) : probs_(std::move(probs)) {
  if (probs_.size() < 2) throw Error(ErrorCode::DimensionMismatch, "need at least two states");
  const std::size_t m = probs_.front().size();
  if (m == 0) throw Error(ErrorCode::DimensionMismatch, "no outcomes");
  for (auto& row : probs_) {
    if (row.size() != m) throw Error(ErrorCode::DimensionMismatch, "rows differ in length");
    long double s = 0.0L;
    for (double x : row) {
      if (!(x > 0.0)) throw Error(ErrorCode::ZeroEntry, "entries must be strictly positive");
      s += x;
    }
    if (std::fabs(static_cast<double>(s) - 1.0) > 1e-12) throw Error(ErrorCode::RowSumMismatch, "row does not sum to 1");
    for (double& x : row) x = static_cast<double>(x / s);
  }
}

std::vector<std::vector<double>> MultiStateExperiment::pair(std::size_t i, std::size_t j) const {
  if (i >= states() || j >= states()) throw Error(ErrorCode::IndexError, "state index out of range");
  return {probs_[i], probs_[j]};
}

MultiStateExperiment multistate_product(const MultiStateExperiment& a, const MultiStateExperiment& b) {
  if (a.states() != b.states()) throw Error(ErrorCode::StateMismatch, "state counts differ");
  std::vector<std::vector<double>> rows(a.states());
  for (std::size_t s = 0; s < a.states(); ++s) {
    long double total = 0.0L;
    for (double x : a.probs()[s])
      for (double y : b.probs()[s]) rows[s].push_back(x * y), total += x * y;
    for (double& x : rows[s]) x = static_cast<double>(x / total);
  }
  return MultiStateExperiment(std::move(rows));
}

MultiStateExperiment multistate_power(const MultiStateExperiment& a, int n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "n must be positive");
  MultiStateExperiment out = a;
  for (int k = 1; k < n; ++k) out = multistate_product(out, a);
  return out;
}

double multistate_log_mgf(const MultiStateExperiment& e, std::size_t i, std::span<const double> t) {
  if (i >= e.states()) throw Error(ErrorCode::IndexError, "state " + std::to_string(i) + " out of range");
  if (t.size() + 1 != e.states()) throw Error(ErrorCode::DimensionMismatch, "t needs one entry per other state");
  std::vector<double> expo(e.outcomes());
  double mx = -INFINITY;
  for (std::size_t w = 0; w < e.outcomes(); ++w) {
    double li = std::log(e.prob(i, w));
    double z = li;
    for (std::size_t j = 0, k = 0; j < e.states(); ++j) {
      if (j == i) continue;
      z += t[k++] * (li - std::log(e.prob(j, w)));
    }
    expo[w] = z;
    mx = std::max(mx, z);
  }
  double s = 0.0;
  for (double z : expo) s += std::exp(z - mx);
  return mx + std::log(s);
}

double multistate_mgf(const MultiStateExperiment& e, std::size_t i, std::span<const double> t) {
  return std::exp(multistate_log_mgf(e, i, t));
}

std::string to_string(Curvature c) {
  switch (c) {
    case Curvature::Convex: return "Convex";
    case Curvature::Concave: return "Concave";
    case Curvature::Neither: return "Neither";
  }
  return "?";
}

CurvatureResult v_convexity(std::span<const double> alpha) {
  if (alpha.size() < 2) throw Error(ErrorCode::DomainError, "need at least two exponents");
  double s = 0.0;
  for (double a : alpha) s += a;
  if (std::fabs(s - 1.0) > 1e-9) throw Error(ErrorCode::DomainError, "exponents must sum to 1");
  if (!(alpha[0] > 0.0)) throw Error(ErrorCode::DomainError, "alpha_0 must be positive");
  auto rest = alpha.subspan(1);
  bool nonpos = std::all_of(rest.begin(), rest.end(), [](double a) { return a <= 0.0; });
  bool nonneg = std::all_of(rest.begin(), rest.end(), [](double a) { return a >= 0.0; });
  if (nonpos) return {Curvature::Convex, std::all_of(rest.begin(), rest.end(), [](double a) { return a < 0.0; })};
  if (nonneg) return {Curvature::Concave, std::all_of(rest.begin(), rest.end(), [](double a) { return a > 0.0; })};
  return {Curvature::Neither, false};
}

double v_second_derivative(std::span<const double> alpha, std::span<const double> p, std::span<const double> x) {
  if (alpha.size() != p.size() || p.size() != x.size()) throw Error(ErrorCode::DimensionMismatch, "length mismatch");
  double lin = 0.0, quad = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    lin += alpha[i] * x[i] / p[i];
    quad += alpha[i] * x[i] * x[i] / (p[i] * p[i]);
  }
  return lin * lin - quad;
}

MultiStateReport multistate_necessary(const MultiStateExperiment& p, const MultiStateExperiment& q,
                                      const MultiStateOptions& opts) {
  if (p.states() != q.states()) throw Error(ErrorCode::StateMismatch, "state counts differ");
  const std::size_t states = p.states(), k = states - 1;
  MultiStateReport rep;

  auto llr_range = [](const MultiStateExperiment& e, std::size_t i, std::size_t j) {
    double lo = INFINITY, hi = -INFINITY;
    for (std::size_t w = 0; w < e.outcomes(); ++w) {
      double l = std::log(e.prob(i, w)) - std::log(e.prob(j, w));
      lo = std::min(lo, l), hi = std::max(hi, l);
    }
    return std::pair{lo, hi};
  };
  rep.generic = true;
  for (std::size_t i = 0; i < states; ++i)
    for (std::size_t j = 0; j < states; ++j) {
      if (i == j) continue;
      auto [pl, ph] = llr_range(p, i, j);
      auto [ql, qh] = llr_range(q, i, j);
      if (std::fabs(pl - ql) <= opts.tol || std::fabs(ph - qh) <= opts.tol) rep.generic = false;
    }

  // directions in the nonnegative orthant with unit l1 norm; axes first
  std::mt19937_64 rng(opts.seed);
  std::exponential_distribution<double> expo(1.0);
  std::vector<std::vector<double>> dirs;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<double> d(k, 0.0);
    d[j] = 1.0;
    dirs.push_back(d);
  }
  for (int r = 0; r < opts.directions; ++r) {
    std::vector<double> d(k);
    double s = 0.0;
    for (auto& x : d) s += (x = expo(rng));
    for (auto& x : d) x /= s;
    dirs.push_back(d);
  }
  std::vector<double> pos_scale, neg_scale;
  for (int m = 0; m < opts.magnitudes; ++m) {
    double u = opts.magnitudes == 1 ? 0.5 : static_cast<double>(m) / (opts.magnitudes - 1);
    pos_scale.push_back(0.05 * std::pow(400.0, u));
    neg_scale.push_back(0.05 + 0.9 * u);
  }

  auto fail = [&](const char* part, std::size_t i, std::size_t j, const std::vector<double>& t, double gap) {
    if (rep.witness_part.empty()) {
      rep.witness_part = part;
      rep.witness_state = i;
      rep.witness_other = j;
      rep.witness_t = t;
      rep.witness_gap = gap;
    }
  };

  for (std::size_t i = 0; i < states; ++i) {
    for (const auto& d : dirs) {
      for (double s : pos_scale) {
        std::vector<double> t(k);
        for (std::size_t j = 0; j < k; ++j) t[j] = s * d[j];
        double gap = multistate_log_mgf(p, i, t) - multistate_log_mgf(q, i, t);
        if (!(gap > opts.tol)) rep.cond_i = false, fail("i", i, i, t, gap);
      }
      for (double s : neg_scale) {
        std::vector<double> t(k);
        for (std::size_t j = 0; j < k; ++j) t[j] = -s * d[j];
        double gap = multistate_log_mgf(q, i, t) - multistate_log_mgf(p, i, t);
        if (!(gap > opts.tol)) rep.cond_ii = false, fail("ii", i, i, t, gap);
      }
    }
  }
  auto kl = [](const MultiStateExperiment& e, std::size_t i, std::size_t j) {
    double s = 0.0;
    for (std::size_t w = 0; w < e.outcomes(); ++w)
      s += e.prob(i, w) * (std::log(e.prob(i, w)) - std::log(e.prob(j, w)));
    return s;
  };
  for (std::size_t i = 0; i < states; ++i)
    for (std::size_t j = 0; j < states; ++j) {
      if (i == j) continue;
      double gap = kl(p, i, j) - kl(q, i, j);
      if (!(gap > opts.tol)) rep.cond_iii = false, fail("iii", i, j, {}, gap);
    }
  return rep;
}

FalsifierResult multistate_falsifier(const MultiStateExperiment& p, const MultiStateExperiment& q, int trials,
                                     std::uint64_t seed, int pieces, double tol) {
  if (p.states() != q.states()) throw Error(ErrorCode::StateMismatch, "state counts differ");
  const std::size_t states = p.states();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto value = [&](const MultiStateExperiment& e, const std::vector<std::vector<double>>& a) {
    // uniform prior: sum_w max_l sum_i a_li P_i(w) / (k+1)
    double v = 0.0;
    for (std::size_t w = 0; w < e.outcomes(); ++w) {
      double best = -INFINITY;
      for (const auto& row : a) {
        double z = 0.0;
        for (std::size_t i = 0; i < states; ++i) z += row[i] * e.prob(i, w);
        best = std::max(best, z);
      }
      v += best;
    }
    return v / static_cast<double>(states);
  };
  FalsifierResult res;
  for (int r = 0; r < trials; ++r) {
    std::vector<std::vector<double>> a(pieces, std::vector<double>(states));
    for (auto& row : a)
      for (auto& x : row) x = gauss(rng);
    double gap = value(q, a) - value(p, a);
    if (gap > tol) {
      res.refuted = true;
      res.gap = gap;
      res.trial = r;
      return res;
    }
  }
  return res;
}

}  // namespace blackwell
