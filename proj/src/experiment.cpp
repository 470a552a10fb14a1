#include "blackwell/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "blackwell/error.hpp"

namespace blackwell {

namespace {

long double exact_sum(std::span<const double> xs) {
  long double s = 0.0L;
  for (double x : xs) s += x;
  return s;
}

// already normalized up to rounding: leave bits alone so reads round-trip
void renormalize(std::vector<double>& row) {
  long double s = exact_sum(row);
  if (std::fabs(static_cast<double>(s - 1.0L)) <= 4.0 * row.size() * std::numeric_limits<double>::epsilon()) return;
  for (double& x : row) x = static_cast<double>(x / s);
}

void check_row(std::vector<double>& row, const char* name) {
  for (double x : row) {
    if (std::isnan(x) || x > 1.0) throw Error(ErrorCode::DomainError, std::string(name) + " entry outside (0,1]");
    if (x <= 0.0) throw Error(ErrorCode::ZeroEntry, std::string(name) + " has a non-positive entry");
  }
  long double s = exact_sum(row);
  if (std::fabs(static_cast<double>(s) - 1.0) > kRowSumTolerance)
    throw Error(ErrorCode::RowSumMismatch, std::string(name) + " sums to " + std::to_string(static_cast<double>(s)));
  renormalize(row);
}

double binomial_count(int n, int k) {
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

}  // namespace

bool merge_close(double u, double v, double tol) {
  return std::fabs(u - v) <= tol * std::max({1.0, std::fabs(u), std::fabs(v)});
}

FiniteExperiment::FiniteExperiment(std::vector<std::string> outcomes, std::vector<double> p0, std::vector<double> p1)
    : outcomes_(std::move(outcomes)), p0_(std::move(p0)), p1_(std::move(p1)) {
  if (outcomes_.size() != p0_.size() || p0_.size() != p1_.size())
    throw Error(ErrorCode::DimensionMismatch, "outcomes, p0 and p1 must have equal length");
  if (outcomes_.empty()) throw Error(ErrorCode::DimensionMismatch, "experiment has no outcomes");
  std::unordered_set<std::string> seen;
  for (const auto& o : outcomes_)
    if (!seen.insert(o).second) throw Error(ErrorCode::DuplicateLabel, "duplicate outcome label '" + o + "'");
  check_row(p0_, "p0");
  check_row(p1_, "p1");
}

double FiniteExperiment::llr(std::size_t i, State s) const {
  double l = std::log(p1_[i]) - std::log(p0_[i]);
  return s == State::One ? l : -l;
}

FiniteExperiment make_experiment(std::vector<std::string> outcomes, std::vector<double> p0, std::vector<double> p1) {
  return FiniteExperiment(std::move(outcomes), std::move(p0), std::move(p1));
}

FiniteExperiment make_experiment(std::vector<double> p0, std::vector<double> p1) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < p0.size(); ++i) names.push_back("x" + std::to_string(i + 1));
  return FiniteExperiment(std::move(names), std::move(p0), std::move(p1));
}

AtomicDistribution AtomicDistribution::from_atoms(std::vector<Atom> raw, double merge_tol) {
  std::erase_if(raw, [](const Atom& a) { return !(a.prob > 0.0); });
  std::sort(raw.begin(), raw.end(), [](const Atom& a, const Atom& b) { return a.value < b.value; });
  AtomicDistribution d;
  std::size_t i = 0;
  while (i < raw.size()) {
    double anchor = raw[i].value;
    double mass = 0.0, moment = 0.0;
    std::size_t j = i;
    for (; j < raw.size() && merge_close(anchor, raw[j].value, merge_tol); ++j) {
      mass += raw[j].prob;
      moment += raw[j].prob * (raw[j].value - anchor);
    }
    d.atoms_.push_back({j == i + 1 ? anchor : anchor + moment / mass, mass});
    i = j;
  }
  return d;
}

double AtomicDistribution::mean() const {
  double m = 0.0;
  for (const auto& a : atoms_) m += a.value * a.prob;
  return m / total_mass();
}

double AtomicDistribution::variance() const {
  double mu = mean(), v = 0.0;
  for (const auto& a : atoms_) v += a.prob * (a.value - mu) * (a.value - mu);
  return v / total_mass();
}

double AtomicDistribution::total_mass() const {
  long double s = 0.0L;
  for (const auto& a : atoms_) s += a.prob;
  return static_cast<double>(s);
}

double AtomicDistribution::change_of_measure_sum() const {
  long double s = 0.0L;
  for (const auto& a : atoms_) s += std::exp(std::log(a.prob) - a.value);
  return static_cast<double>(s);
}

double AtomicDistribution::log_mgf(double t) const {
  if (t == 0.0) return std::log(total_mass());
  double m = -INFINITY;
  for (const auto& a : atoms_) m = std::max(m, t * a.value);
  double s = 0.0;
  for (const auto& a : atoms_) s += a.prob * std::exp(t * a.value - m);
  return m + std::log(s);
}

double AtomicDistribution::tilted_mean(double t) const {
  double m = -INFINITY;
  for (const auto& a : atoms_) m = std::max(m, t * a.value);
  double num = 0.0, den = 0.0;
  for (const auto& a : atoms_) {
    double w = a.prob * std::exp(t * a.value - m);
    num += w * a.value;
    den += w;
  }
  return num / den;
}

double AtomicDistribution::cdf(double a) const {
  double s = 0.0;
  for (const auto& at : atoms_) {
    if (at.value > a) break;
    s += at.prob;
  }
  return s;
}

double AtomicDistribution::survival(double a) const {
  double s = 0.0;
  for (auto it = atoms_.rbegin(); it != atoms_.rend() && it->value > a; ++it) s += it->prob;
  return s;
}

AtomicDistribution AtomicDistribution::negated() const {
  AtomicDistribution d;
  d.atoms_.reserve(atoms_.size());
  for (auto it = atoms_.rbegin(); it != atoms_.rend(); ++it) d.atoms_.push_back({-it->value, it->prob});
  return d;
}

double PosteriorDistribution::mean() const {
  double m = 0.0, s = 0.0;
  for (const auto& a : atoms_) {
    m += a.belief * a.prob;
    s += a.prob;
  }
  return m / s;
}

Garbling::Garbling(std::vector<std::vector<double>> matrix, std::vector<std::string> targets)
    : matrix_(std::move(matrix)), targets_(std::move(targets)) {
  if (matrix_.empty()) throw Error(ErrorCode::DimensionMismatch, "garbling has no rows");
  cols_ = matrix_.front().size();
  if (cols_ == 0) throw Error(ErrorCode::DimensionMismatch, "garbling has no columns");
  for (auto& row : matrix_) {
    if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged garbling matrix");
    for (double x : row)
      if (!(x >= 0.0)) throw Error(ErrorCode::DomainError, "garbling entries must be non-negative");
    double s = static_cast<double>(exact_sum(row));
    if (std::fabs(s - 1.0) > kRowSumTolerance)
      throw Error(ErrorCode::RowSumMismatch, "garbling row sums to " + std::to_string(s));
  }
  if (targets_.empty())
    for (std::size_t j = 0; j < cols_; ++j) targets_.push_back("y" + std::to_string(j + 1));
  if (targets_.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "target label count");
}

Garbling Garbling::identity(std::size_t m) {
  std::vector<std::vector<double>> id(m, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < m; ++i) id[i][i] = 1.0;
  return Garbling(std::move(id));
}

std::vector<double> Garbling::apply(std::span<const double> pmf) const {
  if (pmf.size() != rows()) throw Error(ErrorCode::DimensionMismatch, "garbling rows do not match outcome count");
  std::vector<double> out(cols_, 0.0);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[j] += pmf[i] * matrix_[i][j];
  return out;
}

FiniteExperiment product(const FiniteExperiment& p, const FiniteExperiment& q, std::size_t cap) {
  if (static_cast<double>(p.size()) * static_cast<double>(q.size()) > static_cast<double>(cap))
    throw Error(ErrorCode::SizeOverflow, "product outcome count exceeds cap");
  std::vector<std::string> names;
  std::vector<double> r0, r1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) {
      names.push_back("(" + p.outcomes()[i] + "," + q.outcomes()[j] + ")");
      r0.push_back(p.p0()[i] * q.p0()[j]);
      r1.push_back(p.p1()[i] * q.p1()[j]);
    }
  renormalize(r0);
  renormalize(r1);
  return FiniteExperiment(std::move(names), std::move(r0), std::move(r1));
}

FiniteExperiment power(const FiniteExperiment& p, int n, std::size_t cap) {
  if (n < 1) throw Error(ErrorCode::DomainError, "power requires n >= 1");
  if (std::pow(static_cast<double>(p.size()), n) > static_cast<double>(cap))
    throw Error(ErrorCode::SizeOverflow, "power outcome count exceeds cap");
  std::size_t m = p.size();
  std::size_t total = 1;
  for (int k = 0; k < n; ++k) total *= m;
  std::vector<std::string> names;
  std::vector<double> r0, r1;
  names.reserve(total);
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::string name = "(";
    double a = 1.0, b = 1.0;
    for (int k = 0; k < n; ++k) {
      if (k) name += ",";
      name += p.outcomes()[digits[k]];
      a *= p.p0()[digits[k]];
      b *= p.p1()[digits[k]];
    }
    names.push_back(name + ")");
    r0.push_back(a);
    r1.push_back(b);
    for (int k = n - 1; k >= 0; --k) {
      if (++digits[k] < m) break;
      digits[k] = 0;
    }
  }
  renormalize(r0);
  renormalize(r1);
  return FiniteExperiment(std::move(names), std::move(r0), std::move(r1));
}

AtomicDistribution llr_distribution(const FiniteExperiment& p, State theta) {
  std::vector<Atom> raw;
  const auto& row = p.row(theta);
  for (std::size_t i = 0; i < p.size(); ++i) raw.push_back({p.llr(i, theta), row[i]});
  return AtomicDistribution::from_atoms(std::move(raw));
}

AtomicDistribution convolution_power(const AtomicDistribution& x, int n, std::size_t cap) {
  if (n < 1) throw Error(ErrorCode::DomainError, "power requires n >= 1");
  const auto& atoms = x.atoms();
  int m = static_cast<int>(atoms.size());
  if (binomial_count(n + m - 1, m - 1) > static_cast<double>(cap))
    throw Error(ErrorCode::SizeOverflow, "multinomial enumeration exceeds cap");
  std::vector<double> logp(m);
  for (int i = 0; i < m; ++i) logp[i] = std::log(atoms[i].prob);
  std::vector<Atom> raw;
  const double lfn = std::lgamma(n + 1.0);
  // depth-first over count vectors (k_0, ..., k_{m-1}) with sum n
  auto rec = [&](auto&& self, int i, int left, double value, double lw) -> void {
    if (i == m - 1) {
      double v = value + left * atoms[i].value;
      double w = lw + left * logp[i] - std::lgamma(left + 1.0);
      raw.push_back({v, std::exp(lfn + w)});
      return;
    }
    for (int k = 0; k <= left; ++k)
      self(self, i + 1, left - k, value + k * atoms[i].value, lw + k * logp[i] - std::lgamma(k + 1.0));
  };
  rec(rec, 0, n, 0.0, 0.0);
  return AtomicDistribution::from_atoms(std::move(raw));
}

AtomicDistribution power_llr(const FiniteExperiment& p, int n, State theta, std::size_t cap) {
  if (n < 1) throw Error(ErrorCode::DomainError, "power_llr requires n >= 1");
  double terms = binomial_count(n + static_cast<int>(p.size()) - 1, static_cast<int>(p.size()) - 1);
  if (terms > static_cast<double>(cap)) throw Error(ErrorCode::SizeOverflow, "multinomial enumeration exceeds cap");
  return convolution_power(llr_distribution(p, theta), n, cap);
}

AtomicDistribution convolve(const AtomicDistribution& x, const AtomicDistribution& y, std::size_t cap) {
  if (static_cast<double>(x.size()) * static_cast<double>(y.size()) > static_cast<double>(cap))
    throw Error(ErrorCode::SizeOverflow, "convolution exceeds cap");
  std::vector<Atom> raw;
  raw.reserve(x.size() * y.size());
  for (const auto& a : x.atoms())
    for (const auto& b : y.atoms()) raw.push_back({a.value + b.value, a.prob * b.prob});
  return AtomicDistribution::from_atoms(std::move(raw));
}

AtomicDistribution mix(std::span<const AtomicDistribution> parts, std::span<const double> weights) {
  if (parts.size() != weights.size()) throw Error(ErrorCode::DimensionMismatch, "mixture weights");
  std::vector<Atom> raw;
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (const auto& a : parts[k].atoms()) raw.push_back({a.value, a.prob * weights[k]});
  return AtomicDistribution::from_atoms(std::move(raw));
}

FiniteExperiment mixture(std::span<const FiniteExperiment> parts, std::span<const double> weights) {
  if (parts.size() != weights.size() || parts.empty())
    throw Error(ErrorCode::DimensionMismatch, "mixture needs one weight per experiment");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0 && w <= 1.0)) throw Error(ErrorCode::DomainError, "mixture weight outside [0,1]");
    total += w;
  }
  if (std::fabs(total - 1.0) > kRowSumTolerance) throw Error(ErrorCode::RowSumMismatch, "mixture weights");
  std::vector<std::string> names;
  std::vector<double> r0, r1;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (weights[k] == 0.0) continue;
    for (std::size_t i = 0; i < parts[k].size(); ++i) {
      names.push_back(std::to_string(k) + ":" + parts[k].outcomes()[i]);
      r0.push_back(weights[k] * parts[k].p0()[i]);
      r1.push_back(weights[k] * parts[k].p1()[i]);
    }
  }
  renormalize(r0);
  renormalize(r1);
  return FiniteExperiment(std::move(names), std::move(r0), std::move(r1));
}

FiniteExperiment mixture(const FiniteExperiment& p, const FiniteExperiment& q, double alpha) {
  const FiniteExperiment parts[] = {p, q};
  const double w[] = {alpha, 1.0 - alpha};
  return mixture(parts, w);
}

FiniteExperiment garble(const FiniteExperiment& p, const Garbling& sigma) {
  if (sigma.rows() != p.size())
    throw Error(ErrorCode::DimensionMismatch, "garbling has " + std::to_string(sigma.rows()) + " rows, experiment has " +
                                                  std::to_string(p.size()) + " outcomes");
  auto q0 = sigma.apply(p.p0());
  auto q1 = sigma.apply(p.p1());
  std::vector<std::string> names;
  std::vector<double> r0, r1;
  for (std::size_t j = 0; j < sigma.cols(); ++j) {
    if (q0[j] <= 0.0 && q1[j] <= 0.0) continue;
    names.push_back(sigma.targets()[j]);
    r0.push_back(q0[j]);
    r1.push_back(q1[j]);
  }
  renormalize(r0);
  renormalize(r1);
  return FiniteExperiment(std::move(names), std::move(r0), std::move(r1));
}

FiniteExperiment reduce(const FiniteExperiment& p) {
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> u(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) u[i] = p.llr(i, State::One);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return u[a] < u[b]; });
  std::vector<std::string> names;
  std::vector<double> r0, r1;
  std::size_t i = 0;
  while (i < order.size()) {
    double anchor = u[order[i]];
    double a = 0.0, b = 0.0;
    std::size_t j = i;
    for (; j < order.size() && merge_close(anchor, u[order[j]]); ++j) {
      a += p.p0()[order[j]];
      b += p.p1()[order[j]];
    }
    names.push_back("r" + std::to_string(names.size() + 1));
    r0.push_back(a);
    r1.push_back(b);
    i = j;
  }
  renormalize(r0);
  renormalize(r1);
  return FiniteExperiment(std::move(names), std::move(r0), std::move(r1));
}

FiniteExperiment experiment_from_llr(const AtomicDistribution& f1, const std::string& prefix) {
  std::vector<std::string> names;
  std::vector<double> r0, r1;
  for (const auto& at : f1.atoms()) {
    names.push_back(prefix + std::to_string(names.size() + 1));
    r0.push_back(std::exp(std::log(at.prob) - at.value));
    r1.push_back(at.prob);
  }
  renormalize(r0);
  renormalize(r1);
  return FiniteExperiment(std::move(names), std::move(r0), std::move(r1));
}

PosteriorDistribution posterior_distribution(const FiniteExperiment& p) {
  auto r = reduce(p);
  std::vector<PosteriorAtom> atoms;
  for (std::size_t i = 0; i < r.size(); ++i) {
    double a = r.p0()[i], b = r.p1()[i];
    atoms.push_back({b / (a + b), 0.5 * (a + b), a, b});
  }
  return PosteriorDistribution(std::move(atoms));
}

PosteriorDistribution posterior_from_llr(const AtomicDistribution& f1) {
  std::vector<PosteriorAtom> atoms;
  for (const auto& at : f1.atoms()) {
    double b = at.prob;
    double a = std::exp(std::log(at.prob) - at.value);
    atoms.push_back({1.0 / (1.0 + std::exp(-at.value)), 0.5 * (a + b), a, b});
  }
  return PosteriorDistribution(std::move(atoms));
}

bool is_trivial(const FiniteExperiment& p, double tol) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (std::fabs(p.llr(i, State::One)) > tol) return false;
  return true;
}

bool is_generic_pair(const FiniteExperiment& p, const FiniteExperiment& q, double tol) {
  auto x = llr_distribution(p, State::One);
  auto y = llr_distribution(q, State::One);
  return std::fabs(x.max() - y.max()) > tol && std::fabs(x.min() - y.min()) > tol;
}

FiniteExperiment discretize_example1(int bins) {
  if (bins < 1) throw Error(ErrorCode::DomainError, "need at least one bin");
  const double n = bins;
  std::vector<std::string> names;
  std::vector<double> r0, r1;
  for (int i = 0; i < bins; ++i) {
    names.push_back("b" + std::to_string(i + 1));
    r0.push_back(1.0 / n);
    // integral of 1/2 + s over [i/N, (i+1)/N]
    r1.push_back((n + 2.0 * i + 1.0) / (2.0 * n * n));
  }
  return FiniteExperiment(std::move(names), std::move(r0), std::move(r1));
}

}  // namespace blackwell
