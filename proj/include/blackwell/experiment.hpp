#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace blackwell {

enum class State { Zero = 0, One = 1 };

constexpr State other(State s) { return s == State::Zero ? State::One : State::Zero; }
constexpr int index(State s) { return static_cast<int>(s); }

inline constexpr double kRowSumTolerance = 1e-12;
// relative, applied as tol * max(1, |u|, |v|)
inline constexpr double kMergeTolerance = 1e-9;
inline constexpr std::size_t kProductCap = 1'000'000;
inline constexpr std::size_t kEnumerationCap = 10'000'000;

bool merge_close(double u, double v, double tol = kMergeTolerance);

class FiniteExperiment {
 public:
  FiniteExperiment(std::vector<std::string> outcomes, std::vector<double> p0, std::vector<double> p1);

  std::size_t size() const { return outcomes_.size(); }
  const std::vector<std::string>& outcomes() const { return outcomes_; }
  const std::vector<double>& p0() const { return p0_; }
  const std::vector<double>& p1() const { return p1_; }
  const std::vector<double>& row(State s) const { return s == State::Zero ? p0_ : p1_; }
  // log(P_theta(w) / P_{1-theta}(w))
  double llr(std::size_t i, State s) const;

 private:
  std::vector<std::string> outcomes_;
  std::vector<double> p0_, p1_;
};

FiniteExperiment make_experiment(std::vector<std::string> outcomes, std::vector<double> p0,
                                 std::vector<double> p1);
// outcomes named x1..xm
FiniteExperiment make_experiment(std::vector<double> p0, std::vector<double> p1);

struct Atom {
  double value;
  double prob;
};

class AtomicDistribution {
 public:
  AtomicDistribution() = default;
  // sorts, merges values within the relative tolerance, drops non-positive masses
  static AtomicDistribution from_atoms(std::vector<Atom> raw, double merge_tol = kMergeTolerance);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  double min() const { return atoms_.front().value; }
  double max() const { return atoms_.back().value; }
  double mean() const;
  double variance() const;
  double total_mass() const;
  // sum e^{-u} p(u); equals 1 for a state-1 LLR distribution
  double change_of_measure_sum() const;
  // log E[e^{tX}] with max shift
  double log_mgf(double t) const;
  // E_t[X] under the exponentially tilted law
  double tilted_mean(double t) const;
  // P(X <= a), P(X > a)
  double cdf(double a) const;
  double survival(double a) const;
  AtomicDistribution negated() const;

 private:
  std::vector<Atom> atoms_;
};

struct PosteriorAtom {
  double belief;
  double prob;
  double prob0;
  double prob1;
};

class PosteriorDistribution {
 public:
  PosteriorDistribution() = default;
  explicit PosteriorDistribution(std::vector<PosteriorAtom> atoms) : atoms_(std::move(atoms)) {}
  const std::vector<PosteriorAtom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  double mean() const;

 private:
  std::vector<PosteriorAtom> atoms_;
};

class Garbling {
 public:
  Garbling(std::vector<std::vector<double>> matrix, std::vector<std::string> targets = {});
  static Garbling identity(std::size_t m);

  std::size_t rows() const { return matrix_.size(); }
  std::size_t cols() const { return cols_; }
  double at(std::size_t i, std::size_t j) const { return matrix_[i][j]; }
  const std::vector<std::string>& targets() const { return targets_; }
  std::vector<double> apply(std::span<const double> pmf) const;

 private:
  std::vector<std::vector<double>> matrix_;
  std::size_t cols_ = 0;
  std::vector<std::string> targets_;
};

FiniteExperiment product(const FiniteExperiment& p, const FiniteExperiment& q, std::size_t cap = kProductCap);
// explicit n-fold product, m^n outcomes
FiniteExperiment power(const FiniteExperiment& p, int n, std::size_t cap = kProductCap);

AtomicDistribution llr_distribution(const FiniteExperiment& p, State theta);
AtomicDistribution power_llr(const FiniteExperiment& p, int n, State theta, std::size_t cap = kEnumerationCap);
// n-fold convolution by multinomial count enumeration over the atoms of x
AtomicDistribution convolution_power(const AtomicDistribution& x, int n, std::size_t cap = kEnumerationCap);
AtomicDistribution convolve(const AtomicDistribution& x, const AtomicDistribution& y,
                            std::size_t cap = kEnumerationCap);
// weighted mixture of atomic laws
AtomicDistribution mix(std::span<const AtomicDistribution> parts, std::span<const double> weights);

FiniteExperiment mixture(const FiniteExperiment& p, const FiniteExperiment& q, double alpha);
FiniteExperiment mixture(std::span<const FiniteExperiment> parts, std::span<const double> weights);

FiniteExperiment garble(const FiniteExperiment& p, const Garbling& sigma);
// merges outcomes with equal likelihood ratio; Blackwell equivalent to p
FiniteExperiment reduce(const FiniteExperiment& p);

// sufficient-statistic experiment with one outcome per atom: p1 = mass, p0 = e^{-u} mass
FiniteExperiment experiment_from_llr(const AtomicDistribution& f1, const std::string& prefix = "r");

PosteriorDistribution posterior_distribution(const FiniteExperiment& p);
// from the state-1 LLR distribution: belief = 1/(1+e^{-u}), prob1 = F1 mass, prob0 = e^{-u} F1 mass
PosteriorDistribution posterior_from_llr(const AtomicDistribution& f1);

bool is_trivial(const FiniteExperiment& p, double tol = 1e-9);
bool is_generic_pair(const FiniteExperiment& p, const FiniteExperiment& q, double tol = 1e-9);

// exact bin masses of f0 = 1, f1 = 1/2 + s on N equal bins of [0,1]
FiniteExperiment discretize_example1(int bins);

}  // namespace blackwell
