#include "blackwell/fixtures.hpp"

#include <cctype>
#include <cmath>

#include "blackwell/error.hpp"
#include "blackwell/io.hpp"

namespace blackwell {

namespace {

const double kLogA = std::log(1.5);
const double kLogB = std::log(0.5);

// log( ((3/2)^x - (1/2)^x) / x ), continuous at x = 0
double log_moment(double x) {
  if (std::fabs(x) < 1e-6) return std::log((kLogA - kLogB) + 0.5 * (kLogA * kLogA - kLogB * kLogB) * x);
  return std::log((std::exp(x * kLogA) - std::exp(x * kLogB)) / x);
}

// antiderivatives on [1/2, 3/2]
double span(double (*f)(double)) { return f(1.5) - f(0.5); }

double kl_one() {
  return span([](double y) { return y * y / 2.0 * std::log(y) - y * y / 4.0; });
}
double kl_zero() {
  return -span([](double y) { return y * std::log(y) - y; });
}
// second moments of the log-likelihood ratio under each state
double m2_one() {
  return span([](double y) {
    double l = std::log(y);
    return y * y / 2.0 * l * l - y * y / 2.0 * l + y * y / 4.0;
  });
}
double m2_zero() {
  return span([](double y) {
    double l = std::log(y);
    return y * l * l - 2.0 * y * l + 2.0 * y;
  });
}

ExperimentPair named(std::string name, FiniteExperiment p, FiniteExperiment q) {
  return ExperimentPair{std::move(name), std::move(p), std::move(q)};
}

double param(std::span<const double> params, std::size_t i, double fallback) {
  return i < params.size() ? params[i] : fallback;
}

}  // namespace

FiniteExperiment symmetric_binary(double q) {
  if (!(q > 0.0 && q < 1.0)) throw Error(ErrorCode::DomainError, "accuracy must lie in (0,1)");
  return make_experiment({"y1", "y2"}, {q, 1.0 - q}, {1.0 - q, q});
}

FiniteExperiment example1_q(double p) {
  if (!(p > 0.0 && p < 1.0)) throw Error(ErrorCode::DomainError, "p must lie in (0,1)");
  return make_experiment({"0", "1"}, {0.5, 0.5}, {1.0 - p, p});
}

FiniteExperiment azrieli_p(double beta) {
  if (!(beta > 0.0 && beta <= 0.25)) throw Error(ErrorCode::DomainError, "beta must lie in (0, 1/4]");
  return make_experiment({"x1", "x2", "x3"}, {beta, 0.5, 0.5 - beta}, {0.5 - beta, 0.5, beta});
}

ExperimentPair footnote3() {
  return named("footnote3", make_experiment({"w1", "w2"}, {1.0 / 3.0, 2.0 / 3.0}, {2.0 / 3.0, 1.0 / 3.0}),
               make_experiment({"y1", "y2"}, {6.0 / 9.0, 3.0 / 9.0}, {8.0 / 9.0, 1.0 / 9.0}));
}

ExperimentPair example1(double p, int bins) {
  return named("example1", discretize_example1(bins), example1_q(p));
}

ExperimentPair azrieli(double alpha, double beta) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::DomainError, "alpha must lie in (0,1)");
  return named("azrieli", azrieli_p(beta), make_experiment({"y1", "y2"}, {alpha, 1.0 - alpha}, {1.0 - alpha, alpha}));
}

ExperimentPair eventualfail(double eps) {
  // 1/16 - 100 eps must stay positive
  if (!(eps > 0.0 && eps < 1.0 / 1600.0))
    throw Error(ErrorCode::ZeroEntry, "eps must lie in (0, 1/1600), got " + std::to_string(eps));
  auto p = make_experiment({"x0", "x1", "x2", "x3"}, {eps, 1.0 / 16.0, 0.5, 7.0 / 16.0 - eps},
                           {100.0 * eps, 7.0 / 16.0, 0.5, 1.0 / 16.0 - 100.0 * eps});
  auto q = make_experiment({"y0", "y1", "y2"}, {eps, 0.25, 0.75 - eps}, {100.0 * eps, 0.75, 0.25 - 100.0 * eps});
  return named("eventualfail", std::move(p), std::move(q));
}

ExperimentPair symmetric(double q, double q2) { return named("symmetric", symmetric_binary(q), symmetric_binary(q2)); }

RenyiSource example1_renyi_source() {
  static const double kl[2] = {kl_zero(), kl_one()};
  static const double var[2] = {m2_zero() - kl[0] * kl[0], m2_one() - kl[1] * kl[1]};
  auto curve = [](State theta, double t) {
    double d = t - 1.0;
    int i = index(theta);
    if (std::fabs(d) < kNearOne) return kl[i] + d * var[i] / 2.0;
    return (theta == State::Zero ? log_moment(2.0 - t) : log_moment(t + 1.0)) / d;
  };
  // sup log(f0/f1) at s = 0 and sup log(f1/f0) at s = 1
  return RenyiSource::closed_form("example1", curve, std::log(2.0), std::log(1.5));
}

double azrieli_margin(double alpha, double beta) {
  return std::sqrt(alpha * (1.0 - alpha)) - std::sqrt(beta * (0.5 - beta)) - 0.25;
}

std::vector<std::string> fixture_names() { return {"footnote3", "example1", "azrieli", "eventualfail", "symmetric"}; }

ExperimentPair load_fixture(std::string_view name, std::span<const double> params) {
  if (name == "footnote3") return footnote3();
  if (name == "example1") {
    double bins = param(params, 1, 1000.0);
    if (bins != std::floor(bins) || bins < 1.0) throw Error(ErrorCode::DomainError, "bin count must be a positive integer");
    return example1(param(params, 0, 0.63), static_cast<int>(bins));
  }
  if (name == "azrieli") return azrieli(param(params, 0, 0.25), param(params, 1, 1.0 / 16.0));
  if (name == "eventualfail") return eventualfail(param(params, 0, 5e-4));
  if (name == "symmetric") return symmetric(param(params, 0, 0.8), param(params, 1, 0.5));
  throw Error(ErrorCode::UnknownFixture, "unknown fixture '" + std::string(name) + "'");
}

ExperimentPair parse_fixture(std::string_view call) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  call = trim(call);
  auto open = call.find('(');
  if (open == std::string_view::npos) return load_fixture(call);
  if (call.back() != ')') throw Error(ErrorCode::ParseError, "unbalanced parentheses in '" + std::string(call) + "'");
  std::string_view name = trim(call.substr(0, open));
  std::string_view args = call.substr(open + 1, call.size() - open - 2);
  std::vector<double> params;
  while (!trim(args).empty()) {
    auto comma = args.find(',');
    params.push_back(parse_number(trim(args.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  return load_fixture(name, params);
}

}  // namespace blackwell
