#include "blackwell/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <locale>
#include <sstream>

#include "blackwell/blackwell_order.hpp"
#include "blackwell/divergence.hpp"
#include "blackwell/error.hpp"
#include "blackwell/fixtures.hpp"
#include "blackwell/io.hpp"
#include "blackwell/large_deviations.hpp"
#include "blackwell/large_sample.hpp"
#include "blackwell/majorization.hpp"
#include "blackwell/multistate.hpp"
#include "blackwell/renyi.hpp"

namespace blackwell {

namespace {

std::string fmt(double x, int digits = 10) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(digits) << x;
  return os.str();
}

std::string order_label(double t) { return t == 0.0 ? "0+" : fmt(t); }

std::string describe(const RenyiVerdict& v) {
  if (v.kind == RenyiVerdictKind::DominatesOnGrid)
    return "DominatesOnGrid (t_max=" + fmt(v.t_max) + ", " + std::to_string(v.grid_points) + " points)";
  return to_string(v.kind) + " theta=" + std::to_string(index(v.theta)) + " t=" + order_label(v.t) +
         " gap=" + fmt(v.gap) + " margin=" + fmt(v.margin);
}

RenyiGridOptions grid_options(const Config& cfg) { return {cfg.t_max, cfg.grid_points, cfg.tol}; }

LargeSampleOptions sample_options(const Config& cfg) {
  LargeSampleOptions o;
  o.cap = cfg.n_cap;
  o.tol = cfg.tol;
  o.renyi = grid_options(cfg);
  o.eta.renyi = o.renyi;
  return o;
}

struct PairInput {
  std::vector<std::string> files;
  std::string fixture;
};

void add_pair_options(CLI::App* sub, PairInput& in) {
  sub->add_option("experiments", in.files, "P.json Q.json");
  sub->add_option("--fixture", in.fixture, "built-in pair instead of files, e.g. azrieli(0.305,0.1)");
}

ExperimentPair load_pair(const PairInput& in) {
  if (!in.fixture.empty()) {
    if (!in.files.empty()) throw Error(ErrorCode::ParseError, "give either two files or --fixture, not both");
    return parse_fixture(in.fixture);
  }
  if (in.files.size() != 2) throw Error(ErrorCode::ParseError, "expected two experiment files or --fixture");
  return ExperimentPair{"files", read_experiment(in.files[0]), read_experiment(in.files[1])};
}

double threshold_payoff(const FiniteExperiment& e, int n) {
  double k = std::pow(100.0, n - 1);
  double pbar = k / (k + 1.0);
  auto v = ConvexUtility::from_kinks({{0.0, 0.0}, {pbar, 0.0}, {1.0, 1.0 - pbar}});
  return expected_indirect_utility(power(e, n), v);
}

// guess-the-state payoff max(p, 1 - p)
ConvexUtility matching_utility() { return ConvexUtility::from_kinks({{0.0, 1.0}, {0.5, 0.5}, {1.0, 1.0}}); }

int cmd_validate(const std::vector<std::string>& files, const std::string& kind, std::ostream& out) {
  for (const auto& f : files) {
    auto doc = read_json(f);
    if (kind == "experiment") {
      auto p = experiment_from_json(doc);
      out << f << ": ok, " << p.size() << " outcomes, " << posterior_distribution(p).size() << " posterior atoms"
          << (is_trivial(p) ? ", trivial" : "") << "\n";
    } else if (kind == "pmf") {
      out << f << ": ok, " << pmf_from_json(doc).size() << " points\n";
    } else if (kind == "spec") {
      auto s = spec_from_json(doc);
      out << f << ": ok, " << s.m0().size() << "+" << s.m1().size() << " atoms, mass " << fmt(s.total_mass()) << "\n";
    } else {
      auto m = multistate_from_json(doc);
      out << f << ": ok, " << m.states() << " states, " << m.outcomes() << " outcomes\n";
    }
  }
  return kExitOk;
}

int cmd_compare(const ExperimentPair& pq, const std::string& mode, bool cross, int n_max, const Config& cfg,
                std::ostream& out) {
  if (mode == "blackwell") {
    auto c = blackwell_dominates(pq.p, pq.q, cross ? BlackwellMode::CrossValidate : BlackwellMode::Perfected, cfg.tol);
    out << to_string(c.verdict) << "\n";
    out << "P over Q: " << (c.p_over_q ? "yes" : "no") << " (worst gap " << fmt(c.gap_pq) << " at " << fmt(c.witness_pq)
        << ")\n";
    out << "Q over P: " << (c.q_over_p ? "yes" : "no") << " (worst gap " << fmt(c.gap_qp) << " at " << fmt(c.witness_qp)
        << ")\n";
    return weakly_dominates(c.verdict) ? kExitOk : kExitNegative;
  }
  if (mode == "renyi") {
    auto v = renyi_order_check(pq.p, pq.q, grid_options(cfg));
    out << describe(v) << "\n";
    return v.kind == RenyiVerdictKind::DominatesOnGrid ? kExitOk : kExitNegative;
  }
  if (mode == "large-sample") {
    auto v = large_sample_verdict(pq.p, pq.q, sample_options(cfg));
    out << to_string(v.kind) << "\n";
    if (v.kind != LargeSampleKind::NonGeneric) out << "renyi: " << describe(v.renyi) << "\n";
    if (v.n0) out << "n0: " << fmt(*v.n0, 17) << " (eta " << fmt(*v.eta) << ")\n";
    return v.kind == LargeSampleKind::PredictDominates ? kExitOk : kExitNegative;
  }
  auto r = ratio_search(pq.p, pq.q, n_max, sample_options(cfg));
  out << "renyi ratio: " << fmt(r.renyi_ratio.value) << " (theta=" << index(r.renyi_ratio.theta)
      << " t=" << order_label(r.renyi_ratio.t) << ")\n";
  for (auto [n, m] : r.pairs) out << "n=" << n << " m=" << m << "\n";
  out << "best m/n: " << fmt(r.best_ratio) << "\n";
  return kExitOk;
}

int cmd_large_sample(const ExperimentPair& pq, const Config& cfg, std::ostream& out) {
  auto rep = dominance_vector(pq.p, pq.q, sample_options(cfg));
  out << "generic: " << (rep.generic ? "yes" : "no") << "\n";
  out << "renyi: " << describe(rep.renyi_verdict) << "\n";
  for (std::size_t i = 0; i < rep.vector.size(); ++i)
    out << "n=" << i + 1 << " " << to_string(rep.vector[i]) << " gap=" << fmt(rep.worst_gap[i]) << "\n";
  out << "minimal n: " << (rep.minimal_n ? std::to_string(*rep.minimal_n) : "none up to " + std::to_string(rep.cap))
      << "\n";
  if (rep.theory_n0) out << "n0: " << fmt(*rep.theory_n0, 17) << " (eta " << fmt(*rep.eta) << ")\n";
  return rep.minimal_n ? kExitOk : kExitNegative;
}

int cmd_power(const std::string& file, int n, int theta, const std::string& out_file, std::ostream& out) {
  auto p = read_experiment(file);
  if (theta != 0 && theta != 1) throw Error(ErrorCode::DomainError, "theta must be 0 or 1");
  auto x = power_llr(p, n, theta == 0 ? State::Zero : State::One);
  out << "value,prob\n";
  for (const auto& a : x.atoms()) out << fmt(a.value, 17) << "," << fmt(a.prob, 17) << "\n";
  if (!out_file.empty()) write_experiment(out_file, power(p, n));
  return kExitOk;
}

int cmd_catalyst(const ExperimentPair& pq, int n, bool explicit_products, const std::string& out_file,
                 const Config& cfg, std::ostream& out) {
  CatalystOptions o;
  o.tol = cfg.tol;
  o.explicit_products = explicit_products;
  auto r = catalyst(pq.p, pq.q, n, o);
  auto c = compare_with_catalyst(pq.p, pq.q, r, cfg.tol);
  out << "catalyst outcomes: " << r.size() << "\n";
  out << "P x R vs Q x R: " << to_string(c.verdict) << "\n";
  if (!out_file.empty()) write_experiment(out_file, r);
  return kExitOk;
}

int cmd_bound(const ExperimentPair& pq, const std::string& grid_out, const Config& cfg, std::ostream& out) {
  EtaOptions o;
  o.renyi = grid_options(cfg);
  auto s = sample_bound(pq.p, pq.q, o);
  out << "b: " << fmt(s.b) << "\neta: " << fmt(s.eta) << "\nn0: " << fmt(s.n0, 17) << "\n";
  if (!grid_out.empty()) {
    std::ofstream csv(grid_out);
    if (!csv) throw Error(ErrorCode::ParseError, "cannot write " + grid_out);
    csv.imbue(std::locale::classic());
    csv << "theta,condition,a,kstar_x,kstar_y\n";
    for (const auto& g : s.verification_grid)
      csv << index(g.theta) << "," << g.condition << "," << fmt(g.a, 17) << "," << fmt(g.kstar_x, 17) << ","
          << fmt(g.kstar_y, 17) << "\n";
  }
  return kExitOk;
}

int cmd_majorize(const std::string& mu_file, const std::string& nu_file, int powers, const Config& cfg,
                 std::ostream& out) {
  auto mu = pmf_from_json(read_json(mu_file));
  auto nu = pmf_from_json(read_json(nu_file));
  bool m = majorizes(mu, nu);
  out << "mu majorizes nu: " << (m ? "yes" : "no") << "\n";
  if (powers <= 0) return m ? kExitOk : kExitNegative;
  JensenOptions o;
  o.cap = powers;
  o.tol = cfg.tol;
  o.alpha_max = cfg.t_max;
  o.grid_points = cfg.grid_points;
  auto rep = jensen_check(mu, nu, o);
  out << "generic: " << (rep.generic ? "yes" : "no") << "\n";
  out << "entropy condition: " << (rep.condition_holds ? "holds" : "fails");
  if (!rep.condition_holds)
    out << " (" << rep.failed_part << " at alpha=" << fmt(rep.witness_alpha) << ", gap " << fmt(rep.witness_gap) << ")";
  out << "\n";
  for (int n = 1; n <= powers; ++n)
    out << "n=" << n << " " << (rep.majorizes_at_n[n - 1] ? (rep.strict_at_n[n - 1] ? "strict" : "weak") : "no")
        << "\n";
  out << "suffix from: " << (rep.suffix_start ? std::to_string(*rep.suffix_start) : "none") << "\n";
  out << "consistent: " << (rep.consistent ? "yes" : "no") << "\n";
  return rep.suffix_start ? kExitOk : kExitNegative;
}

int cmd_multistate(const std::string& p_file, const std::string& q_file, int trials, const Config& cfg,
                   std::ostream& out) {
  auto p = multistate_from_json(read_json(p_file));
  auto q = multistate_from_json(read_json(q_file));
  MultiStateOptions o;
  o.seed = cfg.seed;
  o.tol = cfg.tol;
  auto rep = multistate_necessary(p, q, o);
  out << "generic: " << (rep.generic ? "yes" : "no") << "\n";
  out << "mgf above (t >= 0): " << (rep.cond_i ? "yes" : "no") << "\n";
  out << "mgf below (t <= 0): " << (rep.cond_ii ? "yes" : "no") << "\n";
  out << "kl above: " << (rep.cond_iii ? "yes" : "no") << "\n";
  if (!rep.passed()) {
    out << "witness: part " << rep.witness_part << " state " << rep.witness_state;
    if (rep.witness_part == "iii") out << " vs " << rep.witness_other;
    out << " gap " << fmt(rep.witness_gap) << "\n";
  }
  if (trials > 0) {
    auto f = multistate_falsifier(p, q, trials, cfg.seed);
    out << "falsifier: " << (f.refuted ? "Q pays more in trial " + std::to_string(f.trial) + ", gap " + fmt(f.gap)
                                       : "no refutation in " + std::to_string(trials) + " trials")
        << "\n";
  }
  return rep.passed() ? kExitOk : kExitNegative;
}

int cmd_plot(bool ex1, double p, const PairInput& in, const std::string& out_file, const Config& cfg,
             std::ostream& out) {
  RenyiSource a, b;
  if (ex1) {
    a = example1_renyi_source();
    b = RenyiSource::from_experiment(example1_q(p));
  } else {
    auto pq = load_pair(in);
    a = RenyiSource::from_experiment(pq.p);
    b = RenyiSource::from_experiment(pq.q);
  }
  std::ofstream file;
  if (!out_file.empty()) {
    file.open(out_file);
    if (!file) throw Error(ErrorCode::ParseError, "cannot write " + out_file);
  }
  std::ostream& csv = out_file.empty() ? out : file;
  csv << "t,R_P_theta0,R_Q_theta0,R_P_theta1,R_Q_theta1\n";
  auto grid = renyi_grid(cfg.t_max, cfg.grid_points);
  grid.push_back(kInfinity);
  for (double t : grid)
    csv << fmt(t, 12) << "," << fmt(a.divergence(State::Zero, t), 12) << "," << fmt(b.divergence(State::Zero, t), 12)
        << "," << fmt(a.divergence(State::One, t), 12) << "," << fmt(b.divergence(State::One, t), 12) << "\n";
  return kExitOk;
}

int cmd_fixture(const std::string& call, const std::string& out_p, const std::string& out_q, std::ostream& out) {
  auto pq = parse_fixture(call);
  nlohmann::json doc;
  doc["name"] = pq.name;
  doc["P"] = experiment_to_json(pq.p);
  doc["Q"] = experiment_to_json(pq.q);
  if (!out_p.empty()) write_experiment(out_p, pq.p);
  if (!out_q.empty()) write_experiment(out_q, pq.q);
  out << doc.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

std::vector<SuiteRow> fixture_suite() {
  std::vector<SuiteRow> rows;
  auto add = [&](std::string name, auto&& check) {
    try {
      std::string detail;
      bool ok = check(detail);
      rows.push_back({std::move(name), ok, detail});
    } catch (const std::exception& e) {
      rows.push_back({std::move(name), false, std::string("error: ") + e.what()});
    }
  };
  const auto grid = renyi_grid(64.0, 512);

  add("footnote3 asymmetry", [&](std::string& d) {
    auto f = footnote3();
    auto p = RenyiSource::from_experiment(f.p), q = RenyiSource::from_experiment(f.q);
    double worst = INFINITY;
    for (double t : grid) worst = std::min(worst, p.divergence(State::One, t) - q.divergence(State::One, t));
    double at3 = p.divergence(State::Zero, 3.0) - q.divergence(State::Zero, 3.0);
    d = "min R1 gap " + fmt(worst) + ", R0 gap at t=3 " + fmt(at3);
    return worst > 1e-9 && at3 < -1e-9;
  });

  add("example1 threshold garbling", [&](std::string& d) {
    auto p = discretize_example1(1000);
    std::vector<std::vector<double>> m(1000);
    for (int i = 0; i < 1000; ++i) m[i] = i < 500 ? std::vector<double>{1.0, 0.0} : std::vector<double>{0.0, 1.0};
    bool ok = verify_garbling(p, example1_q(0.625), Garbling(m, {"0", "1"}));
    auto v = blackwell_dominates(discretize_example1(2), example1_q(0.625)).verdict;
    d = std::string("garbling ") + (ok ? "matches" : "differs") + ", two bins vs Q(0.625): " + to_string(v);
    return ok && v == BlackwellVerdict::Equivalent;
  });

  add("example1 renyi without blackwell", [&](std::string& d) {
    auto ex = example1(0.63, 1000);
    double up = expected_indirect_utility(ex.p, matching_utility());
    double uq = expected_indirect_utility(ex.q, matching_utility());
    auto v = renyi_order_check(example1_renyi_source(), RenyiSource::from_experiment(ex.q));
    d = "payoff P " + fmt(up) + " Q " + fmt(uq) + ", " + describe(v);
    return uq > up + 1e-6 && v.kind == RenyiVerdictKind::DominatesOnGrid;
  });

  add("azrieli(0.305,0.1) non-monotone", [&](std::string& d) {
    auto f = azrieli(0.305, 0.1);
    LargeSampleOptions o;
    o.cap = 3;
    o.compute_n0 = false;
    auto rep = dominance_vector(f.p, f.q, o);
    d = to_string(rep.vector[0]) + ", " + to_string(rep.vector[1]) + ", " + to_string(rep.vector[2]);
    return rep.vector[0] == BlackwellVerdict::Incomparable && rep.vector[1] == BlackwellVerdict::Dominates &&
           rep.vector[2] == BlackwellVerdict::Incomparable;
  });

  add("azrieli(1/4,1/16) large samples", [&](std::string& d) {
    auto f = azrieli(0.25, 1.0 / 16.0);
    LargeSampleOptions o;
    o.compute_n0 = false;
    auto rep = dominance_vector(f.p, f.q, o);
    double margin = azrieli_margin(0.25, 1.0 / 16.0);
    d = "margin " + fmt(margin) + ", " + describe(rep.renyi_verdict) + ", minimal n " +
        (rep.minimal_n ? std::to_string(*rep.minimal_n) : "none");
    return margin > 0.0 && rep.renyi_verdict.kind == RenyiVerdictKind::DominatesOnGrid && rep.minimal_n == 4;
  });

  add("eventualfail(5e-4) never dominates", [&](std::string& d) {
    auto f = eventualfail(5e-4);
    bool generic = is_generic_pair(f.p, f.q);
    auto v = renyi_order_check(f.p, f.q);
    bool all = true;
    d = std::string(generic ? "generic" : "non-generic") + ", " + describe(v) + ", Q-P payoff";
    for (int n = 1; n <= 4; ++n) {
      double gap = threshold_payoff(f.q, n) - threshold_payoff(f.p, n);
      d += " " + fmt(gap, 4);
      all = all && gap > 0.0;
    }
    return !generic && v.kind == RenyiVerdictKind::DominatesOnGrid && all;
  });

  add("catalyst azrieli(0.305,0.1) n=2", [&](std::string& d) {
    auto f = azrieli(0.305, 0.1);
    auto r = catalyst(f.p, f.q, 2);
    auto c = compare_with_catalyst(f.p, f.q, r);
    d = std::to_string(r.size()) + " outcomes, " + to_string(c.verdict);
    return c.verdict == BlackwellVerdict::Dominates;
  });

  add("divergence reduces to kl", [&](std::string& d) {
    auto f = footnote3();
    double dv = divergence_eval(DivergenceSpec({{1.0, 1.0}}, {}), f.p);
    double kl = renyi_divergence(f.p.p1(), f.p.p0(), 1.0);
    d = fmt(dv, 15) + " vs " + fmt(kl, 15);
    return std::fabs(dv - kl) <= 1e-12;
  });
  return rows;
}

int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Blackwell, Renyi and large-sample comparison of binary-state experiments"};
  app.name("blackwell-cli");
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--tol", cfg.tol, "numerical tolerance, in (0, 1e-3]")->capture_default_str();
  app.add_option("--t-max", cfg.t_max, "largest finite Renyi order on the grid")->capture_default_str();
  app.add_option("--grid-points", cfg.grid_points, "Renyi grid size")->capture_default_str();
  app.add_option("--n-cap", cfg.n_cap, "largest sample size n examined")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();

  PairInput pair;

  std::vector<std::string> files;
  std::string kind = "experiment";
  auto* validate = app.add_subcommand("validate", "parse and validate input files");
  validate->add_option("files", files, "JSON files")->required();
  validate->add_option("--kind", kind, "experiment | pmf | spec | multistate")
      ->check(CLI::IsMember({"experiment", "pmf", "spec", "multistate"}))
      ->capture_default_str();

  std::string mode = "blackwell";
  bool cross = false;
  int n_max = 8;
  auto* compare = app.add_subcommand("compare", "compare P with Q; exit 0 when P (weakly) comes out ahead");
  add_pair_options(compare, pair);
  compare->add_option("--mode", mode, "blackwell | renyi | large-sample | ratio")
      ->check(CLI::IsMember({"blackwell", "renyi", "large-sample", "ratio"}))
      ->capture_default_str();
  compare->add_flag("--cross-validate", cross, "run both Blackwell deciders and require agreement");
  compare->add_option("--n-max", n_max, "ratio mode: largest n searched")->capture_default_str();

  auto* large = app.add_subcommand("large-sample", "Blackwell verdicts of P^n against Q^n for n up to --n-cap");
  add_pair_options(large, pair);

  std::string file, out_file;
  int n = 2, theta = 1;
  auto* pow = app.add_subcommand("power", "likelihood-ratio law of the n-fold product (CSV)");
  pow->add_option("experiment", file)->required();
  pow->add_option("-n", n, "number of copies")->required();
  pow->add_option("--theta", theta, "state")->capture_default_str();
  pow->add_option("--out", out_file, "also write the explicit product experiment");

  bool explicit_products = false;
  auto* cat = app.add_subcommand("catalyst", "build R with P x R over Q x R from P^n over Q^n");
  add_pair_options(cat, pair);
  cat->add_option("-n", n, "sample size at which P^n dominates Q^n")->required();
  cat->add_option("--out", out_file, "write R as JSON");
  cat->add_flag("--explicit", explicit_products, "build the mixture components as explicit products");

  std::string grid_out;
  auto* bound = app.add_subcommand("bound", "sample size n0 beyond which P^n dominates Q^n");
  add_pair_options(bound, pair);
  bound->add_option("--grid-out", grid_out, "CSV of the verification grid: theta,condition,a,kstar_x,kstar_y");

  std::string spec_file;
  auto* div = app.add_subcommand("divergence", "evaluate an additive divergence on (P1, P0)");
  div->add_option("spec", spec_file, "{\"m0\": [[t, w], ...], \"m1\": [...]}, t may be \"inf\"")->required();
  div->add_option("experiment", file)->required();

  std::string mu_file, nu_file;
  int powers = 0;
  auto* maj = app.add_subcommand("majorize", "majorization of nu by mu, optionally of their powers");
  maj->add_option("mu", mu_file)->required();
  maj->add_option("nu", nu_file)->required();
  maj->add_option("--powers", powers, "check mu^n against nu^n for n up to this value");

  int trials = 0;
  std::string p_file, q_file;
  auto* ms = app.add_subcommand("multistate", "necessary conditions for large-sample dominance with many states");
  ms->add_option("P", p_file)->required();
  ms->add_option("Q", q_file)->required();
  ms->add_option("--trials", trials, "random convex utilities to try as a falsifier");

  bool ex1 = false;
  double p = 0.63;
  auto* plot = app.add_subcommand(
      "plot-data", "Renyi curves as CSV with columns t,R_P_theta0,R_Q_theta0,R_P_theta1,R_Q_theta1; last row t=inf");
  add_pair_options(plot, pair);
  plot->add_flag("--example1", ex1, "continuous P with densities 1 and 1/2+s against binary Q(p)");
  plot->add_option("--p", p, "parameter of Q with --example1")->capture_default_str();
  plot->add_option("--out", out_file, "write CSV here instead of stdout");

  auto* suite = app.add_subcommand("paper-suite", "run the built-in fixture checks and print a pass/fail table");

  std::string call, out_p, out_q;
  auto* fix = app.add_subcommand("fixture", "print a built-in pair: footnote3, example1(p,N), azrieli(a,b), "
                                            "eventualfail(eps), symmetric(q[,q2])");
  fix->add_option("name", call)->required();
  fix->add_option("--out-p", out_p, "write P as JSON");
  fix->add_option("--out-q", out_q, "write Q as JSON");

  std::vector<std::string> store{"blackwell-cli"};
  store.insert(store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  }

  try {
    cfg.validate();
    if (validate->parsed()) return cmd_validate(files, kind, out);
    if (compare->parsed()) return cmd_compare(load_pair(pair), mode, cross, n_max, cfg, out);
    if (large->parsed()) return cmd_large_sample(load_pair(pair), cfg, out);
    if (pow->parsed()) return cmd_power(file, n, theta, out_file, out);
    if (cat->parsed()) return cmd_catalyst(load_pair(pair), n, explicit_products, out_file, cfg, out);
    if (bound->parsed()) return cmd_bound(load_pair(pair), grid_out, cfg, out);
    if (div->parsed()) {
      out << fmt(divergence_eval(spec_from_json(read_json(spec_file)), read_experiment(file)), 15) << "\n";
      return kExitOk;
    }
    if (maj->parsed()) return cmd_majorize(mu_file, nu_file, powers, cfg, out);
    if (ms->parsed()) return cmd_multistate(p_file, q_file, trials, cfg, out);
    if (plot->parsed()) return cmd_plot(ex1, p, pair, out_file, cfg, out);
    if (fix->parsed()) return cmd_fixture(call, out_p, out_q, out);
    if (suite->parsed()) {
      bool all = true;
      for (const auto& r : fixture_suite()) {
        out << std::left << std::setw(36) << r.name << (r.passed ? "PASS  " : "FAIL  ") << r.detail << "\n";
        all = all && r.passed;
      }
      return all ? kExitOk : kExitNegative;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    // a catalyst or bound that does not exist is a verdict, not bad input
    if (e.code() == ErrorCode::PreconditionFailed || e.code() == ErrorCode::NoEtaFound) return kExitNegative;
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace blackwell
