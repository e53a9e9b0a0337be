// anneal: command-line front end for the cooling-schedule library.
//
// Exit codes: 0 ok, 2 usage / bad input, 3 assumption violated, 4 run failed.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <nlohmann/json.hpp>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "anneal/adaptive.hpp"
#include "anneal/chains.hpp"
#include "anneal/errors.hpp"
#include "anneal/estimator.hpp"
#include "anneal/io.hpp"
#include "anneal/nonadaptive.hpp"
#include "anneal/theory.hpp"

namespace {

using namespace anneal;
using nlohmann::json;

constexpr int kUsage = 2;
constexpr int kAssumption = 3;
constexpr int kRunFailure = 4;

struct RunFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string mode = "desk";
  std::string out;
};

struct SamplerOpts {
  std::string sampler = "auto";  // auto | exact | mcmc
  std::optional<std::uint64_t> chain_steps;
  std::optional<std::uint64_t> tau2;
  std::string start = "warm";
};

// "e2", "e^2", "e" or a plain number.
double parse_bound(const std::string& s) {
  if (s == "e") return std::numbers::e;
  if (s.size() > 1 && s[0] == 'e') {
    std::string rest = s.substr(s[1] == '^' ? 2 : 1);
    return std::exp(std::stod(rest));
  }
  return std::stod(s);
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty() || g.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(g.out);
  if (!os) throw ParseError("cannot write " + g.out);
  os << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw ParseError("cannot write " + path);
  os << text;
}

std::optional<PartitionFunction> exact_z(const GibbsSystem& sys) {
  if (const auto* e = std::get_if<ExplicitZ>(&sys.model())) return e->z;
  if (is_enumerable(sys)) return PartitionFunction(enumerate_log_levels(sys));
  return std::nullopt;
}

std::unique_ptr<HamiltonianSampler> make_sampler(const GibbsSystem& sys, const SamplerOpts& o,
                                                 const std::optional<PartitionFunction>& z, std::uint64_t seed) {
  bool const explicit_sys = !sys.has_configurations();
  std::string kind = o.sampler;
  if (kind == "auto") kind = explicit_sys ? "exact" : "mcmc";
  if (kind == "exact") {
    if (!z) throw InvalidArgument("--sampler exact needs an explicit or enumerable instance");
    return std::make_unique<ExactSampler>(*z);
  }
  if (kind != "mcmc") throw InvalidArgument("--sampler must be auto, exact or mcmc");
  if (explicit_sys) throw InvalidArgument("explicit instances have no Markov chain; use --sampler exact");
  ChainConfig cfg;
  cfg.seed = split_seed(seed, 7);
  cfg.mode = o.start == "cold" ? StartMode::Cold : StartMode::Warm;
  std::uint64_t const fallback = cfg.mode == StartMode::Cold ? default_cold_steps(sys) : default_tau2(sys);
  cfg.steps_per_sample = o.chain_steps.value_or(o.tau2.value_or(fallback));
  auto s = std::make_unique<McmcSampler>(sys, cfg);
  for (const auto& w : s->warnings()) std::cerr << "warning: " << w << '\n';
  return s;
}

AdaptiveConfig adaptive_config(const Globals& g, double delta_prime, std::optional<std::uint64_t> s) {
  AdaptiveConfig cfg;
  cfg.delta_prime = delta_prime;
  if (g.mode == "faithful") {
    cfg.mode = AdaptiveMode::Faithful;
  } else if (g.mode == "desk") {
    cfg.mode = AdaptiveMode::Desk;
  } else {
    throw InvalidArgument("--mode must be faithful or desk");
  }
  cfg.desk_s_override = s;
  cfg.workers = g.workers;
  return cfg;
}

json verification_json(const VerificationReport& r) {
  json steps = json::array();
  for (const auto& c : r.steps) {
    json j = {{"index", c.index},
              {"from", double_to_json(c.from.as_double())},
              {"to", double_to_json(c.to.as_double())},
              {"log_ratio", double_to_json(c.log_forward)},
              {"ok", c.forward_ok && c.reverse_ok}};
    if (!c.reverse_ok || c.log_reverse != 0.0) j["log_reverse"] = double_to_json(c.log_reverse);
    steps.push_back(j);
  }
  return {{"passed", r.passed},
          {"log_bound", r.log_bound},
          {"worst_log_ratio", double_to_json(r.worst_log_ratio)},
          {"worst_index", r.worst_index},
          {"steps", steps}};
}

// --- schedule ---------------------------------------------------------------

struct ScheduleArgs {
  std::string instance;
  std::string kind = "adaptive";
  double delta_prime = 0.1;
  std::optional<std::uint64_t> s;
  std::string B = "e2";
  std::string transcript;
  std::string csv;
  bool verify = false;
  bool augment = false;
};

int cmd_schedule(const Globals& g, const ScheduleArgs& a, const SamplerOpts& so) {
  Instance inst = load_instance(a.instance);
  const GibbsSystem& sys = inst.system;
  auto z = exact_z(sys);
  std::size_t const n = sys.degree();
  double const log_A = sys.log_A();

  std::optional<CoolingSchedule> sched;
  std::optional<RunTranscript> tr;
  double verify_bound = 3e6;
  if (a.kind == "uniform") {
    sched = uniform_schedule(n, log_A);
    verify_bound = std::numbers::e;
  } else if (a.kind == "bezakova") {
    sched = bezakova_schedule(n, log_A);
    verify_bound = 2.0 * std::numbers::e * std::numbers::e;
  } else if (a.kind == "greedy" || a.kind == "existence") {
    if (!z) throw InvalidArgument("--kind " + a.kind + " needs an explicit or enumerable instance");
    verify_bound = a.kind == "greedy" ? parse_bound(a.B) : std::exp(2.0);
    sched = a.kind == "greedy" ? greedy_schedule(*z, verify_bound) : existence_schedule(*z);
  } else if (a.kind == "adaptive") {
    auto sampler = make_sampler(sys, so, z, g.seed);
    auto res = print_cooling_schedule(n, log_A, *sampler, adaptive_config(g, a.delta_prime, a.s), g.seed);
    tr = res.transcript;
    if (!a.transcript.empty()) {
      std::ostringstream os;
      tr->write_jsonl(os);
      write_file(a.transcript, os.str());
    }
    if (!res.schedule) {
      const auto& f = tr->failures.front();
      throw RunFailed(f.kind + " at beta = " + std::to_string(f.beta) + ": " + f.detail);
    }
    sched = *res.schedule;
  } else {
    throw InvalidArgument("--kind must be adaptive, uniform, bezakova, greedy or existence");
  }
  if (a.augment) sched = augment_reversible(*sched, n);

  json out = schedule_to_json(*sched);
  out["kind"] = a.kind;
  out["length"] = sched->length();
  if (tr) {
    out["Q"] = tr->total_samples;
    out["moves_tally"] = {{"optimal", tr->moves.optimal},
                          {"long", tr->moves.long_moves},
                          {"interval", tr->moves.interval}};
  }
  bool ok = true;
  if (a.verify) {
    if (!z) throw InvalidArgument("--verify needs an explicit or enumerable instance");
    auto rep = a.augment ? verify_reversible(*z, *sched, verify_bound) : verify_schedule(*z, *sched, verify_bound);
    out["verification"] = verification_json(rep);
    ok = rep.passed;
  }
  if (!a.csv.empty()) {
    std::ostringstream os;
    write_schedule_csv(os, *sched);
    write_file(a.csv, os.str());
  }
  emit(g, out.dump(2) + "\n");
  return ok ? 0 : kRunFailure;
}

// --- estimate ---------------------------------------------------------------

struct EstimateArgs {
  std::string instance;
  std::string schedule;
  double eps = 0.2;
  std::size_t runs = 1;
  std::optional<std::string> B;
  std::optional<std::uint64_t> cap;
  double delta_prime = 0.1;
  std::optional<std::uint64_t> s;
};

int cmd_estimate(const Globals& g, const EstimateArgs& a, const SamplerOpts& so) {
  Instance inst = load_instance(a.instance);
  const GibbsSystem& sys = inst.system;
  auto z = exact_z(sys);
  if (a.runs < 1) throw InvalidArgument("--runs must be >= 1");

  std::vector<CountEstimate> runs;
  json per_run = json::array();
  for (std::size_t r = 0; r < a.runs; ++r) {
    std::uint64_t const seed = split_seed(g.seed, 100 + r);
    auto sampler = make_sampler(sys, so, z, seed);
    if (!a.schedule.empty()) {
      CoolingSchedule s = load_schedule(a.schedule);
      std::vector<Beta> betas = inst.target_beta && inst.target_beta->is_finite() ? s.truncated_at(*inst.target_beta)
                                                                                   : s.betas();
      double const B = a.B ? parse_bound(*a.B) : (z ? std::max(1.0, certified_B(*z, betas)) : 3e6);
      Rng rng = make_rng(seed, 2);
      bool const zero_anchor = sys.anchor() == CountAnchor::Zero;
      auto est = product_estimate(betas, *sampler, zero_anchor ? 0.0 : sys.log_known_end(), B, a.eps, rng, a.cap,
                                  g.workers);
      if (zero_anchor && !est.zero) est.log_estimate = sys.log_known_end() - est.log_estimate;
      runs.push_back(est);
    } else {
      EstimatorConfig cfg;
      cfg.eps = a.eps;
      cfg.adaptive = adaptive_config(g, a.delta_prime, a.s);
      if (a.B) cfg.B = parse_bound(*a.B);
      cfg.per_ratio_cap = a.cap;
      cfg.target = inst.target_beta;
      auto res = end_to_end(sys, *sampler, cfg, seed, z ? &*z : nullptr);
      if (!res.schedule.schedule) {
        const auto& f = res.schedule.transcript.failures.front();
        throw RunFailed("schedule phase: " + f.kind + " at beta = " + std::to_string(f.beta));
      }
      runs.push_back(res.estimate);
    }
    per_run.push_back(double_to_json(runs.back().log_estimate));
  }
  CountEstimate final_est = amplify(runs);
  json per_ratio = json::array();
  for (const auto& r : runs.front().per_ratio) {
    per_ratio.push_back({{"from", double_to_json(r.from.as_double())},
                         {"to", double_to_json(r.to.as_double())},
                         {"mean", r.mean},
                         {"count", r.count}});
  }
  json out = {{"log_estimate", double_to_json(final_est.log_estimate)},
              {"estimate", double_to_json(std::exp(final_est.log_estimate))},
              {"eps", a.eps},
              {"runs", a.runs},
              {"confidence", final_est.confidence},
              {"samples", final_est.samples},
              {"per_run_log_estimates", per_run},
              {"per_ratio", per_ratio}};
  if (!runs.front().note.empty()) out["note"] = runs.front().note;
  if (z) {
    double const truth = sys.anchor() == CountAnchor::Zero
                             ? z->log_A()
                             : (inst.target_beta ? z->log_z(*inst.target_beta) : z->log_z_inf());
    out["log_truth"] = truth;
  }
  emit(g, out.dump(2) + "\n");
  return final_est.zero ? kRunFailure : 0;
}

// --- lowerbound -------------------------------------------------------------

struct LowerBoundArgs {
  std::size_t n = 400;
  std::string B = "e2";
  std::optional<double> log_A;
  std::size_t grid = 101;
};

int cmd_lowerbound(const Globals& g, const LowerBoundArgs& a) {
  double const B = parse_bound(a.B);
  json out;
  if (a.log_A) {
    // Non-adaptive witness for the given (n, ln A).
    auto r = lower_bound_greedy(a.n, *a.log_A, B);
    out["nonadaptive"] = {{"n", a.n},     {"log_A", *a.log_A}, {"B", B},
                          {"length", r.length}, {"bound", r.bound}, {"satisfied", r.satisfied}};
  } else {
    auto z = binomial_partition_function(a.n);
    auto s = greedy_schedule(z, B);
    double const bound = std::sqrt(static_cast<double>(a.n) / (20.0 * std::log(B)));
    auto ineq = check_lb_inequality(a.n, a.grid);
    out["adaptive"] = {{"n", a.n},
                       {"B", B},
                       {"greedy_length", s.length()},
                       {"bound", bound},
                       {"satisfied", static_cast<double>(s.length()) >= bound},
                       {"inequality_min_slack", ineq.min_slack},
                       {"inequality_at", {ineq.at_beta, ineq.at_x}},
                       {"grid_points", ineq.points}};
  }
  emit(g, out.dump(2) + "\n");
  return 0;
}

// --- plapprox ---------------------------------------------------------------

int cmd_plapprox(const Globals& g, std::size_t n, std::size_t points) {
  double const nd = static_cast<double>(n);
  ConvexCurve c{[nd](double x) { return nd * std::log1p(std::exp(-x)); },
                [nd](double x) { return -nd / (1.0 + std::exp(x)); }};
  double const gamma = solve_decreasing(c.f, 1.0);
  auto pl = pl_approx(c, gamma);
  std::ostringstream os;
  os << "x,f,g\r\n";
  for (std::size_t i = 0; i < points; ++i) {
    double const x = gamma * static_cast<double>(i) / static_cast<double>(points - 1);
    os << format_log(x) << ',' << format_log(c.f(x)) << ',' << format_log(pl.interpolate(x)) << "\r\n";
  }
  emit(g, os.str());
  std::cerr << "pieces " << pl.pieces() << " (bound " << pl_piece_bound(c, gamma) << ", gamma " << gamma
            << ", reference plot has 3 on an unstated domain)\n";
  return 0;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(const Globals& g, const std::string& instance, const std::string& schedule, const std::string& B,
               bool reversible) {
  Instance inst = load_instance(instance);
  auto z = exact_z(inst.system);
  if (!z) throw InvalidArgument("verify needs an explicit or enumerable instance");
  CoolingSchedule s = load_schedule(schedule);
  double const bound = parse_bound(B);
  auto rep = reversible ? verify_reversible(*z, s, bound) : verify_schedule(*z, s, bound);
  emit(g, verification_json(rep).dump(2) + "\n");
  return rep.passed ? 0 : kRunFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cooling schedules and product estimators for partition functions"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Root seed; every stream is split from it");
  app.add_option("--workers", g.workers, "Sampler worker threads")->check(CLI::PositiveNumber);
  app.add_option("--mode", g.mode, "faithful | desk")->check(CLI::IsMember({"faithful", "desk"}));
  app.add_option("--out", g.out, "Output file (default stdout)");

  SamplerOpts so;
  auto add_sampler_opts = [&](CLI::App* sub) {
    sub->add_option("--sampler", so.sampler, "auto | exact | mcmc")->check(CLI::IsMember({"auto", "exact", "mcmc"}));
    sub->add_option("--chain-steps", so.chain_steps, "Chain transitions per sample");
    sub->add_option("--tau2", so.tau2, "Relaxation-time surrogate (default per model)");
    sub->add_option("--start", so.start, "cold | warm")->check(CLI::IsMember({"cold", "warm"}));
  };

  ScheduleArgs sa;
  auto* sch = app.add_subcommand("schedule", "Build a cooling schedule");
  sch->add_option("--instance", sa.instance)->required()->check(CLI::ExistingFile);
  sch->add_option("--kind", sa.kind)->check(CLI::IsMember({"adaptive", "uniform", "bezakova", "greedy", "existence"}));
  sch->add_option("--delta-prime", sa.delta_prime);
  sch->add_option("--s", sa.s, "Desk-mode samples per oracle batch (default 2000)");
  sch->add_option("--B", sa.B, "Bound for --kind greedy (e.g. e2)");
  sch->add_option("--transcript", sa.transcript, "JSON Lines transcript path");
  sch->add_option("--csv", sa.csv, "Also write the schedule as CSV");
  sch->add_flag("--verify", sa.verify, "Re-check with the exact oracle");
  sch->add_flag("--augment", sa.augment, "Apply the reversible augmentation");
  add_sampler_opts(sch);

  EstimateArgs ea;
  auto* est = app.add_subcommand("estimate", "Estimate Z(inf) (or the count) with the product estimator");
  est->add_option("--instance", ea.instance)->required()->check(CLI::ExistingFile);
  est->add_option("--schedule", ea.schedule, "Use this schedule instead of building one")->check(CLI::ExistingFile);
  est->add_option("--eps", ea.eps);
  est->add_option("--runs", ea.runs, "Independent runs; the median is reported");
  est->add_option("--B", ea.B, "Ratio bound for the sample count");
  est->add_option("--cap", ea.cap, "Cap on samples per ratio");
  est->add_option("--delta-prime", ea.delta_prime);
  est->add_option("--s", ea.s);
  add_sampler_opts(est);

  LowerBoundArgs la;
  auto* lb = app.add_subcommand("lowerbound", "Lower-bound constructions");
  lb->add_option("--n", la.n);
  lb->add_option("--B", la.B);
  lb->add_option("--log-A", la.log_A, "Non-adaptive bound at this ln A");
  lb->add_option("--grid", la.grid);

  std::size_t pl_n = 20;
  std::size_t pl_points = 201;
  auto* pl = app.add_subcommand("plapprox", "Piecewise-linear approximation of n ln(1+e^-x) as CSV");
  pl->add_option("--n", pl_n);
  pl->add_option("--points", pl_points)->check(CLI::Range(2, 1000000));

  std::string v_instance, v_schedule, v_B = "3e6";
  bool v_rev = false;
  auto* ver = app.add_subcommand("verify", "Check a schedule against the exact oracle");
  ver->add_option("--instance", v_instance)->required()->check(CLI::ExistingFile);
  ver->add_option("--schedule", v_schedule)->required()->check(CLI::ExistingFile);
  ver->add_option("--B", v_B);
  ver->add_flag("--reversible", v_rev);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*sch) return cmd_schedule(g, sa, so);
    if (*est) return cmd_estimate(g, ea, so);
    if (*lb) return cmd_lowerbound(g, la);
    if (*pl) return cmd_plapprox(g, pl_n, pl_points);
    if (*ver) return cmd_verify(g, v_instance, v_schedule, v_B, v_rev);
  } catch (const AssumptionViolation& e) {
    std::cerr << "anneal: " << e.what() << '\n';
    return kAssumption;
  } catch (const RunFailed& e) {
    std::cerr << "anneal: run failed: " << e.what() << '\n';
    return kRunFailure;
  } catch (const std::exception& e) {
    std::cerr << "anneal: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
