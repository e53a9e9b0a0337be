#include "anneal/chains.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "anneal/errors.hpp"
#include "anneal/log_weight.hpp"
#include "anneal/nonadaptive.hpp"

namespace anneal {

namespace {

// Edge id matching vertex v in `state`, or -1.
int matched_edge(const Graph& g, const Configuration& state, int v) {
  for (int e : g.incident_edges(v)) {
    if (state[static_cast<std::size_t>(e)]) return e;
  }
  return -1;
}

}  // namespace

void matching_chain_step(const Graph& g, Configuration& state, Beta beta, Rng& rng) {
  if (g.edge_count() == 0) return;
  auto const e = static_cast<int>(uniform_index(rng, g.edge_count()));
  auto const se = static_cast<std::size_t>(e);
  auto [u, v] = g.edges()[se];
  int const eu = matched_edge(g, state, u);
  int const ev = matched_edge(g, state, v);

  int delta = 0;       // |M'| - |M|
  int drop = -1;       // edge removed by a slide
  bool add = false;
  if (state[se]) {
    delta = -1;
  } else if (eu < 0 && ev < 0) {
    add = true;
    delta = 1;
  } else if (eu < 0 && ev >= 0) {
    add = true;
    drop = ev;
  } else if (ev < 0 && eu >= 0) {
    add = true;
    drop = eu;
  } else {
    return;
  }

  // min{1, e^{-beta delta}} / 2, written so that beta = inf needs no 0/0.
  double accept = 0.5;
  if (delta > 0) accept = beta.is_infinite() ? 0.0 : 0.5 * std::exp(-beta.value() * delta);
  if (uniform01(rng) >= accept) return;

  if (delta < 0) {
    state[se] = 0;
  } else if (add) {
    if (drop >= 0) state[static_cast<std::size_t>(drop)] = 0;
    state[se] = 1;
  }
}

namespace {

// Heat-bath weights at site v, normalised.
std::vector<double> heat_bath(const GibbsSystem& sys, const Configuration& state, int v, Beta beta) {
  const Graph& g = *sys.graph();
  int const values = sys.site_values();
  bool const colorings = std::holds_alternative<Colorings>(sys.model());
  bool const ising = std::holds_alternative<IsingGrid>(sys.model());
  double log_fugacity = 0.0;
  if (const auto* is = std::get_if<IndependentSets>(&sys.model())) log_fugacity = is->log_fugacity;
  std::vector<int> cost(static_cast<std::size_t>(values), 0);
  for (int u : g.neighbors(v)) {
    int const s = state[static_cast<std::size_t>(u)];
    for (int x = 0; x < values; ++x) {
      if (colorings) cost[static_cast<std::size_t>(x)] += (x == s);
      else if (ising) cost[static_cast<std::size_t>(x)] += (x != s);
      else cost[static_cast<std::size_t>(x)] += (x == 1 && s == 1);
    }
  }
  int const min_cost = *std::min_element(cost.begin(), cost.end());
  std::vector<double> lw(static_cast<std::size_t>(values));
  for (int x = 0; x < values; ++x) {
    double const bias = (x == 1 && !colorings && !ising) ? log_fugacity : 0.0;
    int const c = cost[static_cast<std::size_t>(x)] - min_cost;
    lw[static_cast<std::size_t>(x)] = beta.is_infinite() ? (c == 0 ? bias : kNegInf) : bias - beta.value() * c;
  }
  double const total = log_sum_exp(lw);
  for (double& w : lw) w = w == kNegInf ? 0.0 : std::exp(w - total);
  return lw;
}

}  // namespace

void glauber_step(const GibbsSystem& sys, Configuration& state, Beta beta, Rng& rng) {
  const Graph* g = sys.graph();
  if (g == nullptr || std::holds_alternative<Matchings>(sys.model())) {
    throw InvalidArgument("glauber_step: needs a spin system (colorings, ising_grid, independent_sets)");
  }
  if (g->vertex_count() == 0) return;
  auto const v = static_cast<int>(uniform_index(rng, g->vertex_count()));
  auto const p = heat_bath(sys, state, v, beta);
  double u = uniform01(rng);
  int pick = 0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] == 0.0) continue;
    pick = static_cast<int>(x);
    u -= p[x];
    if (u < 0.0) break;
  }
  state[static_cast<std::size_t>(v)] = pick;
}


std::vector<std::pair<Configuration, double>> transition_row(const GibbsSystem& sys, const Configuration& state,
                                                             Beta beta) {
  std::map<Configuration, double> row;
  if (const auto* m = std::get_if<Matchings>(&sys.model())) {
    const Graph& g = m->graph;
    double const pe = 1.0 / static_cast<double>(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edges()[e];
      int const eu = matched_edge(g, state, u);
      int const ev = matched_edge(g, state, v);
      Configuration next = state;
      int delta = 0;
      if (state[e]) {
        next[e] = 0;
        delta = -1;
      } else if (eu < 0 && ev < 0) {
        next[e] = 1;
        delta = 1;
      } else if (eu < 0 || ev < 0) {
        next[static_cast<std::size_t>(eu < 0 ? ev : eu)] = 0;
        next[e] = 1;
      } else {
        row[state] += pe;
        continue;
      }
      double a = 0.5;
      if (delta > 0) a = beta.is_infinite() ? 0.0 : 0.5 * std::exp(-beta.value() * delta);
      row[next] += pe * a;
      row[state] += pe * (1.0 - a);
    }
  } else {
    const Graph* g = sys.graph();
    if (g == nullptr) throw InvalidArgument("transition_row: explicit systems have no chain");
    double const pv = 1.0 / static_cast<double>(g->vertex_count());
    for (std::size_t v = 0; v < g->vertex_count(); ++v) {
      auto p = heat_bath(sys, state, static_cast<int>(v), beta);
      for (std::size_t x = 0; x < p.size(); ++x) {
        if (p[x] == 0.0) continue;
        Configuration next = state;
        next[v] = static_cast<int>(x);
        row[next] += pv * p[x];
      }
    }
  }
  return {row.begin(), row.end()};
}

void chain_step(const GibbsSystem& sys, Configuration& state, Beta beta, Rng& rng) {
  if (const auto* m = std::get_if<Matchings>(&sys.model())) {
    matching_chain_step(m->graph, state, beta, rng);
  } else {
    glauber_step(sys, state, beta, rng);
  }
}

Configuration fixed_start_state(const GibbsSystem& sys) {
  if (!sys.has_configurations()) throw InvalidArgument("explicit systems have no configurations");
  Configuration s(sys.config_size(), 0);
  if (const auto* c = std::get_if<Colorings>(&sys.model())) {
    const Graph& g = c->graph;
    std::vector<char> taken(static_cast<std::size_t>(c->k));
    bool proper = true;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      std::fill(taken.begin(), taken.end(), 0);
      for (int u : g.neighbors(static_cast<int>(v))) {
        if (static_cast<std::size_t>(u) < v) taken[static_cast<std::size_t>(s[static_cast<std::size_t>(u)])] = 1;
      }
      auto it = std::find(taken.begin(), taken.end(), 0);
      if (it == taken.end()) {
        proper = false;
        break;
      }
      s[v] = static_cast<int>(it - taken.begin());
    }
    if (!proper) std::fill(s.begin(), s.end(), 0);
  }
  return s;
}

Configuration sample_mu0(const GibbsSystem& sys, Rng& rng, bool* needs_burn_in) {
  if (needs_burn_in) *needs_burn_in = false;
  if (std::holds_alternative<Matchings>(sys.model())) {
    if (needs_burn_in) *needs_burn_in = true;
    return fixed_start_state(sys);
  }
  Configuration s(sys.config_size(), 0);
  if (const auto* is = std::get_if<IndependentSets>(&sys.model())) {
    // Occupation independent with probability lambda / (1 + lambda).
    double const p = std::exp(is->log_fugacity - log_add(0.0, is->log_fugacity));
    for (int& x : s) x = uniform01(rng) < p ? 1 : 0;
    return s;
  }
  auto const values = static_cast<std::uint64_t>(sys.site_values());
  for (int& x : s) x = static_cast<int>(uniform_index(rng, values));
  return s;
}

std::uint64_t default_tau2(const GibbsSystem& sys) {
  const Graph* g = sys.graph();
  if (g == nullptr) return 1;
  double const nv = static_cast<double>(g->vertex_count());
  double const ln_n = nv > 1 ? std::log(nv) : 1.0;
  double t = nv * ln_n;
  if (std::holds_alternative<Matchings>(sys.model())) t = nv * static_cast<double>(g->edge_count());
  if (const auto* c = std::get_if<Colorings>(&sys.model())) t = c->k * nv * ln_n;
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(t)));
}

std::uint64_t default_cold_steps(const GibbsSystem& sys) {
  double const log_states = std::max(1.0, sys.log_state_space());
  return default_tau2(sys) * static_cast<std::uint64_t>(std::ceil(log_states));
}

std::size_t WarmStates::closest(Beta beta) const {
  if (betas.empty()) throw InvalidArgument("WarmStates: empty");
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < betas.size(); ++j) {
    double const d = beta.is_infinite() ? -betas[j].value() : std::abs(beta.value() - betas[j].value());
    if (d < best_d) {
      best_d = d;
      best = j;
    }
  }
  return best;
}

WarmStates warm_start_driver(const GibbsSystem& sys, const std::vector<Beta>& schedule,
                             std::uint64_t tau2, Rng& rng) {
  if (tau2 < 1) throw InvalidArgument("warm_start_driver: tau2 must be >= 1");
  if (schedule.empty() || schedule.front() != Beta(0.0)) {
    throw InvalidArgument("warm_start_driver: schedule must start at 0");
  }
  WarmStates out;
  bool burn_in = false;
  Configuration state = sample_mu0(sys, rng, &burn_in);
  if (burn_in) {
    for (std::uint64_t t = 0; t < tau2; ++t) chain_step(sys, state, Beta(0.0), rng);
    out.chain_steps += tau2;
  }
  out.betas.push_back(Beta(0.0));
  out.states.push_back(state);
  for (std::size_t j = 1; j < schedule.size(); ++j) {
    if (schedule[j].is_infinite()) break;
    for (std::uint64_t t = 0; t < tau2; ++t) chain_step(sys, state, schedule[j], rng);
    out.chain_steps += tau2;
    out.betas.push_back(schedule[j]);
    out.states.push_back(state);
  }
  return out;
}

McmcSampler::McmcSampler(GibbsSystem sys, ChainConfig cfg) : sys_(std::move(sys)), cfg_(cfg) {
  if (cfg_.steps_per_sample < 1) throw InvalidArgument("ChainConfig: steps_per_sample must be >= 1");
  if (!sys_.has_configurations()) {
    throw InvalidArgument("McmcSampler: explicit systems have no chain; use ExactSampler");
  }
  if (const auto* c = std::get_if<Colorings>(&sys_.model())) {
    auto const delta = c->graph.max_degree();
    if (static_cast<std::size_t>(c->k) < delta + 2) {
      warnings_.push_back("colorings: k = " + std::to_string(c->k) + " < max degree + 2 = " +
                          std::to_string(delta + 2) +
                          "; Glauber dynamics may not be ergodic on proper colorings");
    }
  }
  cold_start_ = fixed_start_state(sys_);
  if (cfg_.mode == StartMode::Warm) {
    std::size_t const n = sys_.degree();
    double const ln_a = sys_.log_A();
    std::vector<Beta> schedule = {Beta(0.0), Beta::infinity()};
    if (n >= 2 && ln_a >= 1.0) schedule = bezakova_schedule(n, ln_a).betas();
    Rng rng = make_rng(cfg_.seed, 0x5741524d);
    warm_ = warm_start_driver(sys_, schedule, cfg_.steps_per_sample, rng);
    chain_steps_ += warm_->chain_steps;
  }
}

McmcSampler::McmcSampler(GibbsSystem sys, ChainConfig cfg, const std::vector<Beta>& warm_schedule)
    : McmcSampler(std::move(sys), ChainConfig{cfg.steps_per_sample, cfg.seed, StartMode::Cold}) {
  cfg_.mode = StartMode::Warm;
  Rng rng = make_rng(cfg_.seed, 0x5741524d);
  warm_ = warm_start_driver(sys_, warm_schedule, cfg_.steps_per_sample, rng);
  chain_steps_ += warm_->chain_steps;
}

int McmcSampler::draw_one(Beta beta, Rng& rng) {
  // mu_inf for matchings is the point mass on the empty matching.
  if (beta.is_infinite() && std::holds_alternative<Matchings>(sys_.model())) return 0;
  Configuration* state = nullptr;
  Configuration scratch;
  if (warm_) {
    state = &warm_->states[warm_->closest(beta)];
  } else {
    scratch = cold_start_;
    state = &scratch;
  }
  for (std::uint64_t t = 0; t < cfg_.steps_per_sample; ++t) chain_step(sys_, *state, beta, rng);
  chain_steps_ += cfg_.steps_per_sample;
  return hamiltonian(sys_, *state);
}

void McmcSampler::fill(Beta beta, std::span<int> out, Rng& rng) {
  for (int& x : out) x = draw_one(beta, rng);
}

}  // namespace anneal
