#include "anneal/models.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>

#include "anneal/errors.hpp"
#include "anneal/log_weight.hpp"

namespace anneal {

Graph::Graph(std::size_t vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  adjacency_.resize(vertex_count_);
  incident_.resize(vertex_count_);
  std::set<std::pair<int, int>> seen;
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    auto [u, v] = edges_[id];
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertex_count_ ||
        static_cast<std::size_t>(v) >= vertex_count_) {
      throw InvalidArgument("Graph: edge endpoint out of range");
    }
    if (u == v) throw InvalidArgument("Graph: self-loop at vertex " + std::to_string(u));
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw InvalidArgument("Graph: duplicate edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "}");
    }
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
    incident_[static_cast<std::size_t>(u)].push_back(static_cast<int>(id));
    incident_[static_cast<std::size_t>(v)].push_back(static_cast<int>(id));
  }
}

Graph Graph::grid(std::size_t side) {
  std::vector<std::pair<int, int>> edges;
  auto id = [side](std::size_t r, std::size_t c) { return static_cast<int>(r * side + c); };
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      if (c + 1 < side) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < side) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return Graph(side * side, std::move(edges));
}

Graph Graph::path(std::size_t vertex_count) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t v = 0; v + 1 < vertex_count; ++v) {
    edges.emplace_back(static_cast<int>(v), static_cast<int>(v + 1));
  }
  return Graph(vertex_count, std::move(edges));
}

Graph Graph::cycle(std::size_t vertex_count) {
  Graph p = path(vertex_count);
  auto edges = p.edges();
  if (vertex_count >= 3) edges.emplace_back(static_cast<int>(vertex_count - 1), 0);
  return Graph(vertex_count, std::move(edges));
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (auto const& a : adjacency_) d = std::max(d, a.size());
  return d;
}

GibbsSystem GibbsSystem::colorings(Graph g, int k) {
  if (k < 1) throw InvalidArgument("colorings: k must be >= 1");
  return GibbsSystem(Colorings{std::move(g), k});
}

GibbsSystem GibbsSystem::ising_grid(std::size_t side) {
  if (side < 1) throw InvalidArgument("ising_grid: side must be >= 1");
  return GibbsSystem(IsingGrid{side, Graph::grid(side)});
}

GibbsSystem GibbsSystem::independent_sets(Graph g, double fugacity) {
  if (!(fugacity > 0.0) || std::isinf(fugacity)) {
    throw InvalidArgument("independent_sets: fugacity must be positive and finite");
  }
  return GibbsSystem(IndependentSets{std::move(g), std::log(fugacity)});
}

GibbsSystem GibbsSystem::matchings(Graph g) { return GibbsSystem(Matchings{std::move(g)}); }

GibbsSystem GibbsSystem::explicit_z(PartitionFunction z) { return GibbsSystem(ExplicitZ{std::move(z)}); }

std::string GibbsSystem::kind_name() const {
  struct V {
    std::string operator()(const Colorings&) const { return "colorings"; }
    std::string operator()(const IsingGrid&) const { return "ising_grid"; }
    std::string operator()(const IndependentSets&) const { return "independent_sets"; }
    std::string operator()(const Matchings&) const { return "matchings"; }
    std::string operator()(const ExplicitZ&) const { return "explicit"; }
  };
  return std::visit(V{}, model_);
}

std::size_t GibbsSystem::degree() const {
  struct V {
    std::size_t operator()(const Colorings& m) const { return m.graph.edge_count(); }
    std::size_t operator()(const IsingGrid& m) const { return m.graph.edge_count(); }
    std::size_t operator()(const IndependentSets& m) const { return m.graph.edge_count(); }
    std::size_t operator()(const Matchings& m) const {
      return std::min(m.graph.edge_count(), m.graph.vertex_count() / 2);
    }
    std::size_t operator()(const ExplicitZ& m) const { return m.z.degree(); }
  };
  return std::visit(V{}, model_);
}

double GibbsSystem::log_A() const {
  struct V {
    double operator()(const Colorings& m) const {
      return static_cast<double>(m.graph.vertex_count()) * std::log(static_cast<double>(m.k));
    }
    double operator()(const IsingGrid& m) const {
      return static_cast<double>(m.graph.vertex_count()) * std::log(2.0);
    }
    double operator()(const IndependentSets& m) const {
      // ln (1 + lambda)^|V|
      return static_cast<double>(m.graph.vertex_count()) * log_add(0.0, m.log_fugacity);
    }
    double operator()(const Matchings& m) const {
      return static_cast<double>(m.graph.edge_count()) * std::log(2.0);
    }
    double operator()(const ExplicitZ& m) const { return m.z.log_A(); }
  };
  return std::visit(V{}, model_);
}

bool GibbsSystem::log_A_is_exact() const { return !std::holds_alternative<Matchings>(model_); }

CountAnchor GibbsSystem::anchor() const {
  return std::holds_alternative<Matchings>(model_) ? CountAnchor::Zero : CountAnchor::Infinity;
}

double GibbsSystem::log_known_end() const {
  // Z(inf) = 1 for matchings: only the empty matching survives.
  return anchor() == CountAnchor::Zero ? 0.0 : log_A();
}

double GibbsSystem::log_state_space() const {
  struct V {
    double operator()(const Colorings& m) const {
      return static_cast<double>(m.graph.vertex_count()) * std::log(static_cast<double>(m.k));
    }
    double operator()(const IsingGrid& m) const {
      return static_cast<double>(m.graph.vertex_count()) * std::log(2.0);
    }
    double operator()(const IndependentSets& m) const {
      return static_cast<double>(m.graph.vertex_count()) * std::log(2.0);
    }
    double operator()(const Matchings& m) const {
      return static_cast<double>(m.graph.edge_count()) * std::log(2.0);
    }
    double operator()(const ExplicitZ&) const { return 0.0; }
  };
  return std::visit(V{}, model_);
}

std::size_t GibbsSystem::config_size() const {
  if (const auto* m = std::get_if<Matchings>(&model_)) return m->graph.edge_count();
  if (const Graph* g = graph()) return g->vertex_count();
  return 0;
}

int GibbsSystem::site_values() const {
  if (const auto* m = std::get_if<Colorings>(&model_)) return m->k;
  return std::holds_alternative<ExplicitZ>(model_) ? 0 : 2;
}

const Graph* GibbsSystem::graph() const {
  struct V {
    const Graph* operator()(const Colorings& m) const { return &m.graph; }
    const Graph* operator()(const IsingGrid& m) const { return &m.graph; }
    const Graph* operator()(const IndependentSets& m) const { return &m.graph; }
    const Graph* operator()(const Matchings& m) const { return &m.graph; }
    const Graph* operator()(const ExplicitZ&) const { return nullptr; }
  };
  return std::visit(V{}, model_);
}

namespace {

void check_values(std::span<const int> config, std::size_t size, int values) {
  if (config.size() != size) {
    throw InvalidArgument("configuration has length " + std::to_string(config.size()) +
                          ", expected " + std::to_string(size));
  }
  for (int x : config) {
    if (x < 0 || x >= values) throw InvalidArgument("configuration value out of range");
  }
}

// Pairwise "cost" of an edge for spin systems.
enum class EdgeRule { Equal, Differ, BothOne };

int edge_cost(EdgeRule rule, int a, int b) {
  switch (rule) {
    case EdgeRule::Equal: return a == b;
    case EdgeRule::Differ: return a != b;
    case EdgeRule::BothOne: return a == 1 && b == 1;
  }
  return 0;
}

}  // namespace

int hamiltonian(const GibbsSystem& sys, std::span<const int> config) {
  auto spin_h = [&](const Graph& g, int values, EdgeRule rule) {
    check_values(config, g.vertex_count(), values);
    int h = 0;
    for (auto [u, v] : g.edges()) {
      h += edge_cost(rule, config[static_cast<std::size_t>(u)], config[static_cast<std::size_t>(v)]);
    }
    return h;
  };
  struct V {
    decltype(spin_h)& spin;
    std::span<const int> config;
    int operator()(const Colorings& m) const { return spin(m.graph, m.k, EdgeRule::Equal); }
    int operator()(const IsingGrid& m) const { return spin(m.graph, 2, EdgeRule::Differ); }
    int operator()(const IndependentSets& m) const { return spin(m.graph, 2, EdgeRule::BothOne); }
    int operator()(const Matchings& m) const {
      check_values(config, m.graph.edge_count(), 2);
      std::vector<char> used(m.graph.vertex_count(), 0);
      int size = 0;
      for (std::size_t e = 0; e < config.size(); ++e) {
        if (!config[e]) continue;
        auto [u, v] = m.graph.edges()[e];
        if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)]) {
          throw InvalidArgument("configuration is not a matching");
        }
        used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
        ++size;
      }
      return size;
    }
    int operator()(const ExplicitZ&) const {
      throw InvalidArgument("explicit partition functions have no configurations");
    }
  };
  return std::visit(V{spin_h, config}, sys.model());
}

namespace {

// counts[level * (max_size + 1) + size]; size only tracked for hard-core.
struct Tally {
  std::size_t levels = 0;
  std::size_t sizes = 1;
  std::vector<std::uint64_t> counts;

  Tally(std::size_t l, std::size_t s) : levels(l), sizes(s), counts(l * s, 0) {}
  void merge(const Tally& o) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
  }
};

class SpinEnumerator {
 public:
  SpinEnumerator(const Graph& g, int values, EdgeRule rule, bool track_size, std::size_t levels)
      : g_(g), values_(values), rule_(rule), track_size_(track_size),
        tally_(levels, track_size ? g.vertex_count() + 1 : 1), assign_(g.vertex_count(), 0) {}

  // Enumerates all configurations with vertex 0 fixed to `first`.
  Tally run(int first) {
    if (g_.vertex_count() == 0) {
      tally_.counts[0] += 1;
      return tally_;
    }
    assign_[0] = first;
    recurse(1, 0, track_size_ && first == 1 ? 1 : 0);
    return tally_;
  }

 private:
  void recurse(std::size_t v, int h, int size) {
    if (v == g_.vertex_count()) {
      tally_.counts[static_cast<std::size_t>(h) * tally_.sizes +
                    (track_size_ ? static_cast<std::size_t>(size) : 0)] += 1;
      return;
    }
    auto const& nbrs = g_.neighbors(static_cast<int>(v));
    for (int x = 0; x < values_; ++x) {
      int dh = 0;
      for (int u : nbrs) {
        if (static_cast<std::size_t>(u) < v) dh += edge_cost(rule_, x, assign_[static_cast<std::size_t>(u)]);
      }
      assign_[v] = x;
      recurse(v + 1, h + dh, size + (track_size_ && x == 1 ? 1 : 0));
    }
  }

  const Graph& g_;
  int values_;
  EdgeRule rule_;
  bool track_size_;
  Tally tally_;
  std::vector<int> assign_;
};

class MatchingEnumerator {
 public:
  explicit MatchingEnumerator(const Graph& g, std::size_t levels)
      : g_(g), tally_(levels, 1), used_(g.vertex_count(), 0) {}

  // Shard 0: edge 0 excluded; shard 1: edge 0 included.
  Tally run(int shard) {
    if (g_.edge_count() == 0) {
      if (shard == 0) tally_.counts[0] += 1;
      return tally_;
    }
    if (shard == 1) {
      auto [u, v] = g_.edges()[0];
      used_[static_cast<std::size_t>(u)] = used_[static_cast<std::size_t>(v)] = 1;
      recurse(1, 1);
    } else {
      recurse(1, 0);
    }
    return tally_;
  }

 private:
  void recurse(std::size_t e, int size) {
    if (e == g_.edge_count()) {
      tally_.counts[static_cast<std::size_t>(size)] += 1;
      return;
    }
    recurse(e + 1, size);
    auto [u, v] = g_.edges()[e];
    auto su = static_cast<std::size_t>(u);
    auto sv = static_cast<std::size_t>(v);
    if (!used_[su] && !used_[sv]) {
      used_[su] = used_[sv] = 1;
      recurse(e + 1, size + 1);
      used_[su] = used_[sv] = 0;
    }
  }

  const Graph& g_;
  Tally tally_;
  std::vector<char> used_;
};

template <typename ShardFn>
Tally run_shards(int shards, unsigned workers, ShardFn fn) {
  std::vector<std::optional<Tally>> results(static_cast<std::size_t>(shards));
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(shards)));
  if (workers == 1) {
    for (int s = 0; s < shards; ++s) results[static_cast<std::size_t>(s)] = fn(s);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int s = static_cast<int>(w); s < shards; s += static_cast<int>(workers)) {
          results[static_cast<std::size_t>(s)] = fn(s);
        }
      });
    }
  }
  // Integer counts: merge order cannot affect the result.
  Tally total = *results[0];
  for (std::size_t s = 1; s < results.size(); ++s) total.merge(*results[s]);
  return total;
}

}  // namespace

bool is_enumerable(const GibbsSystem& sys, std::uint64_t cap) {
  if (!sys.has_configurations()) return true;
  return sys.log_state_space() <= std::log(static_cast<double>(cap)) + 1e-9;
}

std::vector<double> enumerate_log_levels(const GibbsSystem& sys, std::uint64_t cap, unsigned workers) {
  if (const auto* e = std::get_if<ExplicitZ>(&sys.model())) {
    auto c = e->z.log_coeffs();
    return {c.begin(), c.end()};
  }
  if (!is_enumerable(sys, cap)) {
    throw EnumerationTooLarge("enumeration refused: about e^" + format_log(sys.log_state_space()) +
                              " = " + format_log(std::exp(sys.log_state_space())) +
                              " configurations exceeds the cap of " + std::to_string(cap));
  }
  std::size_t const levels = sys.degree() + 1;
  std::vector<double> out(levels, kNegInf);

  if (const auto* m = std::get_if<Matchings>(&sys.model())) {
    Tally t = run_shards(2, workers, [&](int s) { return MatchingEnumerator(m->graph, levels).run(s); });
    for (std::size_t i = 0; i < levels; ++i) {
      if (t.counts[i]) out[i] = std::log(static_cast<double>(t.counts[i]));
    }
    return out;
  }

  const Graph& g = *sys.graph();
  int const values = sys.site_values();
  EdgeRule rule = EdgeRule::Equal;
  double log_fugacity = 0.0;
  bool track_size = false;
  if (std::holds_alternative<IsingGrid>(sys.model())) rule = EdgeRule::Differ;
  if (const auto* is = std::get_if<IndependentSets>(&sys.model())) {
    rule = EdgeRule::BothOne;
    track_size = true;
    log_fugacity = is->log_fugacity;
  }
  int const shards = g.vertex_count() == 0 ? 1 : values;
  Tally t = run_shards(shards, workers, [&](int s) {
    return SpinEnumerator(g, values, rule, track_size, levels).run(s);
  });
  for (std::size_t i = 0; i < levels; ++i) {
    for (std::size_t s = 0; s < t.sizes; ++s) {
      std::uint64_t c = t.counts[i * t.sizes + s];
      if (c == 0) continue;
      out[i] = log_add(out[i], std::log(static_cast<double>(c)) + static_cast<double>(s) * log_fugacity);
    }
  }
  return out;
}

PartitionFunction enumerate_coefficients(const GibbsSystem& sys, std::uint64_t cap, unsigned workers) {
  auto levels = enumerate_log_levels(sys, cap, workers);
  if (levels[0] == kNegInf) {
    throw InvalidArgument(sys.kind_name() + " instance has a_0 = 0 (no ground-state configuration); "
                          "a partition function needs a_0 >= 1");
  }
  return PartitionFunction(std::move(levels));
}

}  // namespace anneal
