#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "anneal/partition_function.hpp"

namespace anneal {

// Simple undirected graph on vertices 0..vertex_count-1. No self-loops and no
// duplicate edges.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t vertex_count, std::vector<std::pair<int, int>> edges);
  static Graph grid(std::size_t side);
  static Graph path(std::size_t vertex_count);
  static Graph cycle(std::size_t vertex_count);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  // Edge ids incident to v, parallel to neighbors(v).
  const std::vector<int>& incident_edges(int v) const {
    return incident_[static_cast<std::size_t>(v)];
  }
  std::size_t max_degree() const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> incident_;
};

// k-labelings; H = number of monochromatic edges.
struct Colorings {
  Graph graph;
  int k = 0;
};

// Ferromagnetic Ising model on a side x side grid; spins stored as 0/1;
// H = number of disagreeing edges.
struct IsingGrid {
  std::size_t side = 0;
  Graph graph;
};

// Hard-core model over all vertex subsets; H = number of edges with both
// endpoints occupied, each subset weighted by fugacity^|subset|. Z(inf) is
// the independent-set polynomial Z_G(fugacity).
struct IndependentSets {
  Graph graph;
  double log_fugacity = 0.0;
};

// Matchings with weight e^{-beta |M|}. Configurations are per-edge 0/1
// indicators. Z(inf) = 1 and the count of matchings sits at Z(0).
struct Matchings {
  Graph graph;
};

struct ExplicitZ {
  PartitionFunction z;
};

// Which end of the beta axis the counting target lives at, given that the
// opposite end is known analytically.
enum class CountAnchor {
  Infinity,  // known ln Z(0); target Z(beta_target), default Z(inf)
  Zero,      // known ln Z(inf); target Z(0)
};

using Configuration = std::vector<int>;

class GibbsSystem {
 public:
  using Model = std::variant<Colorings, IsingGrid, IndependentSets, Matchings, ExplicitZ>;

  static GibbsSystem colorings(Graph g, int k);
  static GibbsSystem ising_grid(std::size_t side);
  static GibbsSystem independent_sets(Graph g, double fugacity = 1.0);
  static GibbsSystem matchings(Graph g);
  static GibbsSystem explicit_z(PartitionFunction z);

  const Model& model() const { return model_; }
  std::string kind_name() const;

  // Degree n: every Hamiltonian value lies in [0, n].
  std::size_t degree() const;
  // ln Z(0). Exact for every model except matchings, where it is the upper
  // bound |E| ln 2 (Z(0) is the unknown count there).
  double log_A() const;
  bool log_A_is_exact() const;

  CountAnchor anchor() const;
  // ln of the analytically known end: ln Z(0) for Infinity, ln Z(inf) for Zero.
  double log_known_end() const;

  // Size of the configuration space (log), used against enumeration caps.
  double log_state_space() const;
  // Length of a configuration vector, and number of values per site.
  std::size_t config_size() const;
  int site_values() const;
  const Graph* graph() const;

  bool has_configurations() const { return !std::holds_alternative<ExplicitZ>(model_); }

 private:
  explicit GibbsSystem(Model m) : model_(std::move(m)) {}
  Model model_;
};

// H(sigma). Throws InvalidArgument for a configuration that does not belong
// to the system.
int hamiltonian(const GibbsSystem& sys, std::span<const int> config);

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

// Exact a_i by exhaustive enumeration. Throws EnumerationTooLarge when the
// configuration space exceeds the cap, and InvalidArgument (via
// PartitionFunction) when a_0 = 0. Result is independent of `workers`.
PartitionFunction enumerate_coefficients(const GibbsSystem& sys,
                                         std::uint64_t cap = kDefaultEnumerationCap,
                                         unsigned workers = 1);

// Raw level weights without the a_0 >= 1 check; entry i is ln a_i.
std::vector<double> enumerate_log_levels(const GibbsSystem& sys,
                                         std::uint64_t cap = kDefaultEnumerationCap,
                                         unsigned workers = 1);

bool is_enumerable(const GibbsSystem& sys, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace anneal
