#include "anneal/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <nlohmann/json.hpp>
#include <ostream>

#include "anneal/errors.hpp"
#include "anneal/log_weight.hpp"

namespace anneal {

using nlohmann::json;

double json_to_double(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    auto const s = v.get<std::string>();
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return kNegInf;
  }
  throw ParseError("expected a number, \"inf\" or \"-inf\", got " + v.dump());
}

json double_to_json(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) throw InvalidArgument("NaN has no JSON form");
  return x;
}

namespace {

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw ParseError("graph needs {\"n\": ..., \"edges\": [[u, v], ...]}");
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edge must be [u, v]: " + e.dump());
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(j.at("n").get<std::size_t>(), std::move(edges));
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace

Instance instance_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("type")) throw ParseError("instance needs a \"type\" field");
    auto const type = j.at("type").get<std::string>();
    std::optional<Beta> target;
    if (j.contains("target_beta")) {
      double const t = json_to_double(j.at("target_beta"));
      target = std::isinf(t) ? Beta::infinity() : Beta(t);
    }
    if (type == "explicit") {
      std::vector<double> lc;
      if (j.contains("log_coeffs")) {
        for (const auto& v : j.at("log_coeffs")) lc.push_back(json_to_double(v));
        return {GibbsSystem::explicit_z(PartitionFunction(std::move(lc))), target};
      }
      if (j.contains("coeffs")) {
        std::vector<double> c;
        for (const auto& v : j.at("coeffs")) c.push_back(v.get<double>());
        return {GibbsSystem::explicit_z(PartitionFunction::from_counts(c)), target};
      }
      throw ParseError("explicit instance needs \"log_coeffs\" or \"coeffs\"");
    }
    if (type == "colorings") {
      return {GibbsSystem::colorings(graph_from_json(j.at("graph")), j.at("k").get<int>()), target};
    }
    if (type == "ising_grid") return {GibbsSystem::ising_grid(j.at("side").get<std::size_t>()), target};
    if (type == "independent_sets") {
      double const fug = j.contains("fugacity") ? j.at("fugacity").get<double>() : 1.0;
      return {GibbsSystem::independent_sets(graph_from_json(j.at("graph")), fug), target};
    }
    if (type == "matchings") return {GibbsSystem::matchings(graph_from_json(j.at("graph"))), target};
    throw ParseError("unknown instance type \"" + type + "\"");
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
}

Instance load_instance(const std::string& path) { return instance_from_json(read_file(path)); }

json instance_to_json(const Instance& inst) {
  json j;
  const auto& m = inst.system.model();
  if (const auto* e = std::get_if<ExplicitZ>(&m)) {
    json lc = json::array();
    for (double x : e->z.log_coeffs()) lc.push_back(double_to_json(x));
    j = {{"type", "explicit"}, {"log_coeffs", lc}};
  } else if (const auto* c = std::get_if<Colorings>(&m)) {
    j = {{"type", "colorings"}, {"k", c->k}, {"graph", graph_to_json(c->graph)}};
  } else if (const auto* g = std::get_if<IsingGrid>(&m)) {
    j = {{"type", "ising_grid"}, {"side", g->side}};
  } else if (const auto* is = std::get_if<IndependentSets>(&m)) {
    j = {{"type", "independent_sets"}, {"graph", graph_to_json(is->graph)}, {"fugacity", std::exp(is->log_fugacity)}};
  } else if (const auto* mm = std::get_if<Matchings>(&m)) {
    j = {{"type", "matchings"}, {"graph", graph_to_json(mm->graph)}};
  }
  if (inst.target_beta) j["target_beta"] = double_to_json(inst.target_beta->as_double());
  return j;
}

json schedule_to_json(const CoolingSchedule& s) {
  json betas = json::array();
  for (Beta b : s.betas()) betas.push_back(double_to_json(b.as_double()));
  json moves = json::array();
  for (Move m : s.moves()) moves.push_back(std::string(to_string(m)));
  return {{"betas", betas}, {"moves", moves}};
}

CoolingSchedule schedule_from_json(const json& j) {
  try {
    std::vector<Beta> betas;
    for (const auto& v : j.at("betas")) {
      double const x = json_to_double(v);
      betas.push_back(std::isinf(x) && x > 0 ? Beta::infinity() : Beta(x));
    }
    if (!j.contains("moves")) return CoolingSchedule::uniform_tag(std::move(betas), Move::NonAdaptive);
    std::vector<Move> moves;
    for (const auto& v : j.at("moves")) moves.push_back(parse_move(v.get<std::string>()));
    return CoolingSchedule(std::move(betas), std::move(moves));
  } catch (const json::exception& e) {
    throw ParseError(std::string("schedule: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("schedule: ") + e.what());
  }
}

CoolingSchedule load_schedule(const std::string& path) { return schedule_from_json(read_file(path)); }

void write_schedule_csv(std::ostream& os, const CoolingSchedule& s) {
  os << "index,beta,move\r\n";
  const auto& b = s.betas();
  for (std::size_t i = 0; i < b.size(); ++i) {
    os << i << ',' << (b[i].is_infinite() ? std::string("inf") : format_log(b[i].value())) << ','
       << (i == 0 ? std::string("start") : std::string(to_string(s.moves()[i - 1]))) << "\r\n";
  }
}

}  // namespace anneal
