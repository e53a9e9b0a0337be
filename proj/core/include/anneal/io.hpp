#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "anneal/models.hpp"
#include "anneal/schedule.hpp"

namespace anneal {

struct Instance {
  GibbsSystem system;
  std::optional<Beta> target_beta;
};

// {"type":"explicit","log_coeffs":[0, 1.5, "-inf", ...]}
// {"type":"colorings","k":3,"graph":{"n":3,"edges":[[0,1],[1,2],[2,0]]}}
// {"type":"ising_grid","side":2}
// {"type":"independent_sets","graph":{...},"fugacity":1}
// {"type":"matchings","graph":{...}}
// Any of them may carry "target_beta" (number or "inf").
Instance instance_from_json(const nlohmann::json& j);
Instance load_instance(const std::string& path);
nlohmann::json instance_to_json(const Instance& inst);

// {"betas":[0, ..., "inf"],"moves":[...]}; doubles round-trip exactly.
nlohmann::json schedule_to_json(const CoolingSchedule& s);
CoolingSchedule schedule_from_json(const nlohmann::json& j);
CoolingSchedule load_schedule(const std::string& path);

// RFC 4180: header "index,beta,move", one row per point.
void write_schedule_csv(std::ostream& os, const CoolingSchedule& s);

// Numbers or the strings "inf" / "-inf".
double json_to_double(const nlohmann::json& v);
nlohmann::json double_to_json(double x);

}  // namespace anneal
