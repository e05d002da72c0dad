#include "planesing/invariants/report_json.hpp"

namespace planesing {

using nlohmann::json;

json to_json(const SingularityReport& r) {
  json seq = json::array();
  for (const auto& e : r.multiplicity_sequence) seq.push_back({{"depth", e.depth}, {"r", e.r}});
  return {{"point", r.point},
          {"field", r.field},
          {"multiplicity_sequence", seq},
          {"delta", r.delta},
          {"conductor_degree", r.conductor_degree}};
}

json to_json(const GenusReport& r) {
  json pts = json::array();
  for (const auto& p : r.points) pts.push_back(to_json(p));
  return {{"degree", r.degree},
          {"arithmetic_genus", r.arithmetic_genus},
          {"delta", r.delta},
          {"genus", r.genus},
          {"irreducibility_certified", r.irreducibility_certified},
          {"points", pts}};
}

json to_json(const AdjointReport& r) {
  json ms = json::array();
  for (const auto& m : r.margins)
    ms.push_back({{"node", m.node_id}, {"depth", m.depth}, {"r_curve", m.r_curve}, {"r_adjoint", m.r_adjoint},
                  {"margin", m.margin}});
  return {{"adjoint", r.adjoint}, {"margins", ms}};
}

json to_json(const IntersectionReport& r) {
  json cs = json::array();
  for (const auto& c : r.contributions) cs.push_back({{"depth", c.depth}, {"r_c", c.r_c}, {"r_d", c.r_d}});
  return {{"point", r.point},
          {"noether_sum", r.noether_sum},
          {"contributions", cs},
          {"oracle_value", r.oracle_value},
          {"agreement", r.agreement}};
}

}  // namespace planesing
