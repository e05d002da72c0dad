#include "planesing/noether/report_json.hpp"

#include "planesing/invariants/report_json.hpp"

namespace planesing {

using nlohmann::json;

json to_json(const ConditionReport& r) {
  json pts = json::array();
  for (const auto& p : r.points) {
    json nodes = json::array();
    for (const auto& n : p.nodes)
      nodes.push_back({{"depth", n.depth}, {"r_f", n.r_f}, {"r_g", n.r_g}, {"r_h", n.r_h}, {"margin", n.margin}});
    pts.push_back({{"point", p.point.to_string()},
                   {"chart", chart_name(p.chart)},
                   {"passed", p.passed},
                   {"nodes", nodes},
                   {"failing_depth", p.failing_depth ? json(*p.failing_depth) : json(nullptr)}});
  }
  return {{"passed", r.passed}, {"points", pts}};
}

json to_json(const NoetherCertificate& c) {
  json j = {{"status", cert_status_name(c.status)},
            {"A", c.a ? json(c.a->to_string()) : json(nullptr)},
            {"B", c.b ? json(c.b->to_string()) : json(nullptr)},
            {"deg_A", c.deg_a},
            {"deg_B", c.deg_b},
            {"residual", c.residual.to_string()}};
  j["failed_point"] = c.failed_point ? json(c.failed_point->to_string()) : json(nullptr);
  j["failed_depth"] = c.failed_depth ? json(*c.failed_depth) : json(nullptr);
  return j;
}

json to_json(const BezoutReport& r) {
  json pts = json::array();
  for (const auto& [p, ir] : r.per_point) pts.push_back(to_json(ir));
  return {{"total", r.total}, {"expected", r.expected}, {"agreement", r.agreement}, {"points", pts}};
}

}  // namespace planesing
