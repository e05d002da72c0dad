#include "planesing/blowup/serialize.hpp"

#include <sstream>

namespace planesing {

using nlohmann::json;

namespace {

std::string scalar_text(const Scalar& s) { return s.valid() ? s.to_string() : "0"; }

}  // namespace

json node_to_json(const InfNearNode& n) {
  json j = {
      {"id", n.id},
      {"depth", n.depth},
      {"r", n.r},
      {"shift", scalar_text(n.shift)},
      {"local_eq", n.local_eq.to_string()},
      {"field", n.field->to_string()},
      {"coord_change", n.coord_change.to_string()},
  };
  if (!n.passenger_r.empty()) j["passenger_r"] = n.passenger_r;
  j["children"] = json::array();
  for (const auto& c : n.children) j["children"].push_back(node_to_json(c));
  return j;
}

json tree_to_json(const InfNearTree& t) {
  return {{"termination", termination_name(t.termination)},
          {"seed", t.seed},
          {"node_count", t.node_count},
          {"root", node_to_json(t.root)}};
}

namespace {

json joint_node_to_json(const JointNode& n, const std::vector<std::string>& names) {
  json curves = json::array();
  for (size_t i = 0; i < n.r.size(); ++i) {
    json c = {{"name", i < names.size() ? names[i] : "curve" + std::to_string(i + 1)}, {"r", n.r[i]}};
    c["local_eq"] = n.local_eq[i] ? json(n.local_eq[i]->to_string()) : json(nullptr);
    curves.push_back(c);
  }
  json j = {{"id", n.id},
            {"depth", n.depth},
            {"shift", scalar_text(n.shift)},
            {"field", n.field->to_string()},
            {"coord_change", n.coord_change.to_string()},
            {"curves", curves},
            {"children", json::array()}};
  for (const auto& c : n.children) j["children"].push_back(joint_node_to_json(c, names));
  return j;
}

}  // namespace

json joint_tree_to_json(const JointTree& t, const std::vector<std::string>& names) {
  return {{"termination", termination_name(t.termination)},
          {"seed", t.seed},
          {"num_active", t.num_active},
          {"root", joint_node_to_json(t.root, names)}};
}

std::string xy_string(const MultiPoly& f) {
  if (f.varset() == VarSet::Projective) return f.to_string();
  MultiPoly g(f.field(), VarSet::Projective);
  for (const auto& [e, c] : f.terms()) g.add_term(e, c);
  return g.to_string();
}

json appendix_to_json(const AppendixResult& a) {
  json stages = json::array();
  for (const auto& s : a.stages) {
    json j = {{"n", s.index}, {"F", xy_string(s.poly)}};
    j["a"] = s.a.valid() ? json(s.a.to_string()) : json(nullptr);
    stages.push_back(j);
  }
  json j = {{"status", appendix_status_name(a.status)}, {"r", a.r}, {"stages", stages}, {"phi", a.phi.to_string("X")}};
  j["failed_stage"] = a.status == AppendixStatus::HypothesisFailed ? json(a.failed_stage) : json(nullptr);
  return j;
}

std::string tree_to_dot(const InfNearTree& t) {
  std::ostringstream os;
  os << "digraph infinitely_near {\n  node [shape=box];\n";
  for_each_node(t.root, [&](const InfNearNode& n) {
    os << "  n" << n.id << " [label=\"r=" << n.r << "\\n" << n.local_eq.to_string() << "\"];\n";
    for (const auto& c : n.children) os << "  n" << n.id << " -> n" << c.id << " [label=\"t=" << scalar_text(c.shift) << "\"];\n";
  });
  os << "}\n";
  return os.str();
}

}  // namespace planesing
