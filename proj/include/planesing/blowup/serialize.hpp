#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "planesing/blowup/blowup.hpp"

namespace planesing {

nlohmann::json node_to_json(const InfNearNode& n);
nlohmann::json tree_to_json(const InfNearTree& t);
nlohmann::json joint_tree_to_json(const JointTree& t, const std::vector<std::string>& names);
nlohmann::json appendix_to_json(const AppendixResult& a);

// Graphviz digraph with one box per infinitely near point, labelled r.
std::string tree_to_dot(const InfNearTree& t);

// Polynomial in X, Y (Z absent) printed with the capital letters.
std::string xy_string(const MultiPoly& f);

}  // namespace planesing
