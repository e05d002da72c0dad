#pragma once

#include <string_view>

#include "planesing/polyring/multipoly.hpp"

namespace planesing {

// Grammar: integers, a/b, + - * / ^, parentheses and juxtaposition
// ("2x^2y").  Variables come from exactly one of {x, y}, {x, t} or
// {X, Y, Z}; z1, z2, ... name the generators of the field's tower.
// Division is only by nonzero constants.  A polynomial without variables
// gets `fallback` as its variable set.
MultiPoly parse_poly(std::string_view text, const FieldPtr& field, VarSet fallback = VarSet::Affine);

}  // namespace planesing
