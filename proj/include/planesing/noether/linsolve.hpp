#pragma once

#include <vector>

#include "planesing/exactfield/field.hpp"

namespace planesing {

struct LinearSolution {
  bool consistent = false;
  int rank = 0;
  std::vector<Scalar> particular;            // free variables set to 0
  std::vector<std::vector<Scalar>> kernel;   // one vector per free variable
};

// Solves a x = b exactly.  Over Q the elimination is fraction-free (Bareiss)
// on an integer-scaled copy; over finite fields it is plain elimination.
LinearSolution solve_linear(const FieldPtr& k, const std::vector<std::vector<Scalar>>& a, const std::vector<Scalar>& b);

}  // namespace planesing
