#pragma once

#include <array>
#include <string>

#include "planesing/polyring/local.hpp"

namespace planesing {

// Point of the projective plane, first nonzero coordinate scaled to 1.
class ProjPoint {
 public:
  ProjPoint(const Scalar& x, const Scalar& y, const Scalar& z);

  const std::array<Scalar, 3>& coords() const { return c_; }
  const FieldPtr& field() const { return c_[0].field(); }
  bool operator==(const ProjPoint& o) const;
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  std::array<Scalar, 3> c_;
};

// Z=1 when Z != 0, otherwise Y=1, otherwise X=1.
ProjChart chart_for(const ProjPoint& p);

// Affine equation of F in chart_for(p), translated so that p is the origin.
MultiPoly localize(const MultiPoly& F, const ProjPoint& p);

// F(M * (X,Y,Z)^T) for a 3x3 matrix given row by row.
MultiPoly linear_substitute(const MultiPoly& F, const std::array<std::array<Scalar, 3>, 3>& m);

}  // namespace planesing
