#pragma once

#include <string>
#include <vector>

#include "planesing/polyring/multipoly.hpp"

namespace planesing {

// One affine substitution in the plane (applied to two-variable polynomials):
//   Translate(a,b): F(x,y) -> F(x+a, y+b)
//   Shear(l):       F(x,y) -> F(x+l*y, y)
//   Skew(m):        F(x,y) -> F(x, y+m*x)
//   SwapXY:         F(x,y) -> F(y, x)
struct CoordStep {
  enum class Kind { Translate, Shear, Skew, SwapXY };
  Kind kind;
  Scalar a;
  Scalar b;

  CoordStep inverse() const;
  std::string to_string() const;
};

// A composition of steps, applied first to last.  Always invertible.
class CoordChange {
 public:
  CoordChange() = default;
  static CoordChange translate(const Scalar& a, const Scalar& b);
  static CoordChange shear(const Scalar& lambda);
  static CoordChange skew(const Scalar& mu);
  static CoordChange swap_xy();

  const std::vector<CoordStep>& steps() const { return steps_; }
  bool is_identity() const { return steps_.empty(); }

  // This change followed by `next`.
  CoordChange then(const CoordChange& next) const;
  CoordChange inverse() const;
  MultiPoly apply(const MultiPoly& f) const;
  // Image of a point under the inverse substitution: if G = apply(F) and
  // G(u) = 0 then F(map_point(u)) = 0.
  std::pair<Scalar, Scalar> map_point(const Scalar& u, const Scalar& v) const;

  std::string to_string() const;

 private:
  std::vector<CoordStep> steps_;
};

MultiPoly apply_step(const CoordStep& s, const MultiPoly& f);

}  // namespace planesing
