#pragma once

#include "planesing/polyring/multipoly.hpp"

namespace planesing {

// f with variable `var` set to v, as a polynomial in the other variable.
UniPoly specialize(const MultiPoly& f, int var, const Scalar& v);

// Greatest common divisor of two affine polynomials, scaled so the
// leading term (in grlex order) has coefficient 1.  gcd(0, 0) = 0.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

// Exact quotient a / b of affine polynomials; throws InvalidArgument when
// b does not divide a.
MultiPoly poly_divide(const MultiPoly& a, const MultiPoly& b);

// gcd of homogeneous polynomials in X, Y, Z.
MultiPoly proj_gcd(const MultiPoly& a, const MultiPoly& b);

// Res_y(f, g) as a polynomial in x (Sylvester determinant, fraction-free).
// Zero when f and g share a factor of positive y-degree.
UniPoly resultant_y(const MultiPoly& f, const MultiPoly& g);

}  // namespace planesing
