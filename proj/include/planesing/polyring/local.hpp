#pragma once

#include <vector>

#include "planesing/polyring/coordchange.hpp"

namespace planesing {

// Order of F at the origin (minimal total degree of a term).
int mult_at_origin(const MultiPoly& f);
// Sum of the terms of minimal total degree.
MultiPoly lowest_form(const MultiPoly& f);
// F_r(1, t) for the lowest form F_r, as a polynomial in t.
UniPoly tangent_polynomial(const MultiPoly& f);
// F_r(l, 1) as a polynomial in l; its roots are the bad shear parameters.
UniPoly suitability_polynomial(const MultiPoly& f);
bool is_suitable(const MultiPoly& f);

MultiPoly translate(const MultiPoly& f, const Scalar& a, const Scalar& b);
MultiPoly partial_derivative(const MultiPoly& f, int var);

// Which projective coordinate is set to 1.  The two remaining coordinates
// become (x, y) in their natural order: Z=1 uses (X,Y), Y=1 uses (X,Z),
// X=1 uses (Y,Z).
enum class ProjChart { Z, Y, X };
const char* chart_name(ProjChart c);
MultiPoly dehomogenize(const MultiPoly& F, ProjChart chart = ProjChart::Z);
MultiPoly homogenize(const MultiPoly& f, int degree, ProjChart chart = ProjChart::Z);
MultiPoly homogenize(const MultiPoly& f, ProjChart chart = ProjChart::Z);
// An affine polynomial as is; a polynomial in X, Y free of Z read as one in
// x, y.  Chart polynomials (x, t) are rejected.
MultiPoly as_affine(const MultiPoly& f);

// The i-th shear candidate of a field: 0, 1, -1, 2, -2, ... through the
// prime field, then the remaining elements of an extension in enumeration
// order.  Returns false past the end of a finite field.
bool shear_candidate(const FieldPtr& f, std::uint64_t i, Scalar& out);

// First candidate l with P(l) != 0 for every P in `bad`.  Over a finite
// field too small for that, extends the field of `bad` and continues with
// extension elements.
Scalar find_good_shear(const std::vector<UniPoly>& bad);

struct Suitable {
  MultiPoly poly;
  CoordChange change;  // poly = change.apply(input)
};

// Shear x -> x + l*y so that F_r(0,1) != 0; identity when already suitable.
Suitable make_suitable(const MultiPoly& f);

}  // namespace planesing
