#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "planesing/exactfield/unipoly.hpp"

namespace planesing {

inline constexpr std::uint64_t kDefaultSeed = 1;

struct Factorization {
  Scalar unit;  // leading coefficient of the input
  // Monic, pairwise distinct, sorted by (degree, text).
  std::vector<std::pair<UniPoly, int>> factors;
  // False only over Q when a nonlinear factor could not be certified
  // irreducible (only rational roots are split off there).
  bool complete = true;
};

struct Root {
  Scalar value;  // may live in an extension of the polynomial's field
  int multiplicity = 1;
};

// f = prod s_i^i with s_i squarefree and pairwise coprime (monic).
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);

// Over finite fields: complete factorization (Cantor-Zassenhaus, seeded).
// Over Q: rational linear factors, then the remaining squarefree parts.
Factorization uni_factor(const UniPoly& f, std::uint64_t seed = kDefaultSeed);

// Exact over finite fields.  Over Q returns true only when certified via a
// prime of good reduction; a false answer means "not certified".
bool is_irreducible(const UniPoly& f);

// Roots lying in f's own field.
std::vector<Root> roots_in_field(const UniPoly& f, std::uint64_t seed = kDefaultSeed);

// Every root of f over the algebraic closure, each irreducible factor of
// degree d contributing d conjugate roots in the field K[z]/(factor).
// Over Q throws NonRationalPoint when a nonlinear factor remains.
std::vector<Root> all_roots(const UniPoly& f, std::uint64_t seed = kDefaultSeed);

// Checked construction of base[z]/(m).
FieldPtr extend_field(const FieldPtr& base, const UniPoly& minpoly);

// Extension of the given degree by the first irreducible monic polynomial
// in a fixed enumeration order.
FieldPtr find_extension(const FieldPtr& base, int degree);

}  // namespace planesing
