#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "planesing/exactfield/unipoly.hpp"

namespace planesing {

// Variable sets: affine (x, y), blow-up chart (x, t), projective (X, Y, Z).
enum class VarSet { Affine, Chart, Projective };

int var_count(VarSet v);
const char* var_name(VarSet v, int index);

using Exponent = std::array<int, 3>;

// Graded lexicographic order, largest first: higher total degree, then
// larger exponent of the first variable, and so on.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
    if (da != db) return da > db;
    return a > b;
  }
};

// Sparse polynomial in two or three variables; no stored zero coefficients.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Scalar, GrlexGreater>;

  MultiPoly(FieldPtr f, VarSet v) : field_(std::move(f)), vars_(v) {}
  static MultiPoly constant(const Scalar& c, VarSet v);
  static MultiPoly variable(const FieldPtr& f, VarSet v, int index);
  static MultiPoly monomial(const Scalar& c, VarSet v, const Exponent& e);
  // u(var) as a polynomial of the given variable set.
  static MultiPoly from_univariate(const UniPoly& u, VarSet v, int var);

  const FieldPtr& field() const { return field_; }
  VarSet varset() const { return vars_; }
  int nvars() const { return var_count(vars_); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const;

  int total_degree() const;  // -1 for zero
  int order() const;         // minimal total degree, -1 for zero
  int degree_in(int var) const;
  bool is_homogeneous() const;
  Scalar coeff(const Exponent& e) const;
  Scalar constant_term() const { return coeff({0, 0, 0}); }
  void add_term(const Exponent& e, const Scalar& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Scalar& c) const;
  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly pow(int e) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly embed(const FieldPtr& larger) const;
  MultiPoly renamed(VarSet v) const;
  // Replace variable i by images[i]; all images share one variable set.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  Scalar eval(const std::vector<Scalar>& point) const;

  // Two-variable polynomials viewed in K[other][var]: entry k is the
  // coefficient of var^k as a polynomial in the other variable.
  std::vector<UniPoly> coefficients_in(int var) const;
  static MultiPoly from_coefficients_in(int var, const std::vector<UniPoly>& coeffs, VarSet v);
  // Requires every variable other than `var` to be absent.
  UniPoly to_univariate(int var) const;

  std::string to_string() const;

 private:
  FieldPtr field_;
  VarSet vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace planesing
