#pragma once

#include <string>
#include <utility>
#include <vector>

#include "planesing/exactfield/field.hpp"

namespace planesing {

// Dense univariate polynomial, coefficients low to high, trailing zeros
// trimmed.  The zero polynomial has degree -1.
class UniPoly {
 public:
  explicit UniPoly(FieldPtr f) : field_(std::move(f)) {}
  UniPoly(FieldPtr f, std::vector<Scalar> coeffs);
  static UniPoly constant(const Scalar& c);
  static UniPoly monomial(const Scalar& c, int degree);
  static UniPoly variable(const FieldPtr& f) { return monomial(Scalar::one(f), 1); }

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  Scalar coeff(int i) const;
  Scalar lead() const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  // Order of vanishing at 0; -1 for the zero polynomial.
  int low_order() const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Scalar& c) const;
  UniPoly operator-() const;
  UniPoly operator/(const UniPoly& o) const { return divmod(o).first; }
  UniPoly operator%(const UniPoly& o) const { return divmod(o).second; }
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  bool operator==(const UniPoly& o) const;
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  UniPoly monic() const;
  UniPoly derivative() const;
  Scalar eval(const Scalar& v) const;
  UniPoly pow(int e) const;
  UniPoly pow_mod(const mpz_class& e, const UniPoly& modulus) const;
  // Divide by t^k.
  UniPoly shift_down(int k) const;
  UniPoly embed(const FieldPtr& larger) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<Scalar> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

}  // namespace planesing
