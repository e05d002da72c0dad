#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "planesing/error.hpp"

namespace planesing {

class Field;
class Scalar;
using FieldPtr = std::shared_ptr<const Field>;

enum class FieldKind { Rationals, Prime, Extension };

bool is_prime(std::uint64_t n);

// Q, F_p, or a tower F_p[z1]/(m1)[z2]/(m2)... Towers are never flattened:
// an element of level k is a polynomial in z_k of degree < [level k : level k-1]
// whose coefficients are level k-1 elements.  Internally finite-field elements
// are stored as a flat residue vector of length absolute_degree(), block k-1
// nested inside block k.
class Field {
 public:
  static FieldPtr rationals();
  static FieldPtr prime(std::uint64_t p);
  // No irreducibility check here; use extend_field() from factor.hpp.
  static FieldPtr extension_unchecked(FieldPtr base, const std::vector<Scalar>& monic_minpoly);

  FieldKind kind() const { return kind_; }
  bool is_finite() const { return kind_ != FieldKind::Rationals; }
  std::uint64_t characteristic() const { return p_; }
  const FieldPtr& base() const { return base_; }
  int level() const { return level_; }
  int degree() const { return degree_; }
  int absolute_degree() const { return abs_degree_; }
  // p^absolute_degree for finite fields, 0 for Q.
  const mpz_class& order() const { return order_; }
  // Coefficients low to high over base(), leading 1 included.
  const std::vector<Scalar>& minpoly() const;
  std::string generator() const { return level_ == 0 ? std::string() : "z" + std::to_string(level_); }
  const std::string& to_string() const { return descriptor_; }

  // Structural: two descriptors built from the same data compare equal.
  bool operator==(const Field& other) const { return descriptor_ == other.descriptor_; }
  // True if sub is this field or one of the levels below it.
  bool contains(const Field& sub) const;
  // The level-`lvl` subfield of this tower.
  const Field* at_level(int lvl) const;

  const std::vector<std::uint64_t>& minpoly_flat() const { return minpoly_flat_; }

 private:
  Field() = default;

  FieldKind kind_ = FieldKind::Rationals;
  std::uint64_t p_ = 0;
  FieldPtr base_;
  int level_ = 0;
  int degree_ = 1;
  int abs_degree_ = 1;
  mpz_class order_ = 0;
  std::shared_ptr<std::vector<Scalar>> minpoly_;
  std::vector<std::uint64_t> minpoly_flat_;  // d blocks (non-leading coefficients)
  std::string descriptor_;
};

// Smallest field containing both, when one sits inside the other's tower.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

class Scalar {
 public:
  using Flat = std::vector<std::uint64_t>;

  Scalar() = default;  // placeholder only; has no field
  static Scalar zero(const FieldPtr& f);
  static Scalar one(const FieldPtr& f);
  static Scalar from_int(const FieldPtr& f, long v);
  static Scalar from_mpz(const FieldPtr& f, const mpz_class& v);
  static Scalar from_rational(const FieldPtr& f, const mpq_class& v);
  static Scalar generator(const FieldPtr& ext);
  // Element sum_i c_i z^i of an extension field, c_i in its base.
  static Scalar from_base_coeffs(const FieldPtr& ext, const std::vector<Scalar>& coeffs);
  static Scalar from_flat(const FieldPtr& f, Flat residues);
  static Scalar random(const FieldPtr& f, std::mt19937_64& rng);
  // Deterministic enumeration of a finite field: index in [0, order).
  static Scalar enumerate(const FieldPtr& f, std::uint64_t index);

  bool valid() const { return static_cast<bool>(field_); }
  const FieldPtr& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar pow(const mpz_class& e) const;
  Scalar pow(long e) const { return pow(mpz_class(e)); }

  Scalar embed(const FieldPtr& larger) const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  const mpq_class& rational() const;
  std::uint64_t residue() const;
  // Residue vector of length absolute_degree() (finite fields).
  Flat flat() const;
  std::vector<Scalar> base_coeffs() const;

  // Rationals "a/b", prime residues as integers, extension elements as
  // polynomials in the generator symbols, e.g. "2*z1+1".
  std::string to_string() const;
  // Whether to_string() needs parentheses when used as a coefficient.
  bool is_compound() const;

 private:
  Scalar(FieldPtr f, std::variant<mpq_class, std::uint64_t, Flat> v)
      : field_(std::move(f)), value_(std::move(v)) {}
  static std::pair<Scalar, Scalar> lift(const Scalar& a, const Scalar& b);

  FieldPtr field_;
  std::variant<mpq_class, std::uint64_t, Flat> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace planesing
