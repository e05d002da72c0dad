#include "planesing/exactfield/field.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace planesing {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::IncompatibleFields: return "IncompatibleFields";
    case ErrorCode::ReducibleMinPoly: return "ReducibleMinPoly";
    case ErrorCode::UnsupportedExtension: return "UnsupportedExtension";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NotSuitable: return "NotSuitable";
    case ErrorCode::NonRationalPoint: return "NonRationalPoint";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::CommonComponent: return "CommonComponent";
    case ErrorCode::DepthCapExceeded: return "DepthCapExceeded";
    case ErrorCode::UnresolvedTree: return "UnresolvedTree";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::NegativeGenus: return "NegativeGenus";
    case ErrorCode::FiberNotIsolated: return "FiberNotIsolated";
  }
  return "Error";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 add_mod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return (s >= p || s < a) ? s - p : s;
}
u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }
u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<u128>(a) * b) % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) {
  if (a % p == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_" + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

u64 mpz_mod_u64(const mpz_class& v, u64 p) {
  return static_cast<u64>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p)));
}

bool flat_is_zero(const u64* a, int n) {
  return std::all_of(a, a + n, [](u64 v) { return v == 0; });
}

// out = a * b in the finite field f (flat layout).  out may not alias a or b.
void flat_mul(const Field& f, const u64* a, const u64* b, u64* out) {
  const u64 p = f.characteristic();
  if (f.kind() == FieldKind::Prime) {
    out[0] = mul_mod(a[0], b[0], p);
    return;
  }
  const Field& base = *f.base();
  const int d = f.degree();
  const int s = base.absolute_degree();
  const auto& m = f.minpoly_flat();
  std::vector<u64> tmp(static_cast<size_t>((2 * d - 1) * s), 0);
  std::vector<u64> prod(static_cast<size_t>(s));
  for (int i = 0; i < d; ++i) {
    if (flat_is_zero(a + i * s, s)) continue;
    for (int j = 0; j < d; ++j) {
      if (flat_is_zero(b + j * s, s)) continue;
      if (s == 1) {
        tmp[i + j] = add_mod(tmp[i + j], mul_mod(a[i], b[j], p), p);
        continue;
      }
      flat_mul(base, a + i * s, b + j * s, prod.data());
      u64* t = tmp.data() + (i + j) * s;
      for (int k = 0; k < s; ++k) t[k] = add_mod(t[k], prod[k], p);
    }
  }
  // z^d = -sum_{j<d} m_j z^j
  for (int k = 2 * d - 2; k >= d; --k) {
    const u64* c = tmp.data() + k * s;
    if (flat_is_zero(c, s)) continue;
    std::vector<u64> cc(c, c + s);
    for (int j = 0; j < d; ++j) {
      const u64* mj = m.data() + j * s;
      if (flat_is_zero(mj, s)) continue;
      u64* t = tmp.data() + (k - d + j) * s;
      if (s == 1) {
        t[0] = sub_mod(t[0], mul_mod(cc[0], mj[0], p), p);
        continue;
      }
      flat_mul(base, cc.data(), mj, prod.data());
      for (int q = 0; q < s; ++q) t[q] = sub_mod(t[q], prod[q], p);
    }
    std::fill(tmp.begin() + k * s, tmp.begin() + (k + 1) * s, 0);
  }
  std::copy(tmp.begin(), tmp.begin() + d * s, out);
}

std::string flat_to_string(const Field& f, const u64* a) {
  if (f.kind() == FieldKind::Prime) return std::to_string(a[0]);
  const Field& base = *f.base();
  const int d = f.degree();
  const int s = base.absolute_degree();
  std::string out;
  for (int i = d - 1; i >= 0; --i) {
    const u64* c = a + i * s;
    if (flat_is_zero(c, s)) continue;
    std::string cs = flat_to_string(base, c);
    std::string term;
    if (i == 0) {
      term = cs;
    } else {
      std::string z = f.generator() + (i > 1 ? "^" + std::to_string(i) : "");
      if (cs == "1")
        term = z;
      else if (cs.find('+') != std::string::npos)
        term = "(" + cs + ")*" + z;
      else
        term = cs + "*" + z;
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Field

FieldPtr Field::rationals() {
  static const FieldPtr q = [] {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::Rationals;
    f->descriptor_ = "Q";
    f->minpoly_ = std::make_shared<std::vector<Scalar>>();
    return f;
  }();
  return q;
}

FieldPtr Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  if (p >= (1ULL << 62)) throw Error(ErrorCode::InvalidArgument, "prime too large");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::Prime;
  f->p_ = p;
  f->order_ = mpz_class(static_cast<unsigned long>(p));
  f->descriptor_ = "F_" + std::to_string(p);
  f->minpoly_ = std::make_shared<std::vector<Scalar>>();
  return f;
}

FieldPtr Field::extension_unchecked(FieldPtr base, const std::vector<Scalar>& monic_minpoly) {
  if (!base || !base->is_finite())
    throw Error(ErrorCode::UnsupportedExtension, "extensions are supported over finite fields only");
  const int d = static_cast<int>(monic_minpoly.size()) - 1;
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "minimal polynomial must have degree >= 2");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::Extension;
  f->p_ = base->p_;
  f->level_ = base->level_ + 1;
  f->degree_ = d;
  f->abs_degree_ = base->abs_degree_ * d;
  mpz_pow_ui(f->order_.get_mpz_t(), base->order_.get_mpz_t(), static_cast<unsigned long>(d));
  f->minpoly_ = std::make_shared<std::vector<Scalar>>();
  for (const Scalar& c : monic_minpoly) f->minpoly_->push_back(c.embed(base));
  if (!f->minpoly_->back().is_one())
    throw Error(ErrorCode::InvalidArgument, "minimal polynomial must be monic");
  for (int j = 0; j < d; ++j) {
    auto fl = (*f->minpoly_)[static_cast<size_t>(j)].flat();
    f->minpoly_flat_.insert(f->minpoly_flat_.end(), fl.begin(), fl.end());
  }
  std::string z = f->generator();
  std::string poly;
  for (int i = d; i >= 0; --i) {
    const Scalar& c = (*f->minpoly_)[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    std::string zi = i == 0 ? "" : (i == 1 ? z : z + "^" + std::to_string(i));
    std::string term;
    if (i == 0)
      term = cs;
    else if (cs == "1")
      term = zi;
    else if (c.is_compound())
      term = "(" + cs + ")*" + zi;
    else
      term = cs + "*" + zi;
    if (!poly.empty()) poly += "+";
    poly += term;
  }
  f->descriptor_ = base->descriptor_ + "[" + z + "]/(" + poly + ")";
  f->base_ = std::move(base);
  return f;
}

const std::vector<Scalar>& Field::minpoly() const { return *minpoly_; }

bool Field::contains(const Field& sub) const {
  for (const Field* cur = this; cur; cur = cur->base_.get()) {
    if (*cur == sub) return true;
  }
  return false;
}

const Field* Field::at_level(int lvl) const {
  const Field* cur = this;
  while (cur && cur->level_ > lvl) cur = cur->base_.get();
  return cur;
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b || *a == *b) return a;
  if (b->contains(*a)) return b;
  if (a->contains(*b)) return a;
  throw Error(ErrorCode::IncompatibleFields, a->to_string() + " vs " + b->to_string());
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::zero(const FieldPtr& f) { return from_int(f, 0); }
Scalar Scalar::one(const FieldPtr& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldPtr& f, long v) { return from_mpz(f, mpz_class(v)); }

Scalar Scalar::from_mpz(const FieldPtr& f, const mpz_class& v) {
  switch (f->kind()) {
    case FieldKind::Rationals: return Scalar(f, mpq_class(v));
    case FieldKind::Prime: return Scalar(f, mpz_mod_u64(v, f->characteristic()));
    case FieldKind::Extension: {
      Flat fl(static_cast<size_t>(f->absolute_degree()), 0);
      fl[0] = mpz_mod_u64(v, f->characteristic());
      return Scalar(f, std::move(fl));
    }
  }
  return {};
}

Scalar Scalar::from_rational(const FieldPtr& f, const mpq_class& v) {
  if (f->kind() == FieldKind::Rationals) {
    mpq_class c = v;
    c.canonicalize();
    return Scalar(f, c);
  }
  return from_mpz(f, v.get_num()) / from_mpz(f, v.get_den());
}

Scalar Scalar::generator(const FieldPtr& ext) {
  if (ext->kind() != FieldKind::Extension) throw Error(ErrorCode::InvalidArgument, "field has no generator");
  Flat fl(static_cast<size_t>(ext->absolute_degree()), 0);
  fl[static_cast<size_t>(ext->base()->absolute_degree())] = 1;
  return Scalar(ext, std::move(fl));
}

Scalar Scalar::from_base_coeffs(const FieldPtr& ext, const std::vector<Scalar>& coeffs) {
  if (ext->kind() != FieldKind::Extension) throw Error(ErrorCode::InvalidArgument, "not an extension field");
  const auto s = static_cast<size_t>(ext->base()->absolute_degree());
  Flat fl(static_cast<size_t>(ext->absolute_degree()), 0);
  // reduce via repeated multiplication when more than degree coefficients are given
  if (static_cast<int>(coeffs.size()) > ext->degree()) {
    Scalar acc = zero(ext), zp = one(ext);
    const Scalar z = generator(ext);
    for (const Scalar& c : coeffs) {
      acc += c.embed(ext->base()).embed(ext) * zp;
      zp *= z;
    }
    return acc;
  }
  for (size_t i = 0; i < coeffs.size(); ++i) {
    Flat cf = coeffs[i].embed(ext->base()).flat();
    std::copy(cf.begin(), cf.end(), fl.begin() + static_cast<long>(i * s));
  }
  return Scalar(ext, std::move(fl));
}

Scalar Scalar::from_flat(const FieldPtr& f, Flat residues) {
  if (!f->is_finite() || static_cast<int>(residues.size()) != f->absolute_degree())
    throw Error(ErrorCode::InvalidArgument, "flat residue vector does not match field");
  for (auto& r : residues) r %= f->characteristic();
  if (f->kind() == FieldKind::Prime) return Scalar(f, residues[0]);
  return Scalar(f, std::move(residues));
}

Scalar Scalar::random(const FieldPtr& f, std::mt19937_64& rng) {
  if (f->kind() == FieldKind::Rationals) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    return from_rational(f, mpq_class(num(rng), den(rng)));
  }
  std::uniform_int_distribution<u64> dist(0, f->characteristic() - 1);
  Flat fl(static_cast<size_t>(f->absolute_degree()));
  for (auto& r : fl) r = dist(rng);
  return from_flat(f, std::move(fl));
}

Scalar Scalar::enumerate(const FieldPtr& f, std::uint64_t index) {
  if (f->kind() == FieldKind::Rationals) {
    // 0, 1, -1, 2, -2, ...
    long v = static_cast<long>((index + 1) / 2);
    return from_int(f, index % 2 == 1 ? v : -v);
  }
  const u64 p = f->characteristic();
  Flat fl(static_cast<size_t>(f->absolute_degree()), 0);
  for (auto& r : fl) {
    r = index % p;
    index /= p;
  }
  return from_flat(f, std::move(fl));
}

bool Scalar::is_zero() const {
  switch (value_.index()) {
    case 0: return std::get<0>(value_) == 0;
    case 1: return std::get<1>(value_) == 0;
    default: {
      const auto& fl = std::get<2>(value_);
      return flat_is_zero(fl.data(), static_cast<int>(fl.size()));
    }
  }
}

bool Scalar::is_one() const {
  switch (value_.index()) {
    case 0: return std::get<0>(value_) == 1;
    case 1: return std::get<1>(value_) == 1;
    default: {
      const auto& fl = std::get<2>(value_);
      return fl[0] == 1 && flat_is_zero(fl.data() + 1, static_cast<int>(fl.size()) - 1);
    }
  }
}

std::pair<Scalar, Scalar> Scalar::lift(const Scalar& a, const Scalar& b) {
  if (a.field_ == b.field_) return {a, b};
  FieldPtr f = common_field(a.field_, b.field_);
  return {a.embed(f), b.embed(f)};
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (field_ != o.field_) {
    auto [a, b] = lift(*this, o);
    return a + b;
  }
  switch (value_.index()) {
    case 0: return Scalar(field_, mpq_class(std::get<0>(value_) + std::get<0>(o.value_)));
    case 1: return Scalar(field_, add_mod(std::get<1>(value_), std::get<1>(o.value_), field_->characteristic()));
    default: {
      Flat r = std::get<2>(value_);
      const Flat& b = std::get<2>(o.value_);
      const u64 p = field_->characteristic();
      for (size_t i = 0; i < r.size(); ++i) r[i] = add_mod(r[i], b[i], p);
      return Scalar(field_, std::move(r));
    }
  }
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  switch (value_.index()) {
    case 0: return Scalar(field_, mpq_class(-std::get<0>(value_)));
    case 1: return Scalar(field_, sub_mod(0, std::get<1>(value_), field_->characteristic()));
    default: {
      Flat r = std::get<2>(value_);
      for (auto& v : r) v = sub_mod(0, v, field_->characteristic());
      return Scalar(field_, std::move(r));
    }
  }
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (field_ != o.field_) {
    auto [a, b] = lift(*this, o);
    return a * b;
  }
  switch (value_.index()) {
    case 0: return Scalar(field_, mpq_class(std::get<0>(value_) * std::get<0>(o.value_)));
    case 1: return Scalar(field_, mul_mod(std::get<1>(value_), std::get<1>(o.value_), field_->characteristic()));
    default: {
      Flat r(std::get<2>(value_).size());
      flat_mul(*field_, std::get<2>(value_).data(), std::get<2>(o.value_).data(), r.data());
      return Scalar(field_, std::move(r));
    }
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + field_->to_string());
  switch (value_.index()) {
    case 0: return Scalar(field_, mpq_class(1 / std::get<0>(value_)));
    case 1: return Scalar(field_, inv_mod(std::get<1>(value_), field_->characteristic()));
    default: return pow(field_->order() - 2);
  }
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(const mpz_class& e) const {
  if (e < 0) return inverse().pow(mpz_class(-e));
  if (value_.index() == 1) {
    // reduce exponent mod p-1 for the prime-field fast path
    const u64 p = field_->characteristic();
    if (std::get<1>(value_) == 0) return e == 0 ? one(field_) : *this;
    const u64 r = mpz_fdiv_ui(e.get_mpz_t(), static_cast<unsigned long>(p - 1));
    return Scalar(field_, pow_mod(std::get<1>(value_), r, p));
  }
  Scalar result = one(field_);
  Scalar base = *this;
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    result = result * result;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = result * base;
  }
  if (e == 0) return one(field_);
  return result;
}

Scalar Scalar::embed(const FieldPtr& larger) const {
  if (field_ == larger) return *this;
  if (*field_ == *larger) return Scalar(larger, value_);
  if (!larger->contains(*field_))
    throw Error(ErrorCode::IncompatibleFields, field_->to_string() + " does not embed in " + larger->to_string());
  Flat fl = flat();
  fl.resize(static_cast<size_t>(larger->absolute_degree()), 0);
  return Scalar(larger, std::move(fl));
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ == o.field_ || *field_ == *o.field_) {
    if (value_.index() != o.value_.index()) return false;
    return value_ == o.value_;
  }
  if (!field_->contains(*o.field_) && !o.field_->contains(*field_)) return false;
  auto [a, b] = lift(*this, o);
  return a.value_ == b.value_;
}

const mpq_class& Scalar::rational() const {
  if (value_.index() != 0) throw Error(ErrorCode::InvalidArgument, "not a rational scalar");
  return std::get<0>(value_);
}

std::uint64_t Scalar::residue() const {
  if (value_.index() == 1) return std::get<1>(value_);
  if (value_.index() == 2) {
    const auto& fl = std::get<2>(value_);
    if (flat_is_zero(fl.data() + 1, static_cast<int>(fl.size()) - 1)) return fl[0];
  }
  throw Error(ErrorCode::InvalidArgument, "scalar is not a prime-field residue");
}

Scalar::Flat Scalar::flat() const {
  if (value_.index() == 1) return {std::get<1>(value_)};
  if (value_.index() == 2) return std::get<2>(value_);
  throw Error(ErrorCode::InvalidArgument, "rational scalars have no residue vector");
}

std::vector<Scalar> Scalar::base_coeffs() const {
  if (field_->kind() != FieldKind::Extension) return {*this};
  const FieldPtr& base = field_->base();
  const auto s = static_cast<size_t>(base->absolute_degree());
  const auto& fl = std::get<2>(value_);
  std::vector<Scalar> out;
  for (int i = 0; i < field_->degree(); ++i) {
    Flat block(fl.begin() + static_cast<long>(i * s), fl.begin() + static_cast<long>((i + 1) * s));
    out.push_back(from_flat(base, std::move(block)));
  }
  return out;
}

std::string Scalar::to_string() const {
  switch (value_.index()) {
    case 0: return std::get<0>(value_).get_str();
    case 1: return std::to_string(std::get<1>(value_));
    default: return flat_to_string(*field_, std::get<2>(value_).data());
  }
}

bool Scalar::is_compound() const {
  return value_.index() == 2 && to_string().find('+') != std::string::npos;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace planesing
