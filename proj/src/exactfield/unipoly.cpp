#include "planesing/exactfield/unipoly.hpp"

#include <algorithm>

namespace planesing {

UniPoly::UniPoly(FieldPtr f, std::vector<Scalar> coeffs) : field_(std::move(f)), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) {
    if (c.field() != field_) c = c.embed(field_);
  }
  trim();
}

UniPoly UniPoly::constant(const Scalar& c) { return UniPoly(c.field(), {c}); }

UniPoly UniPoly::monomial(const Scalar& c, int degree) {
  std::vector<Scalar> v(static_cast<size_t>(degree) + 1, Scalar::zero(c.field()));
  v.back() = c;
  return UniPoly(c.field(), std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Scalar::zero(field_);
  return coeffs_[static_cast<size_t>(i)];
}

Scalar UniPoly::lead() const { return is_zero() ? Scalar::zero(field_) : coeffs_.back(); }

int UniPoly::low_order() const {
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  }
  return -1;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  if (field_ != o.field_ && !(*field_ == *o.field_)) {
    FieldPtr f = common_field(field_, o.field_);
    return embed(f) + o.embed(f);
  }
  std::vector<Scalar> r(std::max(coeffs_.size(), o.coeffs_.size()), Scalar::zero(field_));
  for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator-() const {
  std::vector<Scalar> r;
  r.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.push_back(-c);
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (field_ != o.field_ && !(*field_ == *o.field_)) {
    FieldPtr f = common_field(field_, o.field_);
    return embed(f) * o.embed(f);
  }
  if (is_zero() || o.is_zero()) return UniPoly(field_);
  std::vector<Scalar> r(coeffs_.size() + o.coeffs_.size() - 1, Scalar::zero(field_));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator*(const Scalar& c) const {
  std::vector<Scalar> r;
  r.reserve(coeffs_.size());
  for (const auto& a : coeffs_) r.push_back(a * c);
  return UniPoly(r.empty() ? field_ : r.front().field(), std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (field_ != divisor.field_ && !(*field_ == *divisor.field_)) {
    FieldPtr f = common_field(field_, divisor.field_);
    return embed(f).divmod(divisor.embed(f));
  }
  const int dd = divisor.degree();
  if (degree() < dd) return {UniPoly(field_), *this};
  std::vector<Scalar> rem = coeffs_;
  std::vector<Scalar> quo(static_cast<size_t>(degree() - dd + 1), Scalar::zero(field_));
  const Scalar inv_lead = divisor.lead().inverse();
  for (int i = degree(); i >= dd; --i) {
    const Scalar c = rem[static_cast<size_t>(i)] * inv_lead;
    if (c.is_zero()) continue;
    quo[static_cast<size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(i - dd + j)] -= c * divisor.coeffs_[static_cast<size_t>(j)];
  }
  rem.resize(static_cast<size_t>(dd));
  return {UniPoly(field_, std::move(quo)), UniPoly(field_, std::move(rem))};
}

bool UniPoly::operator==(const UniPoly& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return false;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != o.coeffs_[i]) return false;
  }
  return true;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inverse();
}

UniPoly UniPoly::derivative() const {
  std::vector<Scalar> r;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    r.push_back(coeffs_[i] * Scalar::from_int(field_, static_cast<long>(i)));
  return UniPoly(field_, std::move(r));
}

Scalar UniPoly::eval(const Scalar& v) const {
  FieldPtr f = common_field(field_, v.field());
  Scalar acc = Scalar::zero(f);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i];
  return acc;
}

UniPoly UniPoly::pow(int e) const {
  UniPoly result = constant(Scalar::one(field_));
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

UniPoly UniPoly::pow_mod(const mpz_class& e, const UniPoly& modulus) const {
  UniPoly result = constant(Scalar::one(field_)) % modulus;
  UniPoly base = *this % modulus;
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (size_t i = bits; i-- > 0;) {
    result = (result * result) % modulus;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * base) % modulus;
  }
  return result;
}

UniPoly UniPoly::shift_down(int k) const {
  if (k <= 0) return *this;
  if (k >= static_cast<int>(coeffs_.size())) return UniPoly(field_);
  return UniPoly(field_, std::vector<Scalar>(coeffs_.begin() + k, coeffs_.end()));
}

UniPoly UniPoly::embed(const FieldPtr& larger) const {
  std::vector<Scalar> r;
  r.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.push_back(c.embed(larger));
  return UniPoly(larger, std::move(r));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = coeffs_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool negative = field_->kind() == FieldKind::Rationals && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string term;
    if (mono.empty())
      term = cs;
    else if (cs == "1")
      term = mono;
    else if (c.is_compound())
      term = "(" + cs + ")*" + mono;
    else
      term = cs + "*" + mono;
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

}  // namespace planesing
