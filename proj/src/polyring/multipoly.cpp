#include "planesing/polyring/multipoly.hpp"

#include <ostream>

namespace planesing {

int var_count(VarSet v) { return v == VarSet::Projective ? 3 : 2; }

const char* var_name(VarSet v, int index) {
  static const char* const affine[] = {"x", "y"};
  static const char* const chart[] = {"x", "t"};
  static const char* const proj[] = {"X", "Y", "Z"};
  switch (v) {
    case VarSet::Affine: return affine[index];
    case VarSet::Chart: return chart[index];
    case VarSet::Projective: return proj[index];
  }
  return "?";
}

MultiPoly MultiPoly::constant(const Scalar& c, VarSet v) {
  MultiPoly p(c.field(), v);
  p.add_term({0, 0, 0}, c);
  return p;
}

MultiPoly MultiPoly::variable(const FieldPtr& f, VarSet v, int index) {
  Exponent e{0, 0, 0};
  e[static_cast<size_t>(index)] = 1;
  return monomial(Scalar::one(f), v, e);
}

MultiPoly MultiPoly::monomial(const Scalar& c, VarSet v, const Exponent& e) {
  MultiPoly p(c.field(), v);
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::from_univariate(const UniPoly& u, VarSet v, int var) {
  MultiPoly p(u.field(), v);
  for (int i = 0; i <= u.degree(); ++i) {
    Exponent e{0, 0, 0};
    e[static_cast<size_t>(var)] = i;
    p.add_term(e, u.coeff(i));
  }
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0, 0});
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return e[0] + e[1] + e[2];
}

int MultiPoly::order() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.rbegin()->first;
  return e[0] + e[1] + e[2];
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(var)]);
  return d;
}

bool MultiPoly::is_homogeneous() const { return total_degree() == order(); }

Scalar MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  if (c.field() != field_ && !(*c.field() == *field_)) {
    FieldPtr f = common_field(field_, c.field());
    if (f != field_) *this = embed(f);
  }
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c.field() == field_ ? c : c.embed(field_));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(field_, vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  FieldPtr f = (field_ == o.field_) ? field_ : common_field(field_, o.field_);
  MultiPoly r(f, vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  }
  return r;
}

MultiPoly MultiPoly::operator*(const Scalar& c) const {
  FieldPtr f = (field_ == c.field()) ? field_ : common_field(field_, c.field());
  MultiPoly r(f, vars_);
  for (const auto& [e, a] : terms_) r.add_term(e, a * c);
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  MultiPoly result = constant(Scalar::one(field_), vars_);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (vars_ != o.vars_ || terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [e, c] : terms_) {
    if (it->first != e || it->second != c) return false;
    ++it;
  }
  return true;
}

MultiPoly MultiPoly::embed(const FieldPtr& larger) const {
  if (larger == field_) return *this;
  MultiPoly r(larger, vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.embed(larger));
  return r;
}

MultiPoly MultiPoly::renamed(VarSet v) const {
  if (var_count(v) != nvars()) throw Error(ErrorCode::InvalidArgument, "variable count mismatch in rename");
  MultiPoly r = *this;
  r.vars_ = v;
  return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars())
    throw Error(ErrorCode::InvalidArgument, "substitution needs one image per variable");
  FieldPtr f = field_;
  for (const auto& im : images) f = common_field(f, im.field());
  const VarSet target = images.front().varset();
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](size_t var, int k) -> const MultiPoly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(constant(Scalar::one(f), target));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[var]);
    return cache[static_cast<size_t>(k)];
  };
  MultiPoly r(f, target);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(c.embed(f), target);
    for (size_t v = 0; v < images.size(); ++v) {
      if (e[v] > 0) term = term * power(v, e[v]);
    }
    r += term;
  }
  return r;
}

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
  FieldPtr f = field_;
  for (const auto& s : point) f = common_field(f, s.field());
  Scalar acc = Scalar::zero(f);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (size_t v = 0; v < point.size(); ++v) {
      if (e[v] > 0) t *= point[v].pow(e[v]);
    }
    acc += t;
  }
  return acc;
}

std::vector<UniPoly> MultiPoly::coefficients_in(int var) const {
  if (nvars() != 2) throw Error(ErrorCode::InvalidArgument, "coefficients_in needs a two-variable polynomial");
  const int other = 1 - var;
  std::vector<std::vector<Scalar>> raw(static_cast<size_t>(std::max(0, degree_in(var) + 1)));
  for (const auto& [e, c] : terms_) {
    auto& row = raw[static_cast<size_t>(e[static_cast<size_t>(var)])];
    const auto k = static_cast<size_t>(e[static_cast<size_t>(other)]);
    if (row.size() <= k) row.resize(k + 1, Scalar::zero(field_));
    row[k] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& row : raw) out.emplace_back(field_, std::move(row));
  return out;
}

MultiPoly MultiPoly::from_coefficients_in(int var, const std::vector<UniPoly>& coeffs, VarSet v) {
  FieldPtr f = coeffs.empty() ? Field::rationals() : coeffs.front().field();
  for (const auto& u : coeffs) f = common_field(f, u.field());
  MultiPoly p(f, v);
  const int other = 1 - var;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    for (int i = 0; i <= coeffs[k].degree(); ++i) {
      Exponent e{0, 0, 0};
      e[static_cast<size_t>(var)] = static_cast<int>(k);
      e[static_cast<size_t>(other)] = i;
      p.add_term(e, coeffs[k].coeff(i));
    }
  }
  return p;
}

UniPoly MultiPoly::to_univariate(int var) const {
  std::vector<Scalar> c(static_cast<size_t>(std::max(0, degree_in(var) + 1)), Scalar::zero(field_));
  for (const auto& [e, a] : terms_) {
    for (int v = 0; v < nvars(); ++v) {
      if (v != var && e[static_cast<size_t>(v)] != 0)
        throw Error(ErrorCode::InvalidArgument, "polynomial is not univariate in " + std::string(var_name(vars_, var)));
    }
    c[static_cast<size_t>(e[static_cast<size_t>(var)])] = a;
  }
  return UniPoly(field_, std::move(c));
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int v = 0; v < nvars(); ++v) {
      const int k = e[static_cast<size_t>(v)];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(vars_, v);
      if (k > 1) mono += "^" + std::to_string(k);
    }
    std::string cs = c.to_string();
    const bool negative = field_->kind() == FieldKind::Rationals && cs[0] == '-';
    if (negative) cs = cs.substr(1);
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

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

}  // namespace planesing
