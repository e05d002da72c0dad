#include "planesing/polyring/coordchange.hpp"

namespace planesing {

namespace {

MultiPoly linear(const FieldPtr& f, VarSet v, const Scalar& cx, const Scalar& cy, const Scalar& c0) {
  MultiPoly p(f, v);
  p.add_term({1, 0, 0}, cx);
  p.add_term({0, 1, 0}, cy);
  p.add_term({0, 0, 0}, c0);
  return p;
}

}  // namespace

CoordStep CoordStep::inverse() const {
  switch (kind) {
    case Kind::Translate: return {kind, -a, -b};
    case Kind::Shear:
    case Kind::Skew: return {kind, -a, b};
    case Kind::SwapXY: return *this;
  }
  return *this;
}

std::string CoordStep::to_string() const {
  switch (kind) {
    case Kind::Translate: return "translate(" + a.to_string() + "," + b.to_string() + ")";
    case Kind::Shear: return "shear(" + a.to_string() + ")";
    case Kind::Skew: return "skew(" + a.to_string() + ")";
    case Kind::SwapXY: return "swap_xy";
  }
  return "?";
}

MultiPoly apply_step(const CoordStep& s, const MultiPoly& f) {
  if (f.nvars() != 2) throw Error(ErrorCode::InvalidArgument, "coordinate changes act on affine polynomials");
  FieldPtr k = f.field();
  if (s.a.valid()) k = common_field(k, s.a.field());
  if (s.b.valid()) k = common_field(k, s.b.field());
  const Scalar one = Scalar::one(k), zero = Scalar::zero(k);
  const VarSet v = f.varset();
  switch (s.kind) {
    case CoordStep::Kind::Translate:
      if (s.a.is_zero() && s.b.is_zero()) return f;
      return f.substitute({linear(k, v, one, zero, s.a), linear(k, v, zero, one, s.b)});
    case CoordStep::Kind::Shear:
      if (s.a.is_zero()) return f;
      return f.substitute({linear(k, v, one, s.a, zero), linear(k, v, zero, one, zero)});
    case CoordStep::Kind::Skew:
      if (s.a.is_zero()) return f;
      return f.substitute({linear(k, v, one, zero, zero), linear(k, v, s.a, one, zero)});
    case CoordStep::Kind::SwapXY: {
      MultiPoly r(f.field(), v);
      for (const auto& [e, c] : f.terms()) r.add_term({e[1], e[0], 0}, c);
      return r;
    }
  }
  return f;
}

CoordChange CoordChange::translate(const Scalar& a, const Scalar& b) {
  CoordChange c;
  if (!(a.is_zero() && b.is_zero())) {
    FieldPtr k = common_field(a.field(), b.field());
    c.steps_.push_back({CoordStep::Kind::Translate, a.embed(k), b.embed(k)});
  }
  return c;
}

CoordChange CoordChange::shear(const Scalar& lambda) {
  CoordChange c;
  if (!lambda.is_zero()) c.steps_.push_back({CoordStep::Kind::Shear, lambda, Scalar()});
  return c;
}

CoordChange CoordChange::skew(const Scalar& mu) {
  CoordChange c;
  if (!mu.is_zero()) c.steps_.push_back({CoordStep::Kind::Skew, mu, Scalar()});
  return c;
}

CoordChange CoordChange::swap_xy() {
  CoordChange c;
  c.steps_.push_back({CoordStep::Kind::SwapXY, Scalar(), Scalar()});
  return c;
}

CoordChange CoordChange::then(const CoordChange& next) const {
  CoordChange c = *this;
  c.steps_.insert(c.steps_.end(), next.steps_.begin(), next.steps_.end());
  return c;
}

CoordChange CoordChange::inverse() const {
  CoordChange c;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) c.steps_.push_back(it->inverse());
  return c;
}

MultiPoly CoordChange::apply(const MultiPoly& f) const {
  MultiPoly g = f;
  for (const auto& s : steps_) g = apply_step(s, g);
  return g;
}

std::pair<Scalar, Scalar> CoordChange::map_point(const Scalar& u, const Scalar& v) const {
  // G = F o s_1 o ... o s_n as maps of the plane, so G(p) = 0 means
  // F(s_1(...s_n(p))) = 0: apply the point maps last to first.
  Scalar x = u, y = v;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    switch (it->kind) {
      case CoordStep::Kind::Translate:
        x = x + it->a;
        y = y + it->b;
        break;
      case CoordStep::Kind::Shear: x = x + it->a * y; break;
      case CoordStep::Kind::Skew: y = y + it->a * x; break;
      case CoordStep::Kind::SwapXY: std::swap(x, y); break;
    }
  }
  return {x, y};
}

std::string CoordChange::to_string() const {
  if (steps_.empty()) return "identity";
  std::string out;
  for (const auto& s : steps_) {
    if (!out.empty()) out += " ; ";
    out += s.to_string();
  }
  return out;
}

}  // namespace planesing
