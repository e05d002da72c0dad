#include "planesing/polyring/projective.hpp"

namespace planesing {

ProjPoint::ProjPoint(const Scalar& x, const Scalar& y, const Scalar& z) {
  const FieldPtr k = common_field(common_field(x.field(), y.field()), z.field());
  c_ = {x.embed(k), y.embed(k), z.embed(k)};
  size_t lead = 0;
  while (lead < 3 && c_[lead].is_zero()) ++lead;
  if (lead == 3) throw Error(ErrorCode::InvalidArgument, "[0:0:0] is not a projective point");
  const Scalar inv = c_[lead].inverse();
  for (auto& s : c_) s = s * inv;
}

bool ProjPoint::operator==(const ProjPoint& o) const {
  for (size_t i = 0; i < 3; ++i) {
    if (c_[i] != o.c_[i]) return false;
  }
  return true;
}

std::string ProjPoint::to_string() const {
  return "[" + c_[0].to_string() + ":" + c_[1].to_string() + ":" + c_[2].to_string() + "]";
}

ProjChart chart_for(const ProjPoint& p) {
  if (!p.coords()[2].is_zero()) return ProjChart::Z;
  if (!p.coords()[1].is_zero()) return ProjChart::Y;
  return ProjChart::X;
}

MultiPoly localize(const MultiPoly& F, const ProjPoint& p) {
  const ProjChart ch = chart_for(p);
  const auto& c = p.coords();
  const MultiPoly f = dehomogenize(F, ch);
  switch (ch) {
    case ProjChart::Z: return translate(f, c[0] / c[2], c[1] / c[2]);
    case ProjChart::Y: return translate(f, c[0] / c[1], Scalar::zero(p.field()));
    case ProjChart::X: return f.embed(common_field(f.field(), p.field()));
  }
  return f;
}

MultiPoly linear_substitute(const MultiPoly& F, const std::array<std::array<Scalar, 3>, 3>& m) {
  std::vector<MultiPoly> images;
  for (const auto& row : m) {
    MultiPoly l(F.field(), VarSet::Projective);
    for (size_t j = 0; j < 3; ++j) {
      Exponent e{0, 0, 0};
      e[j] = 1;
      l.add_term(e, row[j]);
    }
    images.push_back(l);
  }
  return F.substitute(images);
}

}  // namespace planesing
