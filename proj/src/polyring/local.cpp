#include "planesing/polyring/local.hpp"

#include "planesing/exactfield/factor.hpp"

namespace planesing {

namespace {

void require_nonzero(const MultiPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "polynomial is zero");
}

void require_affine(const MultiPoly& f) {
  if (f.nvars() != 2) throw Error(ErrorCode::InvalidArgument, "expected an affine polynomial");
}

}  // namespace

int mult_at_origin(const MultiPoly& f) {
  require_nonzero(f);
  return f.order();
}

MultiPoly lowest_form(const MultiPoly& f) {
  require_nonzero(f);
  const int r = f.order();
  MultiPoly out(f.field(), f.varset());
  for (const auto& [e, c] : f.terms()) {
    if (e[0] + e[1] + e[2] == r) out.add_term(e, c);
  }
  return out;
}

UniPoly tangent_polynomial(const MultiPoly& f) {
  require_affine(f);
  const int r = mult_at_origin(f);
  std::vector<Scalar> c(static_cast<size_t>(r) + 1, Scalar::zero(f.field()));
  for (const auto& [e, a] : f.terms()) {
    if (e[0] + e[1] == r) c[static_cast<size_t>(e[1])] = a;
  }
  return UniPoly(f.field(), std::move(c));
}

UniPoly suitability_polynomial(const MultiPoly& f) {
  require_affine(f);
  const int r = mult_at_origin(f);
  std::vector<Scalar> c(static_cast<size_t>(r) + 1, Scalar::zero(f.field()));
  for (const auto& [e, a] : f.terms()) {
    if (e[0] + e[1] == r) c[static_cast<size_t>(e[0])] = a;
  }
  return UniPoly(f.field(), std::move(c));
}

bool is_suitable(const MultiPoly& f) {
  const int r = mult_at_origin(f);
  return !f.coeff({0, r, 0}).is_zero();
}

MultiPoly translate(const MultiPoly& f, const Scalar& a, const Scalar& b) {
  require_affine(f);
  return CoordChange::translate(a, b).apply(f);
}

MultiPoly partial_derivative(const MultiPoly& f, int var) {
  MultiPoly out(f.field(), f.varset());
  const auto v = static_cast<size_t>(var);
  for (const auto& [e, c] : f.terms()) {
    if (e[v] == 0) continue;
    Exponent d = e;
    d[v] -= 1;
    out.add_term(d, c * Scalar::from_int(f.field(), e[v]));
  }
  return out;
}

const char* chart_name(ProjChart c) {
  switch (c) {
    case ProjChart::Z: return "Z=1";
    case ProjChart::Y: return "Y=1";
    case ProjChart::X: return "X=1";
  }
  return "?";
}

namespace {

// Indices of the projective coordinates playing x and y, and the one set to 1.
std::array<size_t, 3> chart_layout(ProjChart c) {
  switch (c) {
    case ProjChart::Z: return {0, 1, 2};
    case ProjChart::Y: return {0, 2, 1};
    case ProjChart::X: return {1, 2, 0};
  }
  return {0, 1, 2};
}

}  // namespace

MultiPoly dehomogenize(const MultiPoly& F, ProjChart chart) {
  if (F.varset() != VarSet::Projective) throw Error(ErrorCode::InvalidArgument, "expected a projective polynomial");
  if (!F.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, "polynomial is not homogeneous: " + F.to_string());
  const auto lay = chart_layout(chart);
  MultiPoly out(F.field(), VarSet::Affine);
  for (const auto& [e, c] : F.terms()) out.add_term({e[lay[0]], e[lay[1]], 0}, c);
  return out;
}

MultiPoly homogenize(const MultiPoly& f, int degree, ProjChart chart) {
  require_affine(f);
  if (degree < f.total_degree())
    throw Error(ErrorCode::InvalidArgument, "homogenization degree below the total degree");
  const auto lay = chart_layout(chart);
  MultiPoly out(f.field(), VarSet::Projective);
  for (const auto& [e, c] : f.terms()) {
    Exponent h{0, 0, 0};
    h[lay[0]] = e[0];
    h[lay[1]] = e[1];
    h[lay[2]] = degree - e[0] - e[1];
    out.add_term(h, c);
  }
  return out;
}

MultiPoly homogenize(const MultiPoly& f, ProjChart chart) { return homogenize(f, std::max(0, f.total_degree()), chart); }

MultiPoly as_affine(const MultiPoly& f) {
  switch (f.varset()) {
    case VarSet::Affine: return f;
    case VarSet::Chart: throw Error(ErrorCode::InvalidArgument, "expected x, y but got chart variables x, t");
    case VarSet::Projective: break;
  }
  MultiPoly out(f.field(), VarSet::Affine);
  for (const auto& [e, c] : f.terms()) {
    if (e[2] != 0) throw Error(ErrorCode::InvalidArgument, "Z appears in what should be an affine polynomial");
    out.add_term(e, c);
  }
  return out;
}

bool shear_candidate(const FieldPtr& f, std::uint64_t i, Scalar& out) {
  if (!f->is_finite()) {
    out = Scalar::enumerate(f, i);
    return true;
  }
  const std::uint64_t p = f->characteristic();
  if (i < p) {
    const auto v = static_cast<long>((i + 1) / 2);
    out = Scalar::from_int(f, i % 2 == 1 ? v : -v);
    return true;
  }
  if (!f->order().fits_ulong_p() || mpz_class(static_cast<unsigned long>(i)) < f->order()) {
    out = Scalar::enumerate(f, i);
    return true;
  }
  return false;
}

Scalar find_good_shear(const std::vector<UniPoly>& bad) {
  FieldPtr k = Field::rationals();
  bool first = true;
  int total_degree = 0;
  for (const auto& u : bad) {
    if (u.is_zero()) throw Error(ErrorCode::InvalidArgument, "no shear avoids a zero polynomial");
    k = first ? u.field() : common_field(k, u.field());
    first = false;
    total_degree += u.degree();
  }
  auto good = [&](const Scalar& l) {
    for (const auto& u : bad) {
      if (u.eval(l).is_zero()) return false;
    }
    return true;
  };
  Scalar l;
  for (std::uint64_t i = 0; shear_candidate(k, i, l); ++i) {
    if (good(l)) return l;
  }
  // Every element of k is a root of some polynomial in `bad`.
  int ext = 2;
  mpz_class size = k->order() * k->order();
  while (size <= total_degree) {
    size *= k->order();
    ++ext;
  }
  const FieldPtr big = find_extension(k, ext);
  for (std::uint64_t i = k->order().get_ui(); shear_candidate(big, i, l); ++i) {
    if (good(l)) return l;
  }
  throw Error(ErrorCode::InvalidArgument, "no suitable shear found");
}

Suitable make_suitable(const MultiPoly& f) {
  require_affine(f);
  require_nonzero(f);
  if (is_suitable(f)) return {f, CoordChange()};
  const Scalar l = find_good_shear({suitability_polynomial(f)});
  const CoordChange c = CoordChange::shear(l);
  return {c.apply(f), c};
}

}  // namespace planesing
