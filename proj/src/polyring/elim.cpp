#include "planesing/polyring/elim.hpp"

#include "planesing/polyring/local.hpp"

namespace planesing {

namespace {

// Polynomials in y with coefficients in K[x], index = power of y.
using YPoly = std::vector<UniPoly>;

void trim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int ydeg(const YPoly& p) { return static_cast<int>(p.size()) - 1; }

YPoly to_ypoly(const MultiPoly& f) {
  YPoly p = f.coefficients_in(1);
  trim(p);
  return p;
}

UniPoly content(const YPoly& p, const FieldPtr& k) {
  UniPoly g(k);
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

YPoly divide_coeffs(const YPoly& p, const UniPoly& d) {
  YPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c / d);
  return out;
}

YPoly primitive_part(const YPoly& p, const FieldPtr& k) {
  if (p.empty()) return p;
  return divide_coeffs(p, content(p, k));
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed without division.
YPoly pseudo_remainder(YPoly a, const YPoly& b) {
  const int db = ydeg(b);
  if (ydeg(a) < db) return a;
  int excess = ydeg(a) - db + 1;
  const UniPoly& lb = b.back();
  while (!a.empty() && ydeg(a) >= db) {
    const UniPoly la = a.back();
    const int shift = ydeg(a) - db;
    for (auto& c : a) c = c * lb;
    for (int i = 0; i <= db; ++i) a[static_cast<size_t>(i + shift)] = a[static_cast<size_t>(i + shift)] - la * b[static_cast<size_t>(i)];
    trim(a);
    --excess;
  }
  if (excess > 0) {
    const UniPoly m = lb.pow(excess);
    for (auto& c : a) c = c * m;
  }
  return a;
}

MultiPoly normalized(const MultiPoly& p) {
  if (p.is_zero()) return p;
  return p * p.terms().begin()->second.inverse();
}

}  // namespace

UniPoly specialize(const MultiPoly& f, int var, const Scalar& v) {
  if (f.nvars() != 2) throw Error(ErrorCode::InvalidArgument, "specialize needs an affine polynomial");
  const FieldPtr k = common_field(f.field(), v.field());
  const int other = 1 - var;
  std::vector<Scalar> c(static_cast<size_t>(std::max(0, f.degree_in(other) + 1)), Scalar::zero(k));
  for (const auto& [e, a] : f.terms()) {
    auto& slot = c[static_cast<size_t>(e[static_cast<size_t>(other)])];
    slot = slot + a * v.pow(e[static_cast<size_t>(var)]);
  }
  return UniPoly(k, std::move(c));
}

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  const FieldPtr k = common_field(a.field(), b.field());
  YPoly pa = to_ypoly(a.embed(k)), pb = to_ypoly(b.embed(k));
  const UniPoly cont = gcd(content(pa, k), content(pb, k));
  pa = primitive_part(pa, k);
  pb = primitive_part(pb, k);
  if (ydeg(pa) < ydeg(pb)) std::swap(pa, pb);
  while (!pb.empty()) {
    YPoly r = pseudo_remainder(pa, pb);
    pa = std::move(pb);
    pb = primitive_part(r, k);
  }
  pa = primitive_part(pa, k);
  for (auto& c : pa) c = c * cont;
  return normalized(MultiPoly::from_coefficients_in(1, pa, a.varset()));
}

MultiPoly poly_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  MultiPoly rem = a;
  MultiPoly quo(common_field(a.field(), b.field()), a.varset());
  const auto& [lb_e, lb_c] = *b.terms().begin();
  const Scalar inv = lb_c.inverse();
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms().begin();
    Exponent d{e[0] - lb_e[0], e[1] - lb_e[1], e[2] - lb_e[2]};
    if (d[0] < 0 || d[1] < 0 || d[2] < 0) throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
    const MultiPoly t = MultiPoly::monomial(c * inv, a.varset(), d);
    quo += t;
    rem = rem - t * b;
  }
  return quo;
}

MultiPoly proj_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  auto z_order = [](const MultiPoly& p) {
    int m = p.total_degree();
    for (const auto& [e, c] : p.terms()) m = std::min(m, e[2]);
    return m;
  };
  const int zk = std::min(z_order(a), z_order(b));
  const MultiPoly g = poly_gcd(dehomogenize(a), dehomogenize(b));
  MultiPoly h = homogenize(g);
  if (zk > 0) h = h * MultiPoly::monomial(Scalar::one(h.field()), VarSet::Projective, {0, 0, zk});
  return normalized(h);
}

UniPoly resultant_y(const MultiPoly& f, const MultiPoly& g) {
  const FieldPtr k = common_field(f.field(), g.field());
  const YPoly pf = to_ypoly(f.embed(k)), pg = to_ypoly(g.embed(k));
  if (pf.empty() || pg.empty()) return UniPoly(k);
  const int m = ydeg(pf), n = ydeg(pg);
  const auto size = static_cast<size_t>(m + n);
  std::vector<std::vector<UniPoly>> mat(size, std::vector<UniPoly>(size, UniPoly(k)));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) mat[static_cast<size_t>(r)][static_cast<size_t>(r + i)] = pf[static_cast<size_t>(m - i)];
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) mat[static_cast<size_t>(n + r)][static_cast<size_t>(r + i)] = pg[static_cast<size_t>(n - i)];
  }
  if (size == 0) return UniPoly::constant(Scalar::one(k));
  bool negate = false;
  UniPoly prev = UniPoly::constant(Scalar::one(k));
  for (size_t c = 0; c + 1 < size; ++c) {
    if (mat[c][c].is_zero()) {
      size_t piv = c + 1;
      while (piv < size && mat[piv][c].is_zero()) ++piv;
      if (piv == size) return UniPoly(k);
      std::swap(mat[c], mat[piv]);
      negate = !negate;
    }
    for (size_t i = c + 1; i < size; ++i) {
      for (size_t j = c + 1; j < size; ++j) mat[i][j] = (mat[i][j] * mat[c][c] - mat[i][c] * mat[c][j]) / prev;
      mat[i][c] = UniPoly(k);
    }
    prev = mat[c][c];
  }
  UniPoly det = mat[size - 1][size - 1];
  return negate ? -det : det;
}

}  // namespace planesing
