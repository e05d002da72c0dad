#include "planesing/noether/noether.hpp"

#include <algorithm>

#include "planesing/noether/linsolve.hpp"
#include "planesing/polyring/elim.hpp"

namespace planesing {

namespace {

void require_homogeneous(const MultiPoly& p, const char* what) {
  if (p.varset() != VarSet::Projective || !p.is_homogeneous())
    throw Error(ErrorCode::NotHomogeneous, std::string(what) + " must be homogeneous in X, Y, Z: " + p.to_string());
}

// Binary form P(X, Y, 0) as an affine polynomial in (x, y).
MultiPoly at_infinity(const MultiPoly& p) {
  MultiPoly out(p.field(), VarSet::Affine);
  for (const auto& [e, c] : p.terms()) {
    if (e[2] == 0) out.add_term({e[0], e[1], 0}, c);
  }
  return out;
}

// Coefficients of the top-degree form T as T(l, 1), a polynomial in l.
UniPoly top_direction_poly(const MultiPoly& f) {
  const int n = f.total_degree();
  std::vector<Scalar> c(static_cast<size_t>(n) + 1, Scalar::zero(f.field()));
  for (const auto& [e, a] : f.terms()) {
    if (e[0] + e[1] == n) c[static_cast<size_t>(e[0])] = a;
  }
  return UniPoly(f.field(), std::move(c));
}

void points_at_infinity(const std::vector<MultiPoly>& polys, std::uint64_t seed, std::vector<ProjPoint>& out) {
  const FieldPtr k = polys.front().field();
  bool y_axis = true;  // [0:1:0]
  UniPoly g(k);
  for (const auto& p : polys) {
    const MultiPoly b = at_infinity(p);
    if (b.is_zero()) continue;
    if (!b.coeff({0, b.total_degree(), 0}).is_zero()) y_axis = false;
    g = gcd(g, specialize(b, 0, Scalar::one(k)));
  }
  const Scalar zero = Scalar::zero(k), one = Scalar::one(k);
  if (y_axis) out.emplace_back(zero, one, zero);
  if (g.degree() >= 1) {
    for (const auto& root : all_roots(g, seed)) out.emplace_back(one, root.value, zero);
  }
}

void affine_points(const std::vector<MultiPoly>& polys, std::uint64_t seed, std::vector<ProjPoint>& out) {
  std::vector<MultiPoly> f;
  for (const auto& p : polys) {
    MultiPoly a = dehomogenize(p);
    if (a.is_constant()) return;  // nonzero constant: no affine zeros
    f.push_back(std::move(a));
  }
  const CoordChange shear = CoordChange::shear(find_good_shear({top_direction_poly(f.front())}));
  for (auto& a : f) a = shear.apply(a);
  // x-coordinates of common zeros divide every resultant; the first
  // polynomial has constant leading y-coefficient, so its resultants vanish
  // exactly over those fibers.
  const FieldPtr k = f.front().field();
  UniPoly r(k);
  for (size_t i = 0; i < f.size(); ++i) {
    for (size_t j = i + 1; j < f.size(); ++j) {
      const UniPoly res = resultant_y(f[i], f[j]);
      if (!res.is_zero()) r = gcd(r, res);
    }
  }
  if (r.is_zero()) {
    // Every pair shares a factor; a generic combination of the others does not.
    for (std::uint64_t t = 1; r.is_zero(); ++t) {
      MultiPoly comb(k, VarSet::Affine);
      Scalar c;
      for (size_t j = 1; j < f.size(); ++j) {
        if (!shear_candidate(k, t * j + 1, c)) c = Scalar::from_int(k, static_cast<long>(t * j + 1));
        comb += f[j] * c;
      }
      r = resultant_y(f.front(), comb);
      if (t > 64 && r.is_zero()) throw Error(ErrorCode::CommonComponent, "could not separate common zeros");
    }
  }
  if (r.degree() < 1) return;
  for (const auto& xr : all_roots(r, seed)) {
    UniPoly h(xr.value.field());
    for (const auto& a : f) h = gcd(h, specialize(a, 0, xr.value));
    if (h.degree() < 1) continue;
    for (const auto& yr : all_roots(h, seed)) {
      const auto [x, y] = shear.map_point(xr.value, yr.value);
      out.emplace_back(x, y, Scalar::one(y.field()));
    }
  }
}

}  // namespace

std::vector<ProjPoint> find_common_points(const std::vector<MultiPoly>& polys, std::uint64_t seed) {
  std::vector<MultiPoly> ps;
  FieldPtr k;
  for (const auto& p : polys) {
    require_homogeneous(p, "curve");
    if (p.is_zero()) continue;
    k = k ? common_field(k, p.field()) : p.field();
    ps.push_back(p);
  }
  if (ps.size() < 2) throw Error(ErrorCode::InvalidArgument, "need at least two nonzero polynomials");
  for (auto& p : ps) p = p.embed(k);
  for (const auto& p : ps) {
    if (p.is_constant()) return {};
  }
  MultiPoly g = ps.front();
  for (size_t i = 1; i < ps.size(); ++i) g = proj_gcd(g, ps[i]);
  if (!g.is_constant()) throw Error(ErrorCode::CommonComponent, "common component " + g.to_string());
  std::vector<ProjPoint> out;
  affine_points(ps, seed, out);
  points_at_infinity(ps, seed, out);
  std::sort(out.begin(), out.end(),
            [](const ProjPoint& a, const ProjPoint& b) { return a.to_string() < b.to_string(); });
  return out;
}

std::vector<ProjPoint> find_common_points(const MultiPoly& f, const MultiPoly& g, std::uint64_t seed) {
  return find_common_points(std::vector<MultiPoly>{f, g}, seed);
}

std::vector<ProjPoint> find_singular_points(const MultiPoly& f, std::uint64_t seed) {
  require_homogeneous(f, "curve");
  std::vector<MultiPoly> sys{f};
  for (int v = 0; v < 3; ++v) sys.push_back(partial_derivative(f, v));
  bool all_zero = true;
  for (size_t i = 1; i < sys.size(); ++i) all_zero = all_zero && sys[i].is_zero();
  if (all_zero) throw Error(ErrorCode::NotSquarefree, "every partial derivative vanishes: a p-th power");
  try {
    return find_common_points(sys, seed);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CommonComponent)
      throw Error(ErrorCode::NotSquarefree, "curve has a multiple component: " + f.to_string());
    throw;
  }
}

ConditionReport check_condition(const MultiPoly& f, const MultiPoly& g, const MultiPoly& h, int max_depth,
                                std::uint64_t seed) {
  require_homogeneous(f, "F");
  require_homogeneous(g, "G");
  require_homogeneous(h, "H");
  ConditionReport rep;
  for (const auto& p : find_common_points(f, g, seed)) {
    PointCheck pc{p, chart_for(p), true, {}, std::nullopt};
    if (h.is_zero()) {
      rep.points.push_back(std::move(pc));
      continue;
    }
    const JointTree t = joint_tree({localize(f, p), localize(g, p), localize(h, p)}, max_depth, 2, seed);
    if (t.termination != Termination::Resolved)
      throw Error(ErrorCode::DepthCapExceeded, "joint tree at " + p.to_string() + " hit the depth cap");
    for_each_node(t.root, [&](const JointNode& n) {
      if (n.r[0] == 0 && n.r[1] == 0) return;
      const int margin = n.r[2] - (n.r[0] + n.r[1] - 1);
      pc.nodes.push_back({n.depth, n.r[0], n.r[1], n.r[2], margin});
      if (margin < 0 && pc.passed) {
        pc.passed = false;
        pc.failing_depth = n.depth;
      }
    });
    rep.passed = rep.passed && pc.passed;
    rep.points.push_back(std::move(pc));
  }
  return rep;
}

const char* cert_status_name(CertStatus s) {
  switch (s) {
    case CertStatus::Solved: return "Solved";
    case CertStatus::HypothesisFailed: return "HypothesisFailed";
    case CertStatus::NoSolution: return "NoSolution";
  }
  return "?";
}

std::vector<Exponent> monomials_of_degree(int degree) {
  std::vector<Exponent> out;
  if (degree < 0) return out;
  for (int a = degree; a >= 0; --a) {
    for (int b = degree - a; b >= 0; --b) out.push_back({a, b, degree - a - b});
  }
  return out;
}

namespace {

struct AfBgSystem {
  FieldPtr k;
  std::vector<Exponent> mono_a, mono_b, rows;
  std::vector<std::vector<Scalar>> matrix;
};

AfBgSystem build_system(const MultiPoly& f, const MultiPoly& g, int e) {
  AfBgSystem s;
  s.k = common_field(f.field(), g.field());
  s.mono_a = monomials_of_degree(e - f.total_degree());
  s.mono_b = monomials_of_degree(e - g.total_degree());
  s.rows = monomials_of_degree(e);
  std::map<Exponent, size_t, GrlexGreater> row_of;
  for (size_t i = 0; i < s.rows.size(); ++i) row_of[s.rows[i]] = i;
  const size_t n = s.mono_a.size() + s.mono_b.size();
  s.matrix.assign(s.rows.size(), std::vector<Scalar>(n, Scalar::zero(s.k)));
  auto fill = [&](const MultiPoly& p, const std::vector<Exponent>& monos, size_t offset) {
    for (size_t j = 0; j < monos.size(); ++j) {
      for (const auto& [ex, c] : p.terms()) {
        const Exponent m{ex[0] + monos[j][0], ex[1] + monos[j][1], ex[2] + monos[j][2]};
        s.matrix[row_of.at(m)][offset + j] = c.embed(s.k);
      }
    }
  };
  fill(f, s.mono_a, 0);
  fill(g, s.mono_b, s.mono_a.size());
  return s;
}

MultiPoly assemble(const FieldPtr& k, const std::vector<Exponent>& monos, const std::vector<Scalar>& x, size_t offset) {
  MultiPoly p(k, VarSet::Projective);
  for (size_t j = 0; j < monos.size(); ++j) p.add_term(monos[j], x[offset + j]);
  return p;
}

void check_inputs(const MultiPoly& f, const MultiPoly& g, const MultiPoly& h) {
  require_homogeneous(f, "F");
  require_homogeneous(g, "G");
  require_homogeneous(h, "H");
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "F and G must be nonzero");
  if (!proj_gcd(f, g).is_constant()) throw Error(ErrorCode::CommonComponent, "F and G share a component");
}

}  // namespace

NoetherCertificate solve_af_bg(const MultiPoly& f, const MultiPoly& g, const MultiPoly& h) {
  check_inputs(f, g, h);
  const FieldPtr k = common_field(common_field(f.field(), g.field()), h.field());
  NoetherCertificate cert;
  if (h.is_zero()) {
    cert.status = CertStatus::Solved;
    cert.residual = MultiPoly(k, VarSet::Projective);
    return cert;
  }
  const int e = h.total_degree();
  cert.deg_a = e - f.total_degree();
  cert.deg_b = e - g.total_degree();
  const AfBgSystem sys = build_system(f.embed(k), g.embed(k), e);
  std::vector<Scalar> rhs;
  for (const auto& m : sys.rows) rhs.push_back(h.coeff(m).embed(k));
  const LinearSolution sol = solve_linear(k, sys.matrix, rhs);
  if (!sol.consistent) {
    cert.status = CertStatus::NoSolution;
    cert.residual = h.embed(k);
    return cert;
  }
  if (cert.deg_a >= 0) cert.a = assemble(k, sys.mono_a, sol.particular, 0);
  if (cert.deg_b >= 0) cert.b = assemble(k, sys.mono_b, sol.particular, sys.mono_a.size());
  MultiPoly res = h.embed(k);
  if (cert.a) res = res - *cert.a * f;
  if (cert.b) res = res - *cert.b * g;
  cert.residual = res;
  cert.status = res.is_zero() ? CertStatus::Solved : CertStatus::NoSolution;
  return cert;
}

std::vector<std::pair<MultiPoly, MultiPoly>> af_bg_kernel(const MultiPoly& f, const MultiPoly& g, int e) {
  check_inputs(f, g, MultiPoly(f.field(), VarSet::Projective));
  const AfBgSystem sys = build_system(f, g, e);
  const LinearSolution sol = solve_linear(sys.k, sys.matrix, std::vector<Scalar>(sys.rows.size(), Scalar::zero(sys.k)));
  std::vector<std::pair<MultiPoly, MultiPoly>> out;
  for (const auto& v : sol.kernel)
    out.emplace_back(assemble(sys.k, sys.mono_a, v, 0), assemble(sys.k, sys.mono_b, v, sys.mono_a.size()));
  return out;
}

bool verify_certificate(const MultiPoly& f, const MultiPoly& g, const MultiPoly& h, const NoetherCertificate& cert) {
  if (cert.status != CertStatus::Solved) return false;
  const int e = h.total_degree();
  MultiPoly rest = h;
  if (cert.a) {
    if (!cert.a->is_zero() && (!cert.a->is_homogeneous() || cert.a->total_degree() != e - f.total_degree())) return false;
    rest = rest - *cert.a * f;
  }
  if (cert.b) {
    if (!cert.b->is_zero() && (!cert.b->is_homogeneous() || cert.b->total_degree() != e - g.total_degree())) return false;
    rest = rest - *cert.b * g;
  }
  return rest.is_zero();
}

NoetherCertificate noether_solve(const MultiPoly& f, const MultiPoly& g, const MultiPoly& h, int max_depth,
                                 std::uint64_t seed) {
  NoetherCertificate cert = solve_af_bg(f, g, h);
  if (cert.status == CertStatus::Solved) return cert;
  const ConditionReport rep = check_condition(f, g, h, max_depth, seed);
  for (const auto& pc : rep.points) {
    if (pc.passed) continue;
    cert.status = CertStatus::HypothesisFailed;
    cert.failed_point = pc.point;
    cert.failed_depth = pc.failing_depth;
    break;
  }
  return cert;
}

BezoutReport bezout_check(const MultiPoly& f, const MultiPoly& g, int max_depth, std::uint64_t seed) {
  require_homogeneous(f, "F");
  require_homogeneous(g, "G");
  BezoutReport rep;
  rep.expected = f.total_degree() * g.total_degree();
  for (const auto& p : find_common_points(f, g, seed)) {
    IntersectionReport ir = intersection_multiplicity(localize(f, p), localize(g, p), max_depth, seed);
    ir.point = p.to_string();
    rep.total += ir.noether_sum;
    rep.per_point.emplace_back(p, std::move(ir));
  }
  rep.agreement = rep.total == rep.expected;
  return rep;
}

}  // namespace planesing
