#include "planesing/invariants/invariants.hpp"

#include "planesing/polyring/elim.hpp"

namespace planesing {

SingularityReport delta_invariant(const InfNearTree& tree) {
  if (tree.termination != Termination::Resolved)
    throw Error(ErrorCode::UnresolvedTree, "resolution stopped at the depth cap; delta would be a lower bound");
  SingularityReport rep;
  rep.field = tree.root.field->to_string();
  for_each_node(tree.root, [&](const InfNearNode& n) {
    if (n.r < 2) return;
    rep.multiplicity_sequence.push_back({n.depth, n.r});
    rep.delta += n.r * (n.r - 1) / 2;
  });
  rep.conductor_degree = 2 * rep.delta;
  return rep;
}

namespace {

MultiPoly reduce_mod_p(const MultiPoly& F, const FieldPtr& fp) {
  mpz_class den = 1;
  for (const auto& [e, c] : F.terms()) den = lcm(den, c.rational().get_den());
  mpz_class cont = 0;
  for (const auto& [e, c] : F.terms()) cont = gcd(cont, mpz_class(c.rational() * den));
  MultiPoly out(fp, F.varset());
  for (const auto& [e, c] : F.terms()) out.add_term(e, Scalar::from_mpz(fp, mpz_class(c.rational() * den) / cont));
  return out;
}

bool has_irreducible_section(const MultiPoly& f, int n, const FieldPtr& k) {
  // Lines y = c x + d; the section has degree n when the direction (1, c)
  // avoids the points at infinity.
  Scalar c, d;
  int tried = 0;
  for (std::uint64_t i = 0; shear_candidate(k, i, c) && i < 40; ++i) {
    for (std::uint64_t j = 0; shear_candidate(k, j, d) && j < 40; ++j) {
      MultiPoly line(k, VarSet::Affine);
      line.add_term({1, 0, 0}, c);
      line.add_term({0, 0, 0}, d);
      const UniPoly u = f.substitute({MultiPoly::variable(k, VarSet::Affine, 0), line}).to_univariate(0);
      if (u.degree() != n) break;
      if (is_irreducible(u)) return true;
      if (++tried > 400) return false;
    }
  }
  return false;
}

bool has_smooth_point(const MultiPoly& f, const FieldPtr& k, std::uint64_t seed) {
  const MultiPoly fx = partial_derivative(f, 0), fy = partial_derivative(f, 1);
  Scalar a;
  for (std::uint64_t i = 0; shear_candidate(k, i, a) && i < 400; ++i) {
    const UniPoly u = specialize(f, 0, a);
    if (u.is_zero()) continue;
    for (const auto& root : roots_in_field(u, seed)) {
      if (!fx.eval({a, root.value}).is_zero() || !fy.eval({a, root.value}).is_zero()) return true;
    }
  }
  return false;
}

bool certify_over(const MultiPoly& F, const FieldPtr& k, std::uint64_t seed) {
  const MultiPoly Fk = F.embed(k);
  const MultiPoly f = dehomogenize(Fk);
  return has_irreducible_section(f, Fk.total_degree(), k) && has_smooth_point(f, k, seed);
}

}  // namespace

bool certify_absolutely_irreducible(const MultiPoly& F, std::uint64_t seed) {
  if (F.varset() != VarSet::Projective || !F.is_homogeneous())
    throw Error(ErrorCode::NotHomogeneous, "expected a homogeneous polynomial in X, Y, Z");
  const int n = F.total_degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  // Z | F makes F reducible; otherwise the Z=1 chart sees all of F.
  if (dehomogenize(F).total_degree() < n) return false;
  if (!is_squarefree(dehomogenize(F))) return false;
  if (F.field()->is_finite()) {
    if (certify_over(F, F.field(), seed)) return true;
    for (int d = 2; d <= 3; ++d) {
      if (certify_over(F, find_extension(F.field(), d), seed)) return true;
    }
    return false;
  }
  // Absolute irreducibility of a same-degree reduction lifts to Q.
  int primes = 0;
  for (std::uint64_t p = 101; primes < 8; p += 2) {
    if (!is_prime(p)) continue;
    bool bad = false;
    for (const auto& [e, c] : F.terms()) bad = bad || mpz_divisible_ui_p(c.rational().get_den_mpz_t(), p);
    if (bad) continue;
    ++primes;
    const MultiPoly Fp = reduce_mod_p(F, Field::prime(p));
    if (Fp.total_degree() != n || !Fp.is_homogeneous()) continue;
    if (certify_over(Fp, Fp.field(), seed)) return true;
  }
  return false;
}

GenusReport genus(const MultiPoly& F, const std::vector<ProjPoint>& singular_points, bool assume_irreducible,
                  int max_depth, std::uint64_t seed) {
  if (F.varset() != VarSet::Projective || !F.is_homogeneous())
    throw Error(ErrorCode::NotHomogeneous, "genus needs a homogeneous polynomial in X, Y, Z");
  GenusReport rep;
  rep.degree = F.total_degree();
  if (rep.degree < 1) throw Error(ErrorCode::InvalidArgument, "genus needs a curve of degree at least 1");
  rep.irreducibility_certified = certify_absolutely_irreducible(F, seed);
  if (!rep.irreducibility_certified && !assume_irreducible)
    throw Error(ErrorCode::Reducible,
                "could not certify that " + F.to_string() + " is irreducible; pass --assume-irreducible to override");
  rep.arithmetic_genus = (rep.degree - 1) * (rep.degree - 2) / 2;
  for (const auto& p : singular_points) {
    const MultiPoly local = localize(F, p);
    if (!local.constant_term().is_zero())
      throw Error(ErrorCode::InvalidArgument, p.to_string() + " is not on the curve");
    SingularityReport s = delta_invariant(resolve_tree(local, max_depth, {}, seed));
    s.point = p.to_string();
    rep.delta += s.delta;
    rep.points.push_back(std::move(s));
  }
  rep.genus = rep.arithmetic_genus - rep.delta;
  if (rep.genus < 0)
    throw Error(ErrorCode::NegativeGenus, "genus " + std::to_string(rep.genus) +
                                              " < 0: the curve is reducible or the singular points are incomplete");
  return rep;
}

AdjointReport adjoint_check(const MultiPoly& curve, const MultiPoly& g, int max_depth, std::uint64_t seed) {
  const MultiPoly C = as_affine(curve), G = as_affine(g);
  if (G.is_zero() || !poly_gcd(C, G).is_constant())
    throw Error(ErrorCode::CommonComponent, "the candidate adjoint shares a component with the curve");
  const InfNearTree tree = resolve_tree(C, max_depth, {G}, seed);
  if (tree.termination != Termination::Resolved)
    throw Error(ErrorCode::DepthCapExceeded, "resolution of the curve hit the depth cap");
  AdjointReport rep;
  for_each_node(tree.root, [&](const InfNearNode& n) {
    const int rg = n.passenger_r.front();
    const int margin = rg - (n.r - 1);
    rep.margins.push_back({n.id, n.depth, n.r, rg, margin});
    if (margin < 0) rep.adjoint = false;
  });
  return rep;
}

int intersection_tree_sum(const JointTree& t, std::vector<Contribution>* contributions) {
  int sum = 0;
  for_each_node(t.root, [&](const JointNode& n) {
    if (n.r[0] == 0 || n.r[1] == 0) return;
    sum += n.r[0] * n.r[1];
    if (contributions) contributions->push_back({n.depth, n.r[0], n.r[1]});
  });
  return sum;
}

IntersectionReport intersection_multiplicity(const MultiPoly& f, const MultiPoly& g, int max_depth,
                                             std::uint64_t seed) {
  const MultiPoly F = as_affine(f), G = as_affine(g);
  IntersectionReport rep;
  if (!poly_gcd(F, G).is_constant()) throw Error(ErrorCode::CommonComponent, "the curves share a component");
  if (!F.constant_term().is_zero() || !G.constant_term().is_zero()) {
    rep.agreement = true;
    return rep;
  }
  const JointTree t = joint_tree({F, G}, max_depth, 2, seed);
  if (t.termination != Termination::Resolved)
    throw Error(ErrorCode::DepthCapExceeded, "joint tree did not separate the curves before the depth cap");
  rep.noether_sum = intersection_tree_sum(t, &rep.contributions);
  rep.oracle_value = intersection_oracle(F, G);
  rep.agreement = rep.noether_sum == rep.oracle_value;
  return rep;
}

namespace {

bool is_power_of_variable(const UniPoly& h) {
  for (int i = 0; i < h.degree(); ++i) {
    if (!h.coeff(i).is_zero()) return false;
  }
  return true;
}

bool constant_y_lead(const MultiPoly& p) {
  const auto cs = p.coefficients_in(1);
  return !cs.empty() && cs.back().degree() == 0;
}

}  // namespace

int intersection_oracle(const MultiPoly& f, const MultiPoly& g) {
  const MultiPoly F = as_affine(f), G = as_affine(g);
  if (F.is_zero() || G.is_zero()) throw Error(ErrorCode::CommonComponent, "zero polynomial has every component");
  if (!F.constant_term().is_zero() || !G.constant_term().is_zero()) return 0;
  if (!poly_gcd(F, G).is_constant()) throw Error(ErrorCode::CommonComponent, "the curves share a component");
  const FieldPtr k = common_field(F.field(), G.field());

  auto attempt = [&](const Scalar& l, int& out) {
    const CoordChange c = CoordChange::shear(l);
    const MultiPoly fs = c.apply(F), gs = c.apply(G);
    if (!constant_y_lead(fs) || !constant_y_lead(gs)) return false;
    const Scalar zero = Scalar::zero(fs.field());
    const UniPoly h = gcd(specialize(fs, 0, zero), specialize(gs, 0, zero));
    if (h.is_zero() || !is_power_of_variable(h)) return false;
    const UniPoly res = resultant_y(fs, gs);
    if (res.is_zero()) throw Error(ErrorCode::CommonComponent, "resultant vanishes identically");
    out = res.low_order();
    return true;
  };

  int value = 0;
  Scalar l;
  for (std::uint64_t i = 0; i < 200 && shear_candidate(k, i, l); ++i) {
    if (attempt(l, value)) return value;
  }
  if (k->is_finite()) {
    for (int d = 2; d <= 3; ++d) {
      const FieldPtr big = find_extension(k, d);
      for (std::uint64_t i = k->order().get_ui(); i < k->order().get_ui() + 200 && shear_candidate(big, i, l); ++i) {
        if (attempt(l, value)) return value;
      }
    }
  }
  throw Error(ErrorCode::FiberNotIsolated, "no shear isolates the origin in its fiber");
}

}  // namespace planesing
