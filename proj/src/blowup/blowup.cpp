#include "planesing/blowup/blowup.hpp"

#include <algorithm>

#include "planesing/polyring/elim.hpp"

namespace planesing {

MultiPoly blow_up_chart(const MultiPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot blow up the zero polynomial");
  if (f.varset() != VarSet::Affine) throw Error(ErrorCode::InvalidArgument, "blow_up_chart expects x, y");
  if (!is_suitable(f)) throw Error(ErrorCode::NotSuitable, "coordinates not suitable: F_r(0,1) = 0 for " + f.to_string());
  return proper_transform(f);
}

MultiPoly proper_transform(const MultiPoly& p) {
  const int r = p.order();
  MultiPoly out(p.field(), VarSet::Chart);
  for (const auto& [e, c] : p.terms()) out.add_term({e[0] + e[1] - r, e[1], 0}, c);
  return out;
}

std::vector<ExceptionalPoint> exceptional_points(const MultiPoly& fprime, std::uint64_t seed) {
  const UniPoly on_divisor = specialize(fprime, 0, Scalar::zero(fprime.field()));
  std::vector<ExceptionalPoint> out;
  for (const auto& root : all_roots(on_divisor, seed)) out.push_back({root.value, root.multiplicity});
  std::stable_sort(out.begin(), out.end(), [](const ExceptionalPoint& a, const ExceptionalPoint& b) {
    return a.alpha.to_string() < b.alpha.to_string();
  });
  return out;
}

MultiPoly recenter(const MultiPoly& fprime, const Scalar& alpha) {
  return translate(fprime.renamed(VarSet::Affine), Scalar::zero(alpha.field()), alpha);
}

bool is_squarefree(const MultiPoly& f) {
  const MultiPoly g = poly_gcd(poly_gcd(f, partial_derivative(f, 0)), partial_derivative(f, 1));
  return g.is_constant();
}

const char* termination_name(Termination t) { return t == Termination::Resolved ? "Resolved" : "DepthCapped"; }

const char* appendix_status_name(AppendixStatus s) {
  switch (s) {
    case AppendixStatus::Completed: return "Completed";
    case AppendixStatus::HypothesisFailed: return "HypothesisFailed";
    case AppendixStatus::Trivial: return "Trivial";
  }
  return "?";
}

namespace {

int order_or_zero(const std::optional<MultiPoly>& p) { return p ? std::max(0, p->order()) : 0; }

// The unique tangent slope b with F_r(1,t) = c (t - b)^r, if there is one.
std::optional<Scalar> single_tangent(const MultiPoly& f) {
  const UniPoly tp = tangent_polynomial(f);
  if (tp.degree() < 1) return std::nullopt;
  const auto parts = squarefree_decomposition(tp);
  if (parts.size() != 1 || parts.front().first.degree() != 1) return std::nullopt;
  const UniPoly& s = parts.front().first;
  return -s.coeff(0) / s.lead();
}

// Suitable coordinates, then y -> y + b x when the tangent cone is a single
// line y = b x, so that the lowest form becomes c y^r.
CoordChange normalizing_change(const MultiPoly& f) {
  Suitable s = make_suitable(f);
  CoordChange c = s.change;
  if (auto b = single_tangent(s.poly)) c = c.then(CoordChange::skew(*b));
  return c;
}

struct SingleBuilder {
  int max_depth;
  std::uint64_t seed;
  InfNearTree* tree;

  void fill(InfNearNode& node) {
    node.id = tree->node_count++;
    node.field = node.local_eq.field();
    node.r = node.local_eq.order();
    node.passenger_r.clear();
    for (auto& p : node.passenger_eq) {
      node.passenger_r.push_back(order_or_zero(p));
      if (node.passenger_r.back() == 0) p.reset();
    }
    if (node.r <= 1) return;
    if (node.depth >= max_depth) {
      tree->termination = Termination::DepthCapped;
      return;
    }
    const MultiPoly fp = blow_up_chart(node.local_eq);
    std::vector<std::optional<MultiPoly>> pp;
    for (const auto& p : node.passenger_eq) pp.push_back(p ? std::optional(proper_transform(*p)) : std::nullopt);
    for (const auto& pt : exceptional_points(fp, seed)) {
      InfNearNode child;
      child.depth = node.depth + 1;
      child.shift = pt.alpha;
      const MultiPoly centered = recenter(fp, pt.alpha);
      child.coord_change = normalizing_change(centered);
      child.local_eq = child.coord_change.apply(centered);
      for (const auto& p : pp) {
        child.passenger_eq.push_back(p ? std::optional(child.coord_change.apply(recenter(*p, pt.alpha))) : std::nullopt);
      }
      fill(child);
      node.children.push_back(std::move(child));
    }
  }
};

UniPoly lcm(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return b.monic();
  return (a * b / gcd(a, b)).monic();
}

struct JointBuilder {
  int max_depth;
  int num_active;
  std::uint64_t seed;
  JointTree* tree;
  int next_id = 0;

  // One shear making every passing active curve suitable, applied to all.
  void joint_suitable(JointNode& node) {
    std::vector<UniPoly> bad;
    for (int i = 0; i < num_active; ++i) {
      const auto& p = node.local_eq[static_cast<size_t>(i)];
      if (p && p->order() >= 1) bad.push_back(suitability_polynomial(*p));
    }
    if (bad.empty()) return;
    const CoordChange c = CoordChange::shear(find_good_shear(bad));
    if (c.is_identity()) return;
    node.coord_change = node.coord_change.then(c);
    for (auto& p : node.local_eq) {
      if (p) p = c.apply(*p);
    }
  }

  void fill(JointNode& node) {
    node.id = next_id++;
    node.r.clear();
    for (auto& p : node.local_eq) {
      node.r.push_back(order_or_zero(p));
      if (node.r.back() == 0) p.reset();
    }
    node.field = Field::rationals();
    bool first = true;
    for (const auto& p : node.local_eq) {
      if (!p) continue;
      node.field = first ? p->field() : common_field(node.field, p->field());
      first = false;
    }
    int passing = 0;
    for (int i = 0; i < num_active; ++i) passing += node.r[static_cast<size_t>(i)] > 0;
    if (passing < 2) return;
    if (node.depth >= max_depth) {
      tree->termination = Termination::DepthCapped;
      return;
    }
    std::vector<std::optional<MultiPoly>> tr;
    for (const auto& p : node.local_eq) tr.push_back(p ? std::optional(proper_transform(*p)) : std::nullopt);
    // Points on the exceptional divisor met by at least two active curves.
    UniPoly shared(node.field);
    for (int i = 0; i < num_active; ++i) {
      for (int j = i + 1; j < num_active; ++j) {
        const auto& a = tr[static_cast<size_t>(i)];
        const auto& b = tr[static_cast<size_t>(j)];
        if (!a || !b) continue;
        const Scalar zero = Scalar::zero(a->field());
        const UniPoly g = gcd(specialize(*a, 0, zero), specialize(*b, 0, zero));
        if (g.degree() >= 1) shared = lcm(shared, g);
      }
    }
    if (shared.degree() < 1) return;
    std::vector<Root> roots = all_roots(shared, seed);
    std::stable_sort(roots.begin(), roots.end(),
                     [](const Root& a, const Root& b) { return a.value.to_string() < b.value.to_string(); });
    for (const auto& rt : roots) {
      JointNode child;
      child.depth = node.depth + 1;
      child.shift = rt.value;
      for (const auto& p : tr) child.local_eq.push_back(p ? std::optional(recenter(*p, rt.value)) : std::nullopt);
      for (auto& p : child.local_eq) {
        if (p && !p->constant_term().is_zero()) p.reset();
      }
      joint_suitable(child);
      fill(child);
      node.children.push_back(std::move(child));
    }
  }
};

}  // namespace

InfNearTree resolve_tree(const MultiPoly& f, int max_depth, const std::vector<MultiPoly>& passengers,
                         std::uint64_t seed) {
  const MultiPoly F = as_affine(f);
  if (F.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot resolve the zero polynomial");
  if (!F.constant_term().is_zero()) throw Error(ErrorCode::InvalidArgument, "curve does not pass through the origin");
  if (!is_squarefree(F)) throw Error(ErrorCode::NotSquarefree, "polynomial has a repeated factor: " + F.to_string());
  InfNearTree tree;
  tree.seed = seed;
  InfNearNode& root = tree.root;
  root.shift = Scalar::zero(F.field());
  root.coord_change = normalizing_change(F);
  root.local_eq = root.coord_change.apply(F);
  for (const auto& p : passengers) root.passenger_eq.emplace_back(root.coord_change.apply(as_affine(p)));
  SingleBuilder{max_depth, seed, &tree}.fill(root);
  return tree;
}

JointTree joint_tree(const std::vector<MultiPoly>& curves, int max_depth, int num_active, std::uint64_t seed) {
  if (num_active < 0) num_active = static_cast<int>(curves.size());
  if (num_active < 2 || num_active > static_cast<int>(curves.size()))
    throw Error(ErrorCode::InvalidArgument, "joint_tree needs at least two active curves");
  JointTree tree;
  tree.num_active = num_active;
  tree.seed = seed;
  JointNode& root = tree.root;
  for (size_t i = 0; i < curves.size(); ++i) {
    const MultiPoly c = as_affine(curves[i]);
    if (c.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "curve " + std::to_string(i + 1) + " is zero");
    if (static_cast<int>(i) < num_active && !c.constant_term().is_zero())
      throw Error(ErrorCode::InvalidArgument, "curve " + std::to_string(i + 1) + " does not pass through the origin");
    root.local_eq.emplace_back(c);
  }
  for (int i = 0; i < num_active; ++i) {
    for (int j = i + 1; j < num_active; ++j) {
      if (!poly_gcd(*root.local_eq[static_cast<size_t>(i)], *root.local_eq[static_cast<size_t>(j)]).is_constant())
        throw Error(ErrorCode::CommonComponent,
                    "curves " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " share a component");
    }
  }
  for (auto& p : root.local_eq) {
    if (p && !p->constant_term().is_zero()) p.reset();
  }
  root.shift = Scalar::zero(root.local_eq.front()->field());
  JointBuilder b{max_depth, num_active, seed, &tree};
  b.joint_suitable(root);
  b.fill(root);
  return tree;
}

AppendixResult appendix_sequence(const MultiPoly& f, int n) {
  const MultiPoly F = as_affine(f);
  if (F.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "appendix sequence of the zero polynomial");
  AppendixResult res;
  res.r = F.order();
  const MultiPoly low = lowest_form(F);
  if (low.size() != 1 || low.terms().begin()->first != Exponent{0, res.r, 0})
    throw Error(ErrorCode::InvalidArgument, "lowest form must be c*y^r, got " + low.to_string());
  res.phi = UniPoly(F.field());
  res.stages.push_back({1, F, Scalar()});
  if (res.r <= 1) {
    res.status = AppendixStatus::Trivial;
    return res;
  }
  for (int i = 2; i <= n; ++i) {
    const MultiPoly g = blow_up_chart(res.stages.back().poly).renamed(VarSet::Affine);
    std::optional<Scalar> b;
    if (g.order() == res.r) b = single_tangent(g);
    if (!b) {
      res.status = AppendixStatus::HypothesisFailed;
      res.failed_stage = i;
      return res;
    }
    res.stages.push_back({i, CoordChange::skew(*b).apply(g), *b});
    res.phi = res.phi + UniPoly::monomial(*b, i);
  }
  return res;
}

}  // namespace planesing
