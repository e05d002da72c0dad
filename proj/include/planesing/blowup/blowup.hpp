#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "planesing/exactfield/factor.hpp"
#include "planesing/polyring/local.hpp"

namespace planesing {

inline constexpr int kDefaultMaxDepth = 64;

// F(x, x*t) = x^r * F'(x, t) for suitable F of multiplicity r.  The result
// uses the chart variables (x, t).
MultiPoly blow_up_chart(const MultiPoly& f);

// P(x, x*t) / x^m with m the multiplicity of P at the origin; no
// suitability requirement (used for curves carried along another's chart).
MultiPoly proper_transform(const MultiPoly& p);

struct ExceptionalPoint {
  Scalar alpha;  // t-coordinate on the exceptional divisor x = 0
  int multiplicity = 1;
};

// Roots of F'(0, t), each with multiplicity, ordered by serialization.
std::vector<ExceptionalPoint> exceptional_points(const MultiPoly& fprime, std::uint64_t seed = kDefaultSeed);

// F'(x, t + alpha) in affine variables (x, y).
MultiPoly recenter(const MultiPoly& fprime, const Scalar& alpha);

// Squarefree test through gcd(F, F_x, F_y).
bool is_squarefree(const MultiPoly& f);

enum class Termination { Resolved, DepthCapped };
const char* termination_name(Termination t);

struct InfNearNode {
  int id = 0;
  int depth = 0;
  FieldPtr field;
  MultiPoly local_eq;  // proper transform at the origin, suitable coordinates
  int r = 0;
  Scalar shift;  // exceptional point alpha this node sits at (0 at the root)
  // local_eq = coord_change.apply(recenter(parent chart transform, shift)),
  // or coord_change.apply(input) at the root.
  CoordChange coord_change;
  // Other curves carried along the same charts, r = 0 once they leave.
  std::vector<std::optional<MultiPoly>> passenger_eq;
  std::vector<int> passenger_r;
  std::vector<InfNearNode> children;

  InfNearNode() : local_eq(Field::rationals(), VarSet::Affine) {}
};

struct InfNearTree {
  InfNearNode root;
  Termination termination = Termination::Resolved;
  std::uint64_t seed = kDefaultSeed;
  int node_count = 0;
};

// All infinitely near points of F at the origin with r >= 1, expanded until
// every leaf is smooth.  Passengers share the charts and get their proper
// transform multiplicities recorded per node.
InfNearTree resolve_tree(const MultiPoly& f, int max_depth = kDefaultMaxDepth,
                         const std::vector<MultiPoly>& passengers = {}, std::uint64_t seed = kDefaultSeed);

// Pre-order visit.
template <typename Fn>
void for_each_node(const InfNearNode& n, Fn&& fn) {
  fn(n);
  for (const auto& c : n.children) for_each_node(c, fn);
}

struct JointNode {
  int id = 0;
  int depth = 0;
  FieldPtr field;
  Scalar shift;
  CoordChange coord_change;
  std::vector<std::optional<MultiPoly>> local_eq;  // per tracked curve
  std::vector<int> r;                              // 0 when the curve misses the point
  std::vector<JointNode> children;
};

struct JointTree {
  JointNode root;
  Termination termination = Termination::Resolved;
  int num_active = 2;
  std::uint64_t seed = kDefaultSeed;
};

// Infinitely near points shared by at least two of the first `num_active`
// curves; the remaining curves ride along as passengers.  All curves must
// pass through the origin and active curves must be pairwise coprime.
JointTree joint_tree(const std::vector<MultiPoly>& curves, int max_depth = kDefaultMaxDepth, int num_active = -1,
                     std::uint64_t seed = kDefaultSeed);

template <typename Fn>
void for_each_node(const JointNode& n, Fn&& fn) {
  fn(n);
  for (const auto& c : n.children) for_each_node(c, fn);
}

enum class AppendixStatus { Completed, HypothesisFailed, Trivial };
const char* appendix_status_name(AppendixStatus s);

struct AppendixStage {
  int index = 1;       // n in F^(n)
  MultiPoly poly;      // F^(n) in (x, y)
  Scalar a;            // a_n; unset for n = 1
};

struct AppendixResult {
  AppendixStatus status = AppendixStatus::Completed;
  int failed_stage = 0;  // first n whose F^(n) does not exist
  int r = 0;
  std::vector<AppendixStage> stages;
  UniPoly phi{Field::rationals()};  // sum of a_i X^i over the computed stages
};

// F^(1) = F with lowest form c*y^r; F^(n-1)(x, x*y) = x^r F^(n)(x, y - a_n x)
// while the blown-up transform keeps multiplicity r at a single point with
// a single tangent.
AppendixResult appendix_sequence(const MultiPoly& f, int n);

}  // namespace planesing
