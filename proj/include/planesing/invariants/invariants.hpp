#pragma once

#include <string>
#include <vector>

#include "planesing/blowup/blowup.hpp"
#include "planesing/polyring/projective.hpp"

namespace planesing {

struct MultiplicityEntry {
  int depth;
  int r;
};

struct SingularityReport {
  std::string point = "(0,0)";
  std::string field;
  std::vector<MultiplicityEntry> multiplicity_sequence;  // nodes with r >= 2, pre-order
  int delta = 0;
  int conductor_degree = 0;
};

// delta = sum of r(r-1)/2 over the tree.  Throws UnresolvedTree when the
// tree hit its depth cap.
SingularityReport delta_invariant(const InfNearTree& tree);

struct GenusReport {
  int degree = 0;
  int arithmetic_genus = 0;  // (n-1)(n-2)/2
  int delta = 0;
  int genus = 0;
  bool irreducibility_certified = false;
  std::vector<SingularityReport> points;
};

// Absolute irreducibility certificate: a full-degree line section that is
// irreducible together with a smooth rational point, over the field itself
// or a small extension (finite fields) or modulo a prime (Q).
bool certify_absolutely_irreducible(const MultiPoly& F, std::uint64_t seed = kDefaultSeed);

// g = (n-1)(n-2)/2 - sum of delta over the given singular points.
GenusReport genus(const MultiPoly& F, const std::vector<ProjPoint>& singular_points, bool assume_irreducible = false,
                  int max_depth = kDefaultMaxDepth, std::uint64_t seed = kDefaultSeed);

struct AdjointMargin {
  int node_id;
  int depth;
  int r_curve;
  int r_adjoint;
  int margin;  // r_adjoint - (r_curve - 1)
};

struct AdjointReport {
  bool adjoint = true;  // the sufficient ("virtual") adjoint condition
  std::vector<AdjointMargin> margins;
};

// r_Q(G) >= r_Q(C) - 1 at every node of C's resolution tree at the origin.
AdjointReport adjoint_check(const MultiPoly& curve, const MultiPoly& g, int max_depth = kDefaultMaxDepth,
                            std::uint64_t seed = kDefaultSeed);

struct Contribution {
  int depth;
  int r_c;
  int r_d;
};

struct IntersectionReport {
  std::string point = "(0,0)";
  int noether_sum = 0;
  std::vector<Contribution> contributions;
  int oracle_value = 0;
  bool agreement = false;
};

// Sum of r_Q(C) r_Q(D) over the joint tree at the origin, with the resultant
// oracle alongside.
IntersectionReport intersection_multiplicity(const MultiPoly& f, const MultiPoly& g, int max_depth = kDefaultMaxDepth,
                                             std::uint64_t seed = kDefaultSeed);

// The tree sum alone.
int intersection_tree_sum(const JointTree& t, std::vector<Contribution>* contributions = nullptr);

// ord_{x=0} Res_y after a shear isolating the origin in its x-fiber.
int intersection_oracle(const MultiPoly& f, const MultiPoly& g);

}  // namespace planesing
