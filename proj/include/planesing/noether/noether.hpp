#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planesing/invariants/invariants.hpp"

namespace planesing {

// Common zeros in the projective plane of homogeneous polynomials with no
// common factor (zero polynomials are ignored).  Finite fields are extended
// as needed; over Q an irrational point raises NonRationalPoint.
std::vector<ProjPoint> find_common_points(const std::vector<MultiPoly>& polys, std::uint64_t seed = kDefaultSeed);
std::vector<ProjPoint> find_common_points(const MultiPoly& f, const MultiPoly& g, std::uint64_t seed = kDefaultSeed);

// Common zeros of F, F_X, F_Y, F_Z.  NotSquarefree when they share a factor.
std::vector<ProjPoint> find_singular_points(const MultiPoly& f, std::uint64_t seed = kDefaultSeed);

struct NodeCheck {
  int depth;
  int r_f;
  int r_g;
  int r_h;
  int margin;  // r_h - (r_f + r_g - 1)
};

struct PointCheck {
  ProjPoint point;
  ProjChart chart;
  bool passed = true;
  std::vector<NodeCheck> nodes;
  std::optional<int> failing_depth;
};

struct ConditionReport {
  bool passed = true;
  std::vector<PointCheck> points;
};

// r_Q(H) >= r_Q(F) + r_Q(G) - 1 at every point Q of the joint trees of F
// and G over their common points, H carried along the same charts.
ConditionReport check_condition(const MultiPoly& f, const MultiPoly& g, const MultiPoly& h,
                                int max_depth = kDefaultMaxDepth, std::uint64_t seed = kDefaultSeed);

enum class CertStatus { Solved, HypothesisFailed, NoSolution };
const char* cert_status_name(CertStatus s);

struct NoetherCertificate {
  CertStatus status = CertStatus::NoSolution;
  // Absent when the degree is negative (e < c, resp. e < d).
  std::optional<MultiPoly> a;
  std::optional<MultiPoly> b;
  int deg_a = 0;  // e - c
  int deg_b = 0;  // e - d
  MultiPoly residual;
  std::optional<ProjPoint> failed_point;  // HypothesisFailed only
  std::optional<int> failed_depth;

  NoetherCertificate() : residual(Field::rationals(), VarSet::Projective) {}
};

// Homogeneous monomials of the given degree, grlex descending.
std::vector<Exponent> monomials_of_degree(int degree);

// Linear solve for H = A F + B G with free variables set to zero.
NoetherCertificate solve_af_bg(const MultiPoly& f, const MultiPoly& g, const MultiPoly& h);

// Pairs (A, B) spanning the solutions of A F + B G = 0 in the degrees of H.
std::vector<std::pair<MultiPoly, MultiPoly>> af_bg_kernel(const MultiPoly& f, const MultiPoly& g, int e);

// Recomputes H - A F - B G and checks degrees; independent of the solver.
bool verify_certificate(const MultiPoly& f, const MultiPoly& g, const MultiPoly& h, const NoetherCertificate& cert);

// Solver result, annotated with the first failing point of the condition
// check when the solver finds no solution.
NoetherCertificate noether_solve(const MultiPoly& f, const MultiPoly& g, const MultiPoly& h,
                                 int max_depth = kDefaultMaxDepth, std::uint64_t seed = kDefaultSeed);

struct BezoutReport {
  int total = 0;
  int expected = 0;
  bool agreement = false;
  std::vector<std::pair<ProjPoint, IntersectionReport>> per_point;
};

BezoutReport bezout_check(const MultiPoly& f, const MultiPoly& g, int max_depth = kDefaultMaxDepth,
                          std::uint64_t seed = kDefaultSeed);

}  // namespace planesing
