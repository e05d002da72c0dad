#include "doctest.h"
#include "planesing/noether/linsolve.hpp"
#include "planesing/polyring/elim.hpp"
#include "planesing/noether/noether.hpp"
#include "planesing/noether/report_json.hpp"
#include "support/testing.hpp"

using namespace planesing;
using namespace testing;

namespace {

const FieldPtr Q = Field::rationals();

std::vector<std::string> point_names(const std::vector<ProjPoint>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

using Matrix = std::vector<std::vector<Scalar>>;

std::vector<Scalar> mat_vec(const FieldPtr& k, const Matrix& a, const std::vector<Scalar>& x) {
  std::vector<Scalar> out;
  for (const auto& row : a) {
    Scalar s = Scalar::zero(k);
    for (size_t j = 0; j < row.size(); ++j) s += row[j] * x[j];
    out.push_back(s);
  }
  return out;
}

// Exhaustive search for a solution over a small prime field.
bool brute_force_solvable(const FieldPtr& k, const Matrix& a, const std::vector<Scalar>& b) {
  const size_t n = a.empty() ? 0 : a[0].size();
  const std::uint64_t q = k->order().get_ui();
  std::uint64_t total = 1;
  for (size_t i = 0; i < n; ++i) total *= q;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Scalar> x;
    for (std::uint64_t c = code, i = 0; i < n; ++i, c /= q) x.push_back(Scalar::from_int(k, static_cast<long>(c % q)));
    if (mat_vec(k, a, x) == b) return true;
  }
  return false;
}

std::array<std::array<Scalar, 3>, 3> random_invertible(const FieldPtr& k, std::mt19937_64& rng) {
  const Scalar one = Scalar::one(k), zero = Scalar::zero(k);
  const Scalar a = random_scalar(k, rng), b = random_scalar(k, rng), c = random_scalar(k, rng);
  // Lower unipotent times a permutation-free upper unipotent: always invertible.
  return {{{one, a, b}, {c, c * a + one, c * b + a}, {b, b * a + c, b * b + c * a + one}}};
}

}  // namespace

TEST_CASE("find_common_points examples") {
  using V = std::vector<std::string>;
  CHECK(point_names(find_common_points(projective(Q, "X"), projective(Q, "Y"))) == V{"[0:0:1]"});
  CHECK(point_names(find_common_points(projective(Q, "X*Y"), projective(Q, "Z"))) == V{"[0:1:0]", "[1:0:0]"});
  CHECK(point_names(find_common_points(projective(Q, "Y*Z - X^2"), projective(Q, "Y"))) == V{"[0:0:1]"});
  try {
    find_common_points(projective(Q, "X*Y"), projective(Q, "X*Z"));
    FAIL("expected CommonComponent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CommonComponent);
  }
  try {
    find_common_points(projective(Q, "X^2 + Y^2 + Z^2"), projective(Q, "X - Y"));
    FAIL("expected NonRationalPoint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonRationalPoint);
  }
}

TEST_CASE("common points lie on both curves") {
  for (const auto& row : load_corpus("bezout.txt")) {
    CAPTURE(row[0]);
    const FieldPtr k = field(row[1]);
    const MultiPoly F = projective(k, row[2]), G = projective(k, row[3]);
    const auto pts = find_common_points(F, G);
    CHECK_FALSE(pts.empty());
    for (const auto& p : pts) {
      const std::vector<Scalar> c(p.coords().begin(), p.coords().end());
      CHECK(F.embed(p.field()).eval(c).is_zero());
      CHECK(G.embed(p.field()).eval(c).is_zero());
    }
  }
}

TEST_CASE("singular points") {
  using V = std::vector<std::string>;
  CHECK(point_names(find_singular_points(projective(Q, "Y^2*Z - X^2*(X + Z)"))) == V{"[0:0:1]"});
  CHECK(find_singular_points(projective(Q, "Y^2*Z - X^3 - X*Z^2")).empty());
  CHECK(point_names(find_singular_points(projective(Q, "Y^2*Z^3 - X^5"))) == V{"[0:0:1]", "[0:1:0]"});
  try {
    find_singular_points(projective(Q, "(X - Y)^2*Z"));
    FAIL("expected NotSquarefree");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSquarefree);
  }
}

TEST_CASE("check_condition examples") {
  const ConditionReport a = check_condition(projective(Q, "X"), projective(Q, "Y"), projective(Q, "Z"));
  CHECK_FALSE(a.passed);
  REQUIRE(a.points.size() == 1);
  CHECK(a.points[0].point.to_string() == "[0:0:1]");
  CHECK(a.points[0].failing_depth == 0);
  CHECK(check_condition(projective(Q, "X"), projective(Q, "Y"), projective(Q, "X*Y")).passed);
  const ConditionReport c = check_condition(projective(Q, "Y*Z - X^2"), projective(Q, "Y*Z + X^2"), projective(Q, "Y*Z"));
  CHECK(c.passed);
  REQUIRE(c.points.size() == 2);
  CHECK(point_names({c.points[0].point, c.points[1].point}) == std::vector<std::string>{"[0:0:1]", "[0:1:0]"});
  for (const auto& p : c.points) {
    CHECK(p.nodes.size() == 2);
    for (const auto& n : p.nodes) CHECK(n.margin >= 0);
  }
}

TEST_CASE("solve_af_bg examples") {
  const NoetherCertificate a = solve_af_bg(projective(Q, "X"), projective(Q, "Y"), projective(Q, "X^2 + Y^2"));
  CHECK(a.status == CertStatus::Solved);
  CHECK(*a.a == projective(Q, "X"));
  CHECK(*a.b == projective(Q, "Y"));
  CHECK(a.residual.is_zero());
  const NoetherCertificate b = solve_af_bg(projective(Q, "Y*Z - X^2"), projective(Q, "Y*Z + X^2"), projective(Q, "Y*Z"));
  CHECK(b.status == CertStatus::Solved);
  const Scalar half = Scalar::from_rational(Q, mpq_class(1, 2));
  CHECK(*b.a == MultiPoly::constant(half, VarSet::Projective));
  CHECK(*b.b == MultiPoly::constant(half, VarSet::Projective));
  const NoetherCertificate c = solve_af_bg(projective(Q, "X"), projective(Q, "Y"), projective(Q, "Z^2"));
  CHECK(c.status == CertStatus::NoSolution);
  CHECK_FALSE(verify_certificate(projective(Q, "X"), projective(Q, "Y"), projective(Q, "Z^2"), c));
  // e < c: the A block is empty.
  const NoetherCertificate d = solve_af_bg(projective(Q, "X^3"), projective(Q, "Y"), projective(Q, "Y*Z"));
  CHECK(d.status == CertStatus::Solved);
  CHECK_FALSE(d.a.has_value());
  CHECK(d.deg_a == -1);
  CHECK_THROWS_AS(solve_af_bg(projective(Q, "X*Y"), projective(Q, "X*Z"), projective(Q, "X^3")), Error);
}

TEST_CASE("noether_solve annotates a failed hypothesis") {
  const NoetherCertificate c = noether_solve(projective(Q, "X"), projective(Q, "Y"), projective(Q, "Z^2"));
  CHECK(c.status == CertStatus::HypothesisFailed);
  REQUIRE(c.failed_point.has_value());
  CHECK(c.failed_point->to_string() == "[0:0:1]");
  CHECK(c.failed_depth == 0);
}

TEST_CASE("corpus triples") {
  for (const auto& row : load_corpus("triples.txt")) {
    CAPTURE(row[0]);
    const FieldPtr k = field(row[1]);
    const MultiPoly F = projective(k, row[2]), G = projective(k, row[3]), H = projective(k, row[4]);
    CHECK(check_condition(F, G, H).passed == (row[5] == "pass"));
    const NoetherCertificate cert = solve_af_bg(F, G, H);
    CHECK(cert_status_name(cert.status) == row[6]);
    CHECK(verify_certificate(F, G, H, cert) == (row[6] == "Solved"));
  }
}

TEST_CASE("check_condition is invariant under projective linear changes") {
  std::mt19937_64 rng(51);
  for (const auto& row : load_corpus("triples.txt")) {
    CAPTURE(row[0]);
    const FieldPtr k = field(row[1]);
    const MultiPoly F = projective(k, row[2]), G = projective(k, row[3]), H = projective(k, row[4]);
    const bool want = check_condition(F, G, H).passed;
    const auto m = random_invertible(k, rng);
    CHECK(check_condition(linear_substitute(F, m), linear_substitute(G, m), linear_substitute(H, m)).passed == want);
  }
}

TEST_CASE("solutions differ by syzygies") {
  std::mt19937_64 rng(52);
  for (const auto& k : {Q, Field::prime(7)}) {
    for (int n = 0; n < 10; ++n) {
      const MultiPoly F = random_form(k, rng, 2, 5), G = random_form(k, rng, 2, 5);
      if (F.is_zero() || G.is_zero() || !proj_gcd(F, G).is_constant()) continue;
      const MultiPoly H = random_form(k, rng, 2, 4) * F + random_form(k, rng, 2, 4) * G;
      const NoetherCertificate cert = solve_af_bg(F, G, H);
      REQUIRE(cert.status == CertStatus::Solved);
      CHECK(verify_certificate(F, G, H, cert));
      const auto kernel = af_bg_kernel(F, G, H.total_degree());
      CHECK(kernel.size() == 1);  // (G, -F) up to scaling in degree 4
      for (const auto& [ka, kb] : kernel) {
        CHECK((ka * F + kb * G).is_zero());
        NoetherCertificate other = cert;
        const Scalar c = random_scalar(k, rng, true);
        other.a = *cert.a + ka * c;
        other.b = *cert.b + kb * c;
        CHECK(verify_certificate(F, G, H, other));
        CHECK((*other.a - *cert.a) * F == -((*other.b - *cert.b) * G));
      }
    }
  }
}

TEST_CASE("bezout examples and corpus") {
  CHECK(bezout_check(projective(Q, "X"), projective(Q, "Y")).total == 1);
  const BezoutReport conic = bezout_check(projective(Q, "Y*Z - X^2"), projective(Q, "Y"));
  CHECK(conic.total == 2);
  REQUIRE(conic.per_point.size() == 1);
  CHECK(conic.per_point[0].first.to_string() == "[0:0:1]");
  CHECK(bezout_check(projective(Q, "Y^2*Z - X^3"), projective(Q, "Y")).total == 3);
  for (const auto& row : load_corpus("bezout.txt")) {
    CAPTURE(row[0]);
    const FieldPtr k = field(row[1]);
    const MultiPoly F = projective(k, row[2]), G = projective(k, row[3]);
    const BezoutReport rep = bezout_check(F, G);
    CHECK(rep.total == F.total_degree() * G.total_degree());
    for (const auto& [p, ir] : rep.per_point) CHECK(ir.agreement);
  }
}

TEST_CASE("linear solver: solutions, kernels, consistency") {
  std::mt19937_64 rng(53);
  for (const auto& k : {Q, Field::prime(3), Field::prime(101)}) {
    for (int n = 0; n < 40; ++n) {
      const size_t rows = 1 + n % 4, cols = 1 + (n / 4) % 4;
      Matrix a(rows, std::vector<Scalar>(cols, Scalar::zero(k)));
      for (auto& r : a)
        for (auto& v : r) v = (rng() % 3 == 0) ? Scalar::zero(k) : random_scalar(k, rng);
      if (n % 3 == 0 && rows > 1) a[rows - 1] = a[0];  // force a dependency
      std::vector<Scalar> b;
      for (size_t i = 0; i < rows; ++i) b.push_back(random_scalar(k, rng));
      const LinearSolution sol = solve_linear(k, a, b);
      if (sol.consistent) {
        CHECK(mat_vec(k, a, sol.particular) == b);
        CHECK(sol.kernel.size() + static_cast<size_t>(sol.rank) == cols);
        for (const auto& v : sol.kernel) CHECK(mat_vec(k, a, v) == std::vector<Scalar>(rows, Scalar::zero(k)));
      }
      if (k->is_finite() && k->order() == 3) CHECK(sol.consistent == brute_force_solvable(k, a, b));
    }
  }
}

TEST_CASE("certificate and condition serialization") {
  const auto j = to_json(solve_af_bg(projective(Q, "Y*Z - X^2"), projective(Q, "Y*Z + X^2"), projective(Q, "Y*Z")));
  CHECK(j["status"] == "Solved");
  CHECK(j["A"] == "1/2");
  CHECK(j["residual"] == "0");
  const auto c = to_json(check_condition(projective(Q, "X"), projective(Q, "Y"), projective(Q, "Z")));
  CHECK(c["passed"] == false);
  CHECK(c["points"][0]["failing_depth"] == 0);
  CHECK(c["points"][0]["chart"] == "Z=1");
}
