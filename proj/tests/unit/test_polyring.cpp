#include "doctest.h"
#include "planesing/polyring/elim.hpp"
#include "planesing/polyring/projective.hpp"
#include "support/testing.hpp"

using namespace planesing;
using namespace testing;

namespace {

const FieldPtr Q = Field::rationals();

std::vector<FieldPtr> fields() { return {Q, Field::prime(5), field("p:9")}; }

}  // namespace

TEST_CASE("multiplicity and lowest form examples") {
  CHECK(mult_at_origin(affine(Q, "y^2 - x^3")) == 2);
  CHECK(mult_at_origin(affine(Q, "Y^2 + 2X^2Y + X^4 + X^7")) == 2);
  CHECK(mult_at_origin(affine(Q, "x*y")) == 2);
  CHECK(lowest_form(affine(Q, "y^2 - x^3")) == affine(Q, "y^2"));
  CHECK(lowest_form(affine(Q, "y^2 - x^2")) == affine(Q, "y^2 - x^2"));
  CHECK(lowest_form(affine(Q, "Y^2 + 2X^2Y + X^4 + X^7")) == affine(Q, "y^2"));
  try {
    mult_at_origin(MultiPoly(Q, VarSet::Affine));
    FAIL("expected ZeroPolynomial");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroPolynomial);
  }
}

TEST_CASE("make_suitable examples") {
  const Suitable a = make_suitable(affine(Q, "y^2 - x^3"));
  CHECK(a.change.is_identity());
  CHECK(a.poly == affine(Q, "y^2 - x^3"));
  const Suitable b = make_suitable(affine(Q, "x^2"));
  CHECK(b.poly == affine(Q, "(x + y)^2"));
  CHECK(b.change.to_string() == CoordChange::shear(Scalar::one(Q)).to_string());
  // Over F_2 the form x^2 + x y vanishes at (l, 1) for both l in F_2.
  const FieldPtr f2 = Field::prime(2);
  const Suitable c = make_suitable(affine(f2, "x^2 + x*y + y^3"));
  CHECK(is_suitable(c.poly));
  CHECK(c.poly.field()->order() == 4);
  CHECK(c.change.apply(affine(f2, "x^2 + x*y + y^3").embed(c.poly.field())) == c.poly);
}

TEST_CASE("translate examples") {
  CHECK(translate(affine(Q, "y - x^2"), Scalar::one(Q), Scalar::one(Q)) == affine(Q, "y - 2x - x^2"));
  const MultiPoly f = affine(Q, "y^3 - 3x*y + 7");
  CHECK(translate(f, Scalar::zero(Q), Scalar::zero(Q)) == f);
  const Scalar a = Scalar::from_int(Q, 4);
  CHECK(translate(affine(Q, "x"), a, Scalar::zero(Q)) == affine(Q, "x + 4"));
}

TEST_CASE("homogenize and dehomogenize examples") {
  CHECK(dehomogenize(projective(Q, "Y^2*Z - X^3")) == affine(Q, "y^2 - x^3"));
  CHECK(dehomogenize(projective(Q, "X*Y*Z"), ProjChart::Y) == affine(Q, "x*y"));
  CHECK(homogenize(affine(Q, "y - x^2"), 2) == projective(Q, "Y*Z - X^2"));
  CHECK_THROWS_AS(dehomogenize(projective(Q, "X^2 + Y")), Error);
}

TEST_CASE("partial derivative examples") {
  CHECK(partial_derivative(affine(Q, "y^2 - x^3"), 1) == affine(Q, "2y"));
  const FieldPtr f5 = Field::prime(5);
  CHECK(partial_derivative(affine(f5, "x^5"), 0).is_zero());
  CHECK(partial_derivative(projective(Q, "Y^2*Z - X^3"), 2) == projective(Q, "Y^2"));
}

TEST_CASE("ring axioms on random sparse polynomials") {
  std::mt19937_64 rng(21);
  for (const auto& k : fields()) {
    CAPTURE(k->to_string());
    for (int n = 0; n < 25; ++n) {
      const MultiPoly a = random_poly(k, rng, VarSet::Affine, 0, 4, 4), b = random_poly(k, rng, VarSet::Affine, 0, 4, 4),
                      c = random_poly(k, rng, VarSet::Affine, 0, 3, 3);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
    }
  }
}

TEST_CASE("order is a valuation and lowest forms multiply") {
  std::mt19937_64 rng(22);
  for (const auto& k : fields()) {
    for (int n = 0; n < 30; ++n) {
      const MultiPoly f = random_poly(k, rng, VarSet::Affine, 1, 5, 4), g = random_poly(k, rng, VarSet::Affine, 1, 5, 4);
      if (f.is_zero() || g.is_zero()) continue;
      CHECK(mult_at_origin(f * g) == mult_at_origin(f) + mult_at_origin(g));
      CHECK(lowest_form(f * g) == lowest_form(f) * lowest_form(g));
    }
  }
}

TEST_CASE("make_suitable preserves the multiplicity") {
  std::mt19937_64 rng(23);
  for (const auto& k : {Q, Field::prime(2), Field::prime(3), field("p:9")}) {
    for (int n = 0; n < 30; ++n) {
      const MultiPoly f = random_poly(k, rng, VarSet::Affine, 1, 5, 4);
      if (f.is_zero()) continue;
      const Suitable s = make_suitable(f);
      CHECK(is_suitable(s.poly));
      CHECK(mult_at_origin(s.poly) == mult_at_origin(f));
    }
  }
}

TEST_CASE("homogenize undoes dehomogenize off the chart variable") {
  std::mt19937_64 rng(24);
  for (const auto& k : fields()) {
    for (int n = 0; n < 20; ++n) {
      MultiPoly F = random_form(k, rng, 1 + n % 5, 5);
      if (F.is_zero()) continue;
      for (ProjChart c : {ProjChart::Z, ProjChart::Y, ProjChart::X}) {
        const MultiPoly f = dehomogenize(F, c);
        if (f.total_degree() < F.total_degree()) continue;  // chart variable divides F
        CHECK(homogenize(f, F.total_degree(), c) == F);
      }
    }
  }
}

TEST_CASE("coordinate changes: inverse and point maps") {
  std::mt19937_64 rng(25);
  for (const auto& k : fields()) {
    for (int n = 0; n < 20; ++n) {
      const Scalar a = random_scalar(k, rng), b = random_scalar(k, rng), l = random_scalar(k, rng);
      const CoordChange c =
          CoordChange::translate(a, b).then(CoordChange::shear(l)).then(CoordChange::swap_xy()).then(CoordChange::skew(b));
      const MultiPoly f = random_poly(k, rng, VarSet::Affine, 0, 4, 5);
      CHECK(c.inverse().apply(c.apply(f)) == f);
      CHECK(c.apply(c.inverse().apply(f)) == f);
      // G = c(F) and G(u) = 0 imply F(map_point(u)) = 0.
      const Scalar u = random_scalar(k, rng), v = random_scalar(k, rng);
      const MultiPoly g = c.apply(f) - MultiPoly::constant(c.apply(f).eval({u, v}), VarSet::Affine);
      const MultiPoly f0 = c.inverse().apply(g);
      const auto [px, py] = c.map_point(u, v);
      CHECK(f0.eval({px, py}).is_zero());
    }
  }
}

TEST_CASE("translate agrees with pointwise evaluation") {
  std::mt19937_64 rng(26);
  const FieldPtr k = Field::prime(101);
  for (int n = 0; n < 30; ++n) {
    const MultiPoly f = random_poly(k, rng, VarSet::Affine, 0, 5, 6);
    const Scalar a = random_scalar(k, rng), b = random_scalar(k, rng), u = random_scalar(k, rng),
                 v = random_scalar(k, rng);
    CHECK(translate(f, a, b).eval({u, v}) == f.eval({u + a, v + b}));
  }
}

TEST_CASE("gcd and exact division") {
  std::mt19937_64 rng(27);
  for (const auto& k : fields()) {
    for (int n = 0; n < 12; ++n) {
      const MultiPoly c = random_poly(k, rng, VarSet::Affine, 1, 2, 3);
      if (c.total_degree() < 1) continue;
      const MultiPoly a = affine(k, "x + y^2 + 1"), b = affine(k, "y - x^3");
      const MultiPoly g = poly_gcd(a * c, b * c);
      CHECK(poly_divide(a * c, g) * g == a * c);
      CHECK(poly_divide(c, g).is_constant());
    }
  }
  CHECK(proj_gcd(projective(Q, "X*Z^2*(Y - Z)"), projective(Q, "Z*(Y - Z)^2")) == projective(Q, "Y*Z - Z^2"));
}

TEST_CASE("resultant against substitution") {
  // Res_y(y - p(x), g) = g(x, p(x)).
  std::mt19937_64 rng(28);
  for (const auto& k : fields()) {
    for (int n = 0; n < 15; ++n) {
      std::vector<Scalar> pc;
      for (int i = 0; i < 3; ++i) pc.push_back(random_scalar(k, rng));
      const UniPoly p(k, pc);
      const MultiPoly f = MultiPoly::variable(k, VarSet::Affine, 1) - MultiPoly::from_univariate(p, VarSet::Affine, 0);
      const MultiPoly g = random_poly(k, rng, VarSet::Affine, 0, 4, 5);
      if (g.degree_in(1) < 1) continue;
      UniPoly want(k);
      for (const auto& [e, c] : g.terms()) want = want + UniPoly::monomial(c, e[0]) * p.pow(e[1]);
      CHECK(resultant_y(f, g) == want);
    }
  }
  CHECK(resultant_y(affine(Q, "y^2 - x^3"), affine(Q, "y^2 + x^3")) == UniPoly::monomial(Scalar::from_int(Q, 4), 6));
}

TEST_CASE("projective points are normalized") {
  const Scalar two = Scalar::from_int(Q, 2), zero = Scalar::zero(Q), four = Scalar::from_int(Q, 4);
  const ProjPoint p(zero, two, four);
  CHECK(p.to_string() == "[0:1:2]");
  CHECK(p == ProjPoint(zero, Scalar::one(Q), two));
  CHECK_THROWS_AS(ProjPoint(zero, zero, zero), Error);
  CHECK(chart_for(p) == ProjChart::Z);
  CHECK(chart_for(ProjPoint(Scalar::one(Q), two, zero)) == ProjChart::Y);
  CHECK(chart_for(ProjPoint(Scalar::one(Q), zero, zero)) == ProjChart::X);
  CHECK(localize(projective(Q, "Y^2*Z - X^3 - X^2*Z"), ProjPoint(zero, zero, Scalar::one(Q))) ==
        affine(Q, "y^2 - x^3 - x^2"));
}

TEST_CASE("parser: grammar, errors and round trip") {
  CHECK(affine(Q, "2x^2y") == affine(Q, "2*x^2*y"));
  CHECK(affine(Q, "(x+y)^2") == affine(Q, "x^2 + 2x*y + y^2"));
  CHECK(affine(Q, "x/2 - -y") == affine(Q, "1/2*x + y"));
  for (const char* bad : {"x^", "x +* y", "x / y", "x^2^3", "x*Y", "y + t", "(x", "w"}) {
    CAPTURE(bad);
    try {
      parse_poly(bad, Q);
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
  std::mt19937_64 rng(29);
  for (const auto& k : fields()) {
    for (int n = 0; n < 40; ++n) {
      const MultiPoly f = random_poly(k, rng, VarSet::Affine, 0, 6, 6);
      CHECK(parse_poly(f.to_string(), k, VarSet::Affine) == f);
      const MultiPoly F = random_form(k, rng, 1 + n % 4, 5);
      if (!F.is_zero()) CHECK(parse_poly(F.to_string(), k, VarSet::Projective) == F);
    }
  }
}
