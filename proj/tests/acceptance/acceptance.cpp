// One PASS/FAIL line per acceptance criterion; nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include "planesing/blowup/blowup.hpp"
#include "planesing/invariants/invariants.hpp"
#include "planesing/noether/noether.hpp"
#include "planesing/polyring/elim.hpp"
#include "support/testing.hpp"

using namespace planesing;
using namespace testing;

namespace {

const FieldPtr Q = Field::rationals();

struct Verdict {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

struct CorpusGerm {
  std::string name;
  MultiPoly f;
  std::string reduction;  // field for a retry when f has irrational points over Q
};

// Every corpus curve as a germ: affine germs, both curves of each pair, and
// the projective curves localized at their singular points.
std::vector<CorpusGerm> corpus_germs() {
  std::vector<CorpusGerm> out;
  for (const auto& row : load_corpus("germs.txt")) out.push_back({row[0], affine(field(row[1]), row[2]), ""});
  for (const auto& row : load_corpus("curves.txt")) {
    const MultiPoly F = projective(field(row[1]), row[2]);
    for (const auto& p : find_singular_points(F)) out.push_back({row[0] + "@" + p.to_string(), localize(F, p), ""});
  }
  for (const auto& row : load_corpus("pairs.txt")) {
    out.push_back({row[0] + ".C", affine(field(row[1]), row[2]), "p:7"});
    out.push_back({row[0] + ".D", affine(field(row[1]), row[3]), "p:7"});
  }
  return out;
}

// Over Q a germ with irrational infinitely near points cannot be resolved
// (NonRationalPoint); such germs are reduced mod 7, where 2 is a square.
InfNearTree resolve_corpus_germ(const CorpusGerm& g, int& reduced) {
  try {
    return resolve_tree(g.f);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonRationalPoint || g.reduction.empty()) throw;
  }
  ++reduced;
  return resolve_tree(parse_poly(g.f.to_string(), field(g.reduction), VarSet::Affine));
}

Verdict straightening() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const AppendixResult a = appendix_sequence(affine(Q, "Y^2 + 2X^2Y + X^4 + X^7"), 3);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  v.require(a.status == AppendixStatus::Completed && a.stages.size() == 3, "sequence incomplete");
  if (!v.ok) return v;
  v.require(a.stages[1].poly == affine(Q, "y^2 + x^5"), "F^(2) = " + a.stages[1].poly.to_string());
  v.require(a.stages[1].a == Scalar::from_int(Q, -1), "a_2 = " + a.stages[1].a.to_string());
  v.require(a.stages[2].poly == affine(Q, "y^2 + x^3"), "F^(3) = " + a.stages[2].poly.to_string());
  v.require(a.stages[2].a == Scalar::zero(Q), "a_3 = " + a.stages[2].a.to_string());
  v.require(secs < 1.0, "took " + std::to_string(secs) + " s");
  if (v.ok) v.detail = "F^(2)=y^2+x^5 a_2=-1 F^(3)=y^2+x^3 a_3=0 in " + std::to_string(secs) + " s";
  return v;
}

Verdict chart_identities() {
  Verdict v;
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (const auto& k : {Q, Field::prime(5), field("p:9")}) {
    int here = 0;
    while (here < 80) {
      const MultiPoly raw = random_poly(k, rng, VarSet::Affine, 1, 6, 6);
      if (raw.is_zero()) continue;
      const MultiPoly f = make_suitable(raw).poly;
      const MultiPoly fy = oracle_derivative(f, 1);
      if (fy.is_zero()) continue;  // the derivative identity is vacuous
      const int r = mult_at_origin(f);
      const MultiPoly fp = blow_up_chart(f);
      const FieldPtr kk = f.field();
      v.require(oracle_chart_substitution(f) == chart_x_power(kk, r) * fp, "chart identity: " + f.to_string());
      v.require(oracle_chart_substitution(fy) == chart_x_power(kk, r - 1) * oracle_derivative(fp, 1),
                "derivative identity: " + f.to_string());
      ++here;
    }
    checked += here;
  }
  v.require(checked >= 200, "only " + std::to_string(checked) + " polynomials");
  if (v.ok) v.detail = std::to_string(checked) + " polynomials over Q, F_5, F_9";
  return v;
}

Verdict ordinary_points() {
  Verdict v;
  // Product of r distinct lines through the origin.
  for (int r = 2; r <= 5; ++r) {
    MultiPoly f = MultiPoly::constant(Scalar::one(Q), VarSet::Affine);
    for (int i = 0; i < r; ++i) f = f * affine(Q, "y - " + std::to_string(i) + "*x");
    const int d = delta_invariant(resolve_tree(f)).delta;
    v.require(d == r * (r - 1) / 2, "r = " + std::to_string(r) + ": delta " + std::to_string(d));
  }
  if (v.ok) v.detail = "r = 2..5";
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  v.require(intersection_multiplicity(affine(Q, "y^2 - x^3"), affine(Q, "y")).noether_sum == 3, "cusp and line");
  v.require(intersection_multiplicity(affine(Q, "y^2 - x^3"), affine(Q, "y^2 + x^3")).noether_sum == 6, "two cusps");
  int pairs = 0;
  auto compare = [&](const std::string& name, const MultiPoly& f, const MultiPoly& g) {
    const JointTree t = joint_tree({f, g});
    const int sum = intersection_tree_sum(t);
    const int oracle = intersection_oracle(f, g);
    v.require(sum == oracle, name + ": tree " + std::to_string(sum) + ", oracle " + std::to_string(oracle));
    ++pairs;
  };
  for (const auto& row : load_corpus("pairs.txt")) {
    const FieldPtr k = field(row[1]);
    compare(row[0], affine(k, row[2]), affine(k, row[3]));
  }
  // Pairs of corpus germs over Q with rational joint trees.
  std::vector<std::pair<std::string, MultiPoly>> germs;
  for (const auto& row : load_corpus("germs.txt"))
    if (row[1] == "q") germs.emplace_back(row[0], affine(Q, row[2]));
  for (size_t i = 0; i < germs.size(); ++i) {
    for (size_t j = i + 1; j < germs.size(); ++j) {
      const MultiPoly &f = germs[i].second, &g = germs[j].second;
      if (f.total_degree() + g.total_degree() > 12 || !poly_gcd(f, g).is_constant()) continue;
      try {
        compare(germs[i].first + "," + germs[j].first, f, g);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NonRationalPoint) throw;
      }
    }
  }
  v.require(pairs >= 30, "only " + std::to_string(pairs) + " pairs");
  if (v.ok) v.detail = std::to_string(pairs) + " pairs";
  return v;
}

Verdict bezout_totals() {
  Verdict v;
  int pairs = 0;
  for (const auto& row : load_corpus("bezout.txt")) {
    const FieldPtr k = field(row[1]);
    const MultiPoly F = projective(k, row[2]), G = projective(k, row[3]);
    if (F.total_degree() > 5 || G.total_degree() > 5) continue;
    const BezoutReport r = bezout_check(F, G);
    v.require(r.total == F.total_degree() * G.total_degree(),
              row[0] + ": total " + std::to_string(r.total) + " vs " + std::to_string(r.expected));
    ++pairs;
  }
  v.require(pairs >= 20, "only " + std::to_string(pairs) + " pairs");
  if (v.ok) v.detail = std::to_string(pairs) + " pairs";
  return v;
}

Verdict genus_triple() {
  Verdict v;
  const std::vector<std::pair<std::string, int>> cubics = {
      {"Y^2*Z - X^3 - X*Z^2", 1}, {"Y^2*Z - X^2*(X + Z)", 0}, {"Y^2*Z - X^3", 0}};
  for (const char* spec : {"q", "p:7"}) {
    const FieldPtr k = field(spec);
    for (const auto& [text, want] : cubics) {
      const MultiPoly F = projective(k, text);
      const auto sing = find_singular_points(F);
      const GenusReport r = genus(F, sing);
      // Delta recomputed from the trees at each singular point.
      int delta = 0;
      for (const auto& p : sing) {
        for_each_node(resolve_tree(localize(F, p)).root, [&](const InfNearNode& n) { delta += n.r * (n.r - 1) / 2; });
      }
      const int formula = (3 - 1) * (3 - 2) / 2 - delta;
      const std::string tag = std::string(spec) + " " + text;
      v.require(r.genus == want, tag + ": genus " + std::to_string(r.genus));
      v.require(formula == want, tag + ": formula gives " + std::to_string(formula));
    }
  }
  if (v.ok) v.detail = "smooth 1, nodal 0, cuspidal 0 over Q and F_7";
  return v;
}

Verdict soundness() {
  Verdict v;
  int passing = 0, total = 0;
  auto examine = [&](const std::string& name, const MultiPoly& F, const MultiPoly& G, const MultiPoly& H) {
    ++total;
    if (!check_condition(F, G, H).passed) return;
    ++passing;
    const NoetherCertificate c = solve_af_bg(F, G, H);
    v.require(c.status == CertStatus::Solved, name + ": " + cert_status_name(c.status));
    if (c.status != CertStatus::Solved) return;
    MultiPoly rest = H;
    if (c.a) rest = rest - *c.a * F;
    if (c.b) rest = rest - *c.b * G;
    v.require(rest.is_zero(), name + ": H - AF - BG = " + rest.to_string());
    const int e = H.total_degree();
    v.require(!c.a || c.a->is_zero() || (c.a->is_homogeneous() && c.a->total_degree() == e - F.total_degree()),
              name + ": deg A");
    v.require(!c.b || c.b->is_zero() || (c.b->is_homogeneous() && c.b->total_degree() == e - G.total_degree()),
              name + ": deg B");
  };
  for (const auto& row : load_corpus("triples.txt")) {
    const FieldPtr k = field(row[1]);
    examine(row[0], projective(k, row[2]), projective(k, row[3]), projective(k, row[4]));
  }
  std::mt19937_64 rng(77);
  const FieldPtr k = Field::prime(7);
  for (int n = 0; n < 40; ++n) {
    const MultiPoly F = random_form(k, rng, 1 + n % 2, 4), G = random_form(k, rng, 1 + (n / 2) % 2, 4);
    if (F.is_zero() || G.is_zero() || !proj_gcd(F, G).is_constant()) continue;
    const int e = F.total_degree() + G.total_degree() - 1 + n % 2;
    const MultiPoly H = n % 3 == 0 ? random_form(k, rng, e, 6)
                                   : random_form(k, rng, e - F.total_degree(), 3) * F +
                                         random_form(k, rng, e - G.total_degree(), 3) * G;
    if (H.is_zero()) continue;
    examine("random " + std::to_string(n), F, G, H);
  }
  const MultiPoly X = projective(Q, "X"), Y = projective(Q, "Y"), Z = projective(Q, "Z");
  v.require(!check_condition(X, Y, Z).passed, "(X, Y, Z) passes the check");
  const NoetherCertificate c = solve_af_bg(X, Y, Z);
  v.require(c.status == CertStatus::NoSolution, std::string("(X, Y, Z) solver: ") + cert_status_name(c.status));
  if (v.ok) v.detail = std::to_string(passing) + " of " + std::to_string(total) + " triples pass and solve; (X,Y,Z) rejected";
  return v;
}

Verdict termination() {
  Verdict v;
  int curves = 0, reduced = 0;
  for (const auto& g : corpus_germs()) {
    if (g.f.total_degree() > 8) continue;
    const InfNearTree t = resolve_corpus_germ(g, reduced);
    v.require(t.termination == Termination::Resolved, g.name + ": " + termination_name(t.termination));
    ++curves;
  }
  for (const auto& [spec, text] : std::vector<std::pair<std::string, std::string>>{
           {"q", "x^2*y^2"}, {"q", "(y - x^2)^2"}, {"p:5", "(y^2 - x^3)^2*(y - x)"}, {"p:9", "y^2*(x + y)"}}) {
    bool rejected = false;
    try {
      resolve_tree(affine(field(spec), text));
    } catch (const Error& e) {
      rejected = e.code() == ErrorCode::NotSquarefree;
    }
    v.require(rejected, text + " not rejected");
  }
  if (v.ok) v.detail = std::to_string(curves) + " germs resolved (" + std::to_string(reduced) + " over F_7); 4 non-squarefree inputs rejected";
  return v;
}

Verdict child_bound() {
  Verdict v;
  int nodes = 0, reduced = 0;
  for (const auto& g : corpus_germs()) {
    for_each_node(resolve_corpus_germ(g, reduced).root, [&](const InfNearNode& n) {
      int sum = 0;
      for (const auto& c : n.children) sum += c.r;
      v.require(sum <= n.r, g.name + " depth " + std::to_string(n.depth));
      ++nodes;
    });
  }
  if (v.ok) v.detail = std::to_string(nodes) + " nodes";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"straightening sequence", straightening},
      {"chart identity suite", chart_identities},
      {"ordinary r-fold delta", ordinary_points},
      {"tree sum equals resultant oracle", oracle_equivalence},
      {"Bezout totals", bezout_totals},
      {"genus triple", genus_triple},
      {"AF+BG soundness", soundness},
      {"termination", termination},
      {"child multiplicity bound", child_bound},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    failures += v.ok ? 0 : 1;
    std::cout << (v.ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << v.detail << "\n";
  }
  return failures == 0 ? 0 : 1;
}
