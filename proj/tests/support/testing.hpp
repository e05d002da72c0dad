#pragma once

// Shared helpers for the unit and acceptance tests: corpus loading, random
// inputs, and oracles that recompute quantities without the library's
// algorithms.

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "planesing/cli/cli.hpp"
#include "planesing/polyring/parse.hpp"

#ifndef PLANESING_CORPUS_DIR
#error "PLANESING_CORPUS_DIR must be defined"
#endif

namespace testing {

using namespace planesing;

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Rows of a '|'-separated corpus file, comments and blank lines skipped.
inline std::vector<std::vector<std::string>> load_corpus(const std::string& name) {
  std::ifstream in(std::string(PLANESING_CORPUS_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing corpus file " + name);
  std::vector<std::vector<std::string>> rows;
  for (std::string line; std::getline(in, line);) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, '|');) cols.push_back(trim(c));
    rows.push_back(cols);
  }
  return rows;
}

inline FieldPtr field(const std::string& spec) { return cli::parse_field(spec); }

inline MultiPoly affine(const FieldPtr& k, const std::string& s) { return as_affine(parse_poly(s, k, VarSet::Affine)); }
inline MultiPoly projective(const FieldPtr& k, const std::string& s) {
  return parse_poly(s, k, VarSet::Projective);
}

inline std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  if (s == "-") return out;
  std::stringstream ss(s);
  for (std::string c; std::getline(ss, c, ',');) out.push_back(std::stoi(c));
  return out;
}

// Nonzero scalar drawn from small integers (Q) or uniformly (finite fields).
inline Scalar random_scalar(const FieldPtr& k, std::mt19937_64& rng, bool nonzero = false) {
  for (;;) {
    Scalar s = k->is_finite() ? Scalar::random(k, rng)
                              : Scalar::from_int(k, std::uniform_int_distribution<long>(-5, 5)(rng));
    if (!nonzero || !s.is_zero()) return s;
  }
}

// Random two-variable polynomial (affine or chart) with terms of total
// degree in [min_deg, max_deg].
inline MultiPoly random_poly(const FieldPtr& k, std::mt19937_64& rng, VarSet v, int min_deg, int max_deg,
                             int terms) {
  MultiPoly p(k, v);
  std::uniform_int_distribution<int> deg(min_deg, max_deg);
  for (int i = 0; i < terms; ++i) {
    const int d = deg(rng);
    const int a = std::uniform_int_distribution<int>(0, d)(rng);
    p.add_term({a, d - a, 0}, random_scalar(k, rng));
  }
  return p;
}

// Random homogeneous polynomial of degree d in X, Y, Z.
inline MultiPoly random_form(const FieldPtr& k, std::mt19937_64& rng, int d, int terms) {
  MultiPoly p(k, VarSet::Projective);
  for (int i = 0; i < terms; ++i) {
    const int a = std::uniform_int_distribution<int>(0, d)(rng);
    const int b = std::uniform_int_distribution<int>(0, d - a)(rng);
    p.add_term({a, b, d - a - b}, random_scalar(k, rng));
  }
  return p;
}

// ---- oracles ---------------------------------------------------------

// F(x, x t) by moving each monomial x^i y^j to x^(i+j) t^j.
inline MultiPoly oracle_chart_substitution(const MultiPoly& f) {
  MultiPoly out(f.field(), VarSet::Chart);
  for (const auto& [e, c] : f.terms()) out.add_term({e[0] + e[1], e[1], 0}, c);
  return out;
}

inline MultiPoly chart_x_power(const FieldPtr& k, int n) {
  return MultiPoly::monomial(Scalar::one(k), VarSet::Chart, {n, 0, 0});
}

// d/d(var) by the power rule, term by term.
inline MultiPoly oracle_derivative(const MultiPoly& f, int var) {
  MultiPoly out(f.field(), f.varset());
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    out.add_term(d, c * Scalar::from_int(f.field(), e[var]));
  }
  return out;
}

// Order in t of F(x(t), y(t)); -1 when the composition vanishes.
inline int oracle_param_order(const MultiPoly& f, const UniPoly& xt, const UniPoly& yt) {
  const FieldPtr k = common_field(f.field(), xt.field());
  UniPoly sum(k);
  for (const auto& [e, c] : f.terms())
    sum = sum + xt.embed(k).pow(e[0]) * yt.embed(k).pow(e[1]) * c.embed(k);
  return sum.low_order();
}

// A branch of a curve germ with an explicit parametrization.
struct Branch {
  MultiPoly eq;
  UniPoly x, y;
};

// Monomial branches y^a = x^b with gcd(a, b) = 1: (t^a, t^b).
inline Branch monomial_branch(const FieldPtr& k, int a, int b) {
  MultiPoly eq = MultiPoly::monomial(Scalar::one(k), VarSet::Affine, {0, a, 0}) -
                 MultiPoly::monomial(Scalar::one(k), VarSet::Affine, {b, 0, 0});
  return {eq, UniPoly::monomial(Scalar::one(k), a), UniPoly::monomial(Scalar::one(k), b)};
}

// Graph branch y = phi(x): (t, phi(t)).
inline Branch graph_branch(const UniPoly& phi) {
  const FieldPtr k = phi.field();
  MultiPoly eq = MultiPoly::variable(k, VarSet::Affine, 1) - MultiPoly::from_univariate(phi, VarSet::Affine, 0);
  return {eq, UniPoly::variable(k), phi};
}

// Graph branch x = psi(y): (psi(t), t).
inline Branch cograph_branch(const UniPoly& psi) {
  const FieldPtr k = psi.field();
  MultiPoly eq = MultiPoly::variable(k, VarSet::Affine, 0) - MultiPoly::from_univariate(psi, VarSet::Affine, 1);
  return {eq, psi, UniPoly::variable(k)};
}

// delta of y^a - x^b in characteristic 0 (or p not dividing a b):
// ((a-1)(b-1) + gcd(a,b) - 1) / 2.
inline int oracle_delta_quasi_homogeneous(int a, int b) { return ((a - 1) * (b - 1) + std::gcd(a, b) - 1) / 2; }

// Every element of a finite field, by enumeration index.
inline std::vector<Scalar> all_elements(const FieldPtr& k) {
  std::vector<Scalar> out;
  for (std::uint64_t i = 0; i < k->order().get_ui(); ++i) out.push_back(Scalar::enumerate(k, i));
  return out;
}

// Roots of u among the field's elements by exhaustive evaluation.
inline std::vector<Scalar> brute_force_roots(const UniPoly& u) {
  std::vector<Scalar> out;
  for (const auto& a : all_elements(u.field())) {
    if (u.eval(a).is_zero()) out.push_back(a);
  }
  return out;
}

}  // namespace testing
