#include "planesing/exactfield/factor.hpp"

#include <algorithm>
#include <random>

namespace planesing {

namespace {

bool factor_less(const std::pair<UniPoly, int>& a, const std::pair<UniPoly, int>& b) {
  if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
  std::string sa = a.first.to_string(), sb = b.first.to_string();
  if (sa != sb) return sa < sb;
  return a.second < b.second;
}

// p-th root of a polynomial whose exponents are all multiples of p.
UniPoly pth_root(const UniPoly& c) {
  const FieldPtr& f = c.field();
  const auto p = static_cast<long>(f->characteristic());
  mpz_class e;  // a^(1/p) = a^(q/p)
  mpz_divexact_ui(e.get_mpz_t(), f->order().get_mpz_t(), static_cast<unsigned long>(p));
  std::vector<Scalar> r;
  for (long i = 0; i <= c.degree(); i += p) r.push_back(c.coeff(static_cast<int>(i)).pow(e));
  return UniPoly(f, std::move(r));
}

std::vector<std::pair<UniPoly, int>> sff_finite(const UniPoly& f) {
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly c = gcd(f, f.derivative());
  UniPoly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    UniPoly y = gcd(w, c);
    UniPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    const int p = static_cast<int>(f.field()->characteristic());
    for (auto& [g, m] : sff_finite(pth_root(c.monic()))) out.emplace_back(g, m * p);
  }
  return out;
}

std::vector<std::pair<UniPoly, int>> sff_yun(const UniPoly& f) {
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly fp = f.derivative();
  UniPoly a0 = gcd(f, fp);
  UniPoly b = f / a0;
  UniPoly c = fp / a0;
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly a = gcd(b, d);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    ++i;
  }
  return out;
}

// f monic squarefree over a finite field; returns (product of degree-d factors, d).
std::vector<std::pair<UniPoly, int>> distinct_degree(const UniPoly& f) {
  std::vector<std::pair<UniPoly, int>> out;
  const mpz_class& q = f.field()->order();
  const UniPoly t = UniPoly::variable(f.field());
  UniPoly rest = f;
  UniPoly h = t % rest;
  int d = 0;
  while (rest.degree() >= 2 * (d + 1)) {
    ++d;
    h = h.pow_mod(q, rest);
    UniPoly g = gcd(rest, h - t);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest.monic(), rest.degree());
  return out;
}

void equal_degree(const UniPoly& f, int d, std::mt19937_64& rng, std::vector<UniPoly>& out) {
  const int n = f.degree();
  if (n == d) {
    out.push_back(f.monic());
    return;
  }
  const FieldPtr& field = f.field();
  const mpz_class& q = field->order();
  const bool odd = field->characteristic() != 2;
  mpz_class qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
  for (;;) {
    std::vector<Scalar> coeffs;
    for (int i = 0; i < n; ++i) coeffs.push_back(Scalar::random(field, rng));
    UniPoly a(field, std::move(coeffs));
    if (a.degree() < 1) continue;
    UniPoly b(field);
    if (odd) {
      b = a.pow_mod((qd - 1) / 2, f) - UniPoly::constant(Scalar::one(field));
    } else {
      // absolute trace to F_2: a + a^2 + a^4 + ... over log2(q^d) terms
      const size_t k = mpz_sizeinbase(qd.get_mpz_t(), 2) - 1;
      UniPoly term = a % f;
      b = term;
      for (size_t i = 1; i < k; ++i) {
        term = (term * term) % f;
        b = b + term;
      }
    }
    UniPoly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < n) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

std::vector<UniPoly> split_squarefree_finite(const UniPoly& f, std::mt19937_64& rng) {
  std::vector<UniPoly> out;
  for (auto& [g, d] : distinct_degree(f)) equal_degree(g, d, rng, out);
  return out;
}

// ---- Q: rational roots by p-adic lifting of modular roots

std::vector<mpz_class> integer_primitive(const UniPoly& f) {
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> g;
  mpz_class content = 0;
  for (const auto& c : f.coeffs()) {
    mpq_class v = c.rational() * den;
    g.push_back(v.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), g.back().get_mpz_t());
  }
  if (content != 0)
    for (auto& v : g) v /= content;
  return g;
}

mpz_class eval_mod(const std::vector<mpz_class>& g, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  for (size_t i = g.size(); i-- > 0;) acc = (acc * x + g[i]) % m;
  if (acc < 0) acc += m;
  return acc;
}

UniPoly reduce_mod(const std::vector<mpz_class>& g, const FieldPtr& fp) {
  std::vector<Scalar> c;
  for (const auto& v : g) c.push_back(Scalar::from_mpz(fp, v));
  return UniPoly(fp, std::move(c));
}

bool rational_reconstruct(const mpz_class& a, const mpz_class& m, mpq_class& out) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = a, t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class qt = r0 / r1;
    mpz_class r2 = r0 - qt * r1;
    mpz_class t2 = t0 - qt * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

bool good_prime(const std::vector<mpz_class>& g, std::uint64_t p, UniPoly& gp) {
  if (mpz_divisible_ui_p(g.back().get_mpz_t(), static_cast<unsigned long>(p))) return false;
  gp = reduce_mod(g, Field::prime(p));
  return gcd(gp, gp.derivative()).degree() == 0;
}

// Integer polynomial, squarefree, nonzero constant term.
std::vector<mpq_class> rational_roots_squarefree(const std::vector<mpz_class>& g, std::uint64_t seed) {
  std::vector<mpq_class> out;
  if (g.size() < 2) return out;
  if (g.size() == 2) {
    mpq_class r(-g[0], g[1]);
    r.canonicalize();
    return {r};
  }
  mpz_class big = abs(g.front()) > abs(g.back()) ? mpz_class(abs(g.front())) : mpz_class(abs(g.back()));
  mpz_class bound = 2 * big * big + 1;
  std::uint64_t p = 1000003;
  UniPoly gp(Field::rationals());
  for (;; p += 2) {
    if (is_prime(p) && good_prime(g, p, gp)) break;
  }
  std::vector<mpz_class> dg;
  for (size_t i = 1; i < g.size(); ++i) dg.push_back(g[i] * static_cast<unsigned long>(i));
  const mpz_class pm(static_cast<unsigned long>(p));
  for (const Root& r : roots_in_field(gp, seed)) {
    mpz_class x(static_cast<unsigned long>(r.value.residue()));
    mpz_class m = pm;
    while (m <= bound) {
      mpz_class m2 = m * m;
      mpz_class fx = eval_mod(g, x, m2);
      mpz_class dfx = eval_mod(dg, x, m2);
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), dfx.get_mpz_t(), m2.get_mpz_t()) == 0) break;
      x = (x - fx * inv) % m2;
      if (x < 0) x += m2;
      m = m2;
    }
    mpq_class cand;
    if (!rational_reconstruct(x, m, cand)) continue;
    // exact check: sum g_i u^i v^(n-i) == 0
    const mpz_class u = cand.get_num(), v = cand.get_den();
    mpz_class acc = 0, upow = 1;
    std::vector<mpz_class> vpow(g.size(), 1);
    for (size_t i = 1; i < g.size(); ++i) vpow[i] = vpow[i - 1] * v;
    for (size_t i = 0; i < g.size(); ++i) {
      acc += g[i] * upow * vpow[g.size() - 1 - i];
      upow *= u;
    }
    if (acc == 0) out.push_back(cand);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool certify_irreducible_q(const UniPoly& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  auto g = integer_primitive(f);
  if (g.front() == 0) return false;
  UniPoly gp(Field::rationals());
  int tried = 0;
  for (std::uint64_t p = 3; tried < 40; p += 2) {
    if (!is_prime(p) || !good_prime(g, p, gp)) continue;
    ++tried;
    if (is_irreducible(gp)) return true;
  }
  return false;
}

}  // namespace

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  UniPoly m = f.monic();
  auto out = m.field()->is_finite() ? sff_finite(m) : sff_yun(m);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

Factorization uni_factor(const UniPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factorization of zero");
  Factorization result{f.lead(), {}, true};
  std::mt19937_64 rng(seed);
  const FieldPtr& field = f.field();
  for (auto& [s, mult] : squarefree_decomposition(f)) {
    if (field->is_finite()) {
      for (auto& g : split_squarefree_finite(s, rng)) result.factors.emplace_back(g, mult);
      continue;
    }
    UniPoly rest = s;
    if (rest.coeff(0).is_zero()) {
      result.factors.emplace_back(UniPoly::variable(field), mult);
      rest = rest.shift_down(1);
    }
    for (const auto& r : rational_roots_squarefree(integer_primitive(rest), seed)) {
      UniPoly lin(field, {Scalar::from_rational(field, -r), Scalar::one(field)});
      result.factors.emplace_back(lin, mult);
      rest = rest / lin;
    }
    if (rest.degree() > 0) {
      rest = rest.monic();
      if (!certify_irreducible_q(rest)) result.complete = false;
      result.factors.emplace_back(rest, mult);
    }
  }
  std::sort(result.factors.begin(), result.factors.end(), factor_less);
  return result;
}

bool is_irreducible(const UniPoly& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  if (!f.field()->is_finite()) return certify_irreducible_q(f);
  UniPoly m = f.monic();
  if (gcd(m, m.derivative()).degree() != 0) return false;
  auto dd = distinct_degree(m);
  return dd.size() == 1 && dd.front().second == m.degree();
}

std::vector<Root> roots_in_field(const UniPoly& f, std::uint64_t seed) {
  std::vector<Root> out;
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of zero");
  const FieldPtr& field = f.field();
  if (!field->is_finite()) {
    for (auto& [g, m] : uni_factor(f, seed).factors) {
      if (g.degree() == 1) out.push_back({-g.coeff(0), m});
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  const UniPoly t = UniPoly::variable(field);
  for (auto& [s, mult] : squarefree_decomposition(f)) {
    // linear part of s: gcd(s, t^q - t)
    UniPoly lin = gcd(s, t.pow_mod(field->order(), s) - t);
    if (lin.degree() <= 0) continue;
    std::vector<UniPoly> parts;
    equal_degree(lin, 1, rng, parts);
    for (auto& g : parts) out.push_back({-g.monic().coeff(0), mult});
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return a.value.to_string() < b.value.to_string(); });
  return out;
}

std::vector<Root> all_roots(const UniPoly& f, std::uint64_t seed) {
  Factorization fac = uni_factor(f, seed);
  std::vector<Root> out;
  const FieldPtr& field = f.field();
  for (auto& [g, m] : fac.factors) {
    if (g.degree() == 1) {
      out.push_back({-g.coeff(0), m});
      continue;
    }
    if (!field->is_finite())
      throw Error(ErrorCode::NonRationalPoint,
                  "polynomial " + f.to_string() + " has the non-rational factor " + g.to_string() +
                      " over Q; retry over a finite field (--field p:<prime>)");
    FieldPtr ext = Field::extension_unchecked(field, g.coeffs());
    Scalar z = Scalar::generator(ext);
    for (int i = 0; i < g.degree(); ++i) {
      out.push_back({z, m});
      z = z.pow(field->order());
    }
  }
  return out;
}

FieldPtr extend_field(const FieldPtr& base, const UniPoly& minpoly) {
  if (!base->is_finite())
    throw Error(ErrorCode::UnsupportedExtension, "extensions of Q are not supported (number fields are out of scope)");
  UniPoly m = minpoly.embed(base);
  if (m.degree() < 2) throw Error(ErrorCode::InvalidArgument, "minimal polynomial must have degree >= 2");
  if (!m.lead().is_one()) throw Error(ErrorCode::InvalidArgument, "minimal polynomial must be monic");
  if (!is_irreducible(m)) throw Error(ErrorCode::ReducibleMinPoly, m.to_string() + " is reducible over " + base->to_string());
  return Field::extension_unchecked(base, m.coeffs());
}

FieldPtr find_extension(const FieldPtr& base, int degree) {
  if (!base->is_finite()) throw Error(ErrorCode::UnsupportedExtension, "extensions of Q are not supported");
  const std::uint64_t q = base->order().fits_ulong_p() ? base->order().get_ui() : ~0ULL;
  for (std::uint64_t idx = 1;; ++idx) {
    std::vector<Scalar> c;
    std::uint64_t rest = idx;
    for (int i = 0; i < degree; ++i) {
      c.push_back(Scalar::enumerate(base, rest % q));
      rest /= q;
    }
    c.push_back(Scalar::one(base));
    UniPoly m(base, c);
    if (is_irreducible(m)) return Field::extension_unchecked(base, m.coeffs());
  }
}

}  // namespace planesing
