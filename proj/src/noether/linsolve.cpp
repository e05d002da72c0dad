#include "planesing/noether/linsolve.hpp"

namespace planesing {

namespace {

using Matrix = std::vector<std::vector<Scalar>>;

// Row echelon form of the augmented matrix over Q, computed on integers.
Matrix bareiss_echelon(const FieldPtr& k, const Matrix& aug, std::vector<size_t>& pivots) {
  const size_t m = aug.size(), w = m ? aug[0].size() : 0;
  std::vector<std::vector<mpz_class>> z(m, std::vector<mpz_class>(w));
  for (size_t i = 0; i < m; ++i) {
    mpz_class den = 1;
    for (const auto& s : aug[i]) den = lcm(den, s.rational().get_den());
    for (size_t j = 0; j < w; ++j) z[i][j] = mpz_class(aug[i][j].rational() * den);
  }
  mpz_class prev = 1;
  size_t r = 0;
  for (size_t c = 0; c + 1 < w && r < m; ++c) {
    size_t p = r;
    while (p < m && z[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(z[p], z[r]);
    for (size_t i = r + 1; i < m; ++i) {
      for (size_t j = c + 1; j < w; ++j) {
        mpz_class v = z[r][c] * z[i][j] - z[i][c] * z[r][j];
        if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t()))
          throw Error(ErrorCode::InvalidArgument, "fraction-free elimination lost exactness");
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        z[i][j] = v;
      }
      z[i][c] = 0;
    }
    prev = z[r][c];
    pivots.push_back(c);
    ++r;
  }
  Matrix out(m, std::vector<Scalar>(w, Scalar::zero(k)));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < w; ++j) out[i][j] = Scalar::from_mpz(k, z[i][j]);
  }
  return out;
}

Matrix plain_echelon(const Matrix& aug, std::vector<size_t>& pivots) {
  Matrix a = aug;
  const size_t m = a.size(), w = m ? a[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c + 1 < w && r < m; ++c) {
    size_t p = r;
    while (p < m && a[p][c].is_zero()) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    const Scalar inv = a[r][c].inverse();
    for (size_t j = c; j < w; ++j) a[r][j] = a[r][j] * inv;
    for (size_t i = r + 1; i < m; ++i) {
      if (a[i][c].is_zero()) continue;
      const Scalar f = a[i][c];
      for (size_t j = c; j < w; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return a;
}

// Solve the echelon system for the pivot unknowns given values of the
// free ones; `rhs` selects whether the augmented column is used.
std::vector<Scalar> back_substitute(const FieldPtr& k, const Matrix& e, const std::vector<size_t>& pivots,
                                    std::vector<Scalar> x, bool rhs) {
  const size_t n = x.size();
  for (size_t row = pivots.size(); row-- > 0;) {
    const size_t pc = pivots[row];
    Scalar acc = rhs ? e[row][n] : Scalar::zero(k);
    for (size_t j = pc + 1; j < n; ++j) {
      if (!e[row][j].is_zero() && !x[j].is_zero()) acc = acc - e[row][j] * x[j];
    }
    x[pc] = acc / e[row][pc];
  }
  return x;
}

}  // namespace

LinearSolution solve_linear(const FieldPtr& k, const Matrix& a, const std::vector<Scalar>& b) {
  const size_t m = a.size();
  const size_t n = m ? a[0].size() : 0;
  if (b.size() != m) throw Error(ErrorCode::InvalidArgument, "right-hand side has the wrong length");
  LinearSolution sol;
  Matrix aug(m);
  for (size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) throw Error(ErrorCode::InvalidArgument, "ragged coefficient matrix");
    aug[i] = a[i];
    aug[i].push_back(b[i]);
  }
  std::vector<size_t> pivots;
  const Matrix e = k->is_finite() ? plain_echelon(aug, pivots) : bareiss_echelon(k, aug, pivots);
  sol.rank = static_cast<int>(pivots.size());
  for (size_t i = pivots.size(); i < m; ++i) {
    if (!e[i][n].is_zero()) return sol;
  }
  sol.consistent = true;
  sol.particular = back_substitute(k, e, pivots, std::vector<Scalar>(n, Scalar::zero(k)), true);
  std::vector<bool> is_pivot(n, false);
  for (size_t p : pivots) is_pivot[p] = true;
  for (size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> x(n, Scalar::zero(k));
    x[f] = Scalar::one(k);
    sol.kernel.push_back(back_substitute(k, e, pivots, std::move(x), false));
  }
  return sol;
}

}  // namespace planesing
