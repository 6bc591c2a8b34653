#include "hfplumb/exact_linalg.hpp"

#include "hfplumb/errors.hpp"

#include <utility>

namespace hfplumb {

BigInt determinant(IntMatrix a) {
  const size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

std::vector<BigInt> leading_minors(const IntMatrix& a) {
  const size_t n = a.size();
  std::vector<BigInt> minors;
  minors.reserve(n);
  for (size_t k = 1; k <= n; ++k) {
    IntMatrix sub(k, std::vector<BigInt>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) sub[i][j] = a[i][j];
    minors.push_back(determinant(std::move(sub)));
  }
  return minors;
}

bool is_negative_definite(const IntMatrix& a) {
  const auto minors = leading_minors(a);
  for (size_t k = 0; k < minors.size(); ++k) {
    const BigInt& m = minors[k];
    if (k % 2 == 0) {  // odd order: minor must be negative
      if (m >= 0) return false;
    } else {
      if (m <= 0) return false;
    }
  }
  return true;
}

namespace {

RatMatrix gauss_solve_many(const IntMatrix& a, RatMatrix rhs_cols) {
  const size_t n = a.size();
  const size_t m = rhs_cols.empty() ? 0 : rhs_cols[0].size();
  RatMatrix w(n, std::vector<Rational>(n + m));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) w[i][j] = Rational(a[i][j]);
    for (size_t j = 0; j < m; ++j) w[i][n + j] = rhs_cols[i][j];
  }
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && w[p][k] == 0) ++p;
    if (p == n) throw SingularFormError("singular intersection form");
    if (p != k) std::swap(w[p], w[k]);
    const Rational piv = w[k][k];
    for (size_t j = k; j < n + m; ++j) w[k][j] /= piv;
    for (size_t i = 0; i < n; ++i) {
      if (i == k || w[i][k] == 0) continue;
      const Rational f = w[i][k];
      for (size_t j = k; j < n + m; ++j) w[i][j] -= f * w[k][j];
    }
  }
  RatMatrix out(n, std::vector<Rational>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) out[i][j] = w[i][n + j];
  return out;
}

}  // namespace

std::vector<Rational> solve_exact(const IntMatrix& a, const std::vector<Rational>& rhs) {
  const size_t n = a.size();
  RatMatrix cols(n, std::vector<Rational>(1));
  for (size_t i = 0; i < n; ++i) cols[i][0] = rhs[i];
  RatMatrix out = gauss_solve_many(a, std::move(cols));
  std::vector<Rational> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = out[i][0];
  return x;
}

RatMatrix invert_exact(const IntMatrix& a) {
  const size_t n = a.size();
  RatMatrix id(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) id[i][i] = 1;
  return gauss_solve_many(a, std::move(id));
}

}  // namespace hfplumb
