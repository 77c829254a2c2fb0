#include <shapelemma/linalg.hpp>

#include <stdexcept>
#include <utility>

namespace shapelemma {

Rational determinant(const Matrix& m)
{
  const std::size_t n = m.size();
  if (n == 0)
    return 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (const auto& x : m[i])
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    scale *= l;
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0)
        ++p;
      if (p == n)
        return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return make_rational(sign * a[n - 1][n - 1], scale);
}

UPoly shifted_determinant(const Matrix& m, const std::string& var)
{
  // Characteristic polynomial of A = -M, det(u I - A) = det(u I + M).
  const std::size_t n = m.size();
  Matrix h(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h[i][j] = -m[i][j];
  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t k = 0; k + 2 <= n; ++k) {
    std::size_t p = k + 1;
    while (p < n && h[p][k] == 0)
      ++p;
    if (p == n)
      continue;
    if (p != k + 1) {
      std::swap(h[p], h[k + 1]);
      for (auto& row : h)
        std::swap(row[p], row[k + 1]);
    }
    for (std::size_t i = k + 2; i < n; ++i) {
      if (h[i][k] == 0)
        continue;
      const Rational f = h[i][k] / h[k + 1][k];
      for (std::size_t j = 0; j < n; ++j)
        h[i][j] -= f * h[k + 1][j];
      for (std::size_t r = 0; r < n; ++r)
        h[r][k + 1] += f * h[r][i];
    }
  }
  // p_k(u) = det of the leading k x k block of (uI - H).
  std::vector<UPoly> p{UPoly::constant(1, var)};
  const UPoly u = UPoly::monomial(1, 1, var);
  for (std::size_t k = 0; k < n; ++k) {
    UPoly next = (u - UPoly::constant(h[k][k], var)) * p[k];
    Rational prod = 1;
    for (std::size_t i = k; i-- > 0;) {
      prod *= h[i + 1][i];
      if (prod == 0)
        break;
      next -= UPoly::constant(prod * h[i][k], var) * p[i];
    }
    p.push_back(next.with_var(var));
  }
  return p.back();
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m)
{
  std::vector<std::size_t> pivots;
  if (m.empty())
    return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0)
      ++p;
    if (p == rows)
      continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j)
      m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0)
        continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (m[r][j] != 0)
          m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix m) { return rref(m).size(); }

std::optional<std::vector<Rational>> corank_one_kernel(const Matrix& m)
{
  const std::size_t cols = m.empty() ? 1 : m[0].size();
  Matrix a = m;
  const auto pivots = rref(a);
  if (pivots.size() + 1 != cols)
    return std::nullopt;
  std::size_t free = 0;
  while (free < pivots.size() && pivots[free] == free)
    ++free;
  std::vector<Rational> v(cols);
  v[free] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    v[pivots[r]] = -a[r][free];
  std::size_t last = cols;
  while (last-- > 0)
    if (v[last] != 0)
      break;
  const Rational inv = 1 / v[last];
  for (auto& x : v)
    x *= inv;
  return v;
}

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m, std::size_t cols)
{
  Matrix a = m;
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots)
    is_pivot[p] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f])
      continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -a[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

Matrix solve_full_rank(const Matrix& a, const Matrix& b)
{
  const std::size_t w = a.empty() ? 0 : a[0].size();
  const std::size_t k = b.empty() ? 0 : b[0].size();
  Matrix aug(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    aug[r] = a[r];
    aug[r].insert(aug[r].end(), b[r].begin(), b[r].end());
  }
  const auto pivots = rref(aug);
  if (pivots.size() != w || (w && pivots[w - 1] != w - 1))
    throw std::invalid_argument("system is not of full column rank or is inconsistent");
  Matrix x(w, std::vector<Rational>(k));
  for (std::size_t r = 0; r < w; ++r)
    for (std::size_t c = 0; c < k; ++c)
      x[r][c] = aug[r][w + c];
  return x;
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys, const std::string& var)
{
  const std::size_t n = xs.size();
  std::vector<Rational> c = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i)
      c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
  UPoly p = UPoly::constant(n ? c[n - 1] : Rational(0), var);
  for (std::size_t k = n - 1; k-- > 0;)
    p = p * UPoly::linear(xs[k], var) + UPoly::constant(c[k], var);
  return p.with_var(var);
}

Rational sample_point(std::size_t k)
{
  const long m = static_cast<long>((k + 1) / 2);
  return k % 2 ? Rational(m) : Rational(-m);
}

}  // namespace shapelemma
