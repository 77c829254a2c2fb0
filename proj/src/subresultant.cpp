#include <shapelemma/subresultant.hpp>

#include <shapelemma/errors.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace shapelemma {

MacaulayMatrix critical_matrix(const PolySystem& s)
{
  if (s.rho == 0)
    throw Error(ErrorKind::CriticalDegreeZero, "critical degree is 0; by convention s_(0,...,0) = 1");
  return macaulay_matrix(s, s.rho);
}

const UPoly& SubresultantData::at(const Monomial& alpha) const
{
  for (std::size_t k = 0; k < monomials.size(); ++k)
    if (monomials[k] == alpha)
      return s_alpha[k];
  throw Error(ErrorKind::WrongDegree, "no subresultant for " + alpha.to_string());
}

Monomial alpha_index(const PolySystem& s, std::size_t i)
{
  Monomial m(s.nvars());
  if (s.rho == 0)
    return m;
  m.set(0, static_cast<std::uint32_t>(s.rho - 1));
  m.set(i, m[i] + 1);
  return m;
}

namespace {

// (-1)^(r+c) det(A without column c) for every column c of an
// (N-1) x N matrix; all zero when A is rank deficient. They form a kernel
// vector, so one determinant fixes the scale.
std::vector<Rational> signed_minors(const Matrix& m, std::size_t r, std::size_t N)
{
  std::vector<Rational> out(N);
  const auto kernel = corank_one_kernel(m);
  if (!kernel)
    return out;
  std::size_t c = 0;
  while ((*kernel)[c] == 0)
    ++c;
  Matrix minor(m.size(), std::vector<Rational>(N - 1));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0, jj = 0; j < N; ++j)
      if (j != c)
        minor[i][jj++] = m[i][j];
  Rational sc = determinant(minor);
  if ((r + c) % 2)
    sc = -sc;
  const Rational scale = sc / (*kernel)[c];
  for (std::size_t j = 0; j < N; ++j)
    out[j] = (*kernel)[j] * scale;
  return out;
}

Rational minor_det(const Matrix& m) { return m.empty() ? Rational(1) : determinant(m); }

// Values at t of s_alpha for f_i^h + u x_{i-1}^{d_i}, sent to u = 0. The
// perturbation adds u where each row meets its own monomial, which puts it
// on the diagonal of M'; det(M' + uI) is monic of degree m in u and the
// quotient has degree at most N - 1 - m.
std::vector<Rational> perturbed_values(const MacaulayMatrix& mm, const Rational& t, std::size_t r)
{
  const std::size_t N = mm.columns.size();
  const std::size_t m = mm.minor.size();
  const Matrix M = mm.evaluate(t);
  const Matrix Mp = mm.evaluate_minor(t);
  std::vector<Rational> us;
  std::vector<std::vector<Rational>> vals(N);
  for (std::size_t j = 1; us.size() < N - m; ++j) {
    const Rational u = sample_point(j);
    Matrix a = M, b = Mp;
    for (std::size_t i = 0; i < a.size(); ++i)
      a[i][mm.rows[i].column] += u;
    for (std::size_t i = 0; i < b.size(); ++i)
      b[i][i] += u;
    const Rational e = minor_det(b);
    if (e == 0)
      continue;
    us.push_back(u);
    const auto d = signed_minors(a, r, N);
    for (std::size_t c = 0; c < N; ++c)
      vals[c].push_back(d[c] / e);
  }
  std::vector<Rational> out;
  for (const auto& v : vals)
    out.push_back(interpolate(us, v, "u").coeff(0));
  return out;
}

// (signed maximal minor) / det M', both interpolated over xn; nullopt
// when det M' vanishes identically.
std::optional<std::vector<UPoly>> quotient_formula(const MacaulayMatrix& mm, const std::string& var)
{
  const std::size_t N = mm.columns.size();
  const std::size_t r = mm.reduced.front();
  const int bound = mm.row_degree_sum();
  std::vector<Rational> xs, es;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(mm.minor_degree_sum()); ++k) {
    xs.push_back(sample_point(k));
    es.push_back(minor_det(mm.evaluate_minor(xs.back())));
  }
  const UPoly E = interpolate(xs, es, var);
  if (E.is_zero())
    return std::nullopt;
  xs.clear();
  std::vector<std::vector<Rational>> ys(N);
  for (std::size_t k = 0; k <= static_cast<std::size_t>(bound); ++k) {
    xs.push_back(sample_point(k));
    const auto d = signed_minors(mm.evaluate(xs.back()), r, N);
    for (std::size_t j = 0; j < N; ++j)
      ys[j].push_back(d[j]);
  }
  std::vector<UPoly> out;
  for (std::size_t j = 0; j < N; ++j) {
    auto [q, rem] = divmod(interpolate(xs, ys[j], var), E);
    if (!rem.is_zero())
      throw std::logic_error("maximal minor not divisible by det M'");
    out.push_back(q.with_var(var));
  }
  return out;
}

std::vector<UPoly> perturbed_formula(const MacaulayMatrix& mm, const std::string& var)
{
  const std::size_t N = mm.columns.size();
  const std::size_t r = mm.reduced.front();
  std::vector<Rational> xs;
  std::vector<std::vector<Rational>> ys(N);
  for (std::size_t k = 0; k <= static_cast<std::size_t>(mm.row_degree_sum()); ++k) {
    xs.push_back(sample_point(k));
    const auto v = perturbed_values(mm, xs.back(), r);
    for (std::size_t j = 0; j < N; ++j)
      ys[j].push_back(v[j]);
  }
  std::vector<UPoly> out;
  for (std::size_t j = 0; j < N; ++j)
    out.push_back(interpolate(xs, ys[j], var));
  return out;
}

SubresultantData subresultants(const PolySystem& s, bool force_perturbed)
{
  SubresultantData out;
  out.rho = s.rho;
  const std::string var = var_name(s.hidden());
  if (s.rho == 0) {
    out.monomials.push_back(Monomial(s.nvars()));
    out.s_alpha.push_back(UPoly::constant(1, var));
  } else {
    const MacaulayMatrix mm = critical_matrix(s);
    out.monomials = mm.columns;
    const std::size_t n = s.n();
    const auto fh = s.homogenized();
    std::vector<std::size_t> perm(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
      perm[k] = k;
    // A permutation of x0..x_{n-1} changes the s_alpha only by a global
    // sign, which the normalization below removes.
    do {
      if (force_perturbed)
        break;
      std::vector<MPoly> g;
      for (const auto& f : fh)
        g.push_back(f.remap(n + 1, perm));
      const MacaulayMatrix pm = macaulay_matrix(g, s.degrees, s.rho);
      if (auto vals = quotient_formula(pm, var)) {
        for (const auto& alpha : mm.columns) {
          Monomial image(alpha.size());
          for (std::size_t k = 0; k <= n; ++k)
            image.set(perm[k], alpha[k]);
          std::size_t j = 0;
          while (pm.columns[j] != image)
            ++j;
          out.s_alpha.push_back((*vals)[j]);
        }
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n)));
    if (out.s_alpha.empty()) {
      out.perturbed = true;
      out.s_alpha = perturbed_formula(mm, var);
    }
  }

  for (std::size_t i = 0; i < s.n(); ++i)
    out.s.push_back(s.rho == 0 ? (i == 0 ? UPoly::constant(1, var) : UPoly(std::vector<Rational>{}, var))
                               : out.at(alpha_index(s, i)));
  for (const auto& si : out.s) {
    if (si.is_zero())
      continue;
    if (si.leading_coeff() < 0) {
      out.flipped = true;
      for (auto& x : out.s_alpha)
        x = -x;
      for (auto& x : out.s)
        x = -x;
    }
    break;
  }
  return out;
}

}  // namespace

SubresultantData scalar_subresultants(const PolySystem& s)
{
  return subresultants(s, false);
}

SubresultantData perturbed_subresultants(const PolySystem& s)
{
  return subresultants(s, true);
}

UPoly scalar_subresultant(const PolySystem& s, const Monomial& alpha)
{
  if (static_cast<int>(alpha.degree_in(0, s.n())) != s.rho || alpha.degree() != alpha.degree_in(0, s.n()))
    throw Error(ErrorKind::WrongDegree, "monomial " + alpha.to_string() + " is not of degree " +
                                            std::to_string(s.rho) + " in x0..x" + std::to_string(s.n() - 1));
  auto data = scalar_subresultants(s);
  if (s.rho == 0)
    return data.s_alpha.front();
  return data.at(alpha);
}

SubresultantData first_subresultant_polys(const PolySystem& s)
{
  if (s.rho == 0)
    throw Error(ErrorKind::CriticalDegreeZero, "critical degree is 0; by convention s_(0,...,0) = 1");
  SubresultantData d = scalar_subresultants(s);
  const std::size_t nv = s.nvars();
  const MPoly s0 = MPoly::from_upoly(nv, s.hidden(), d.s[0]);
  for (std::size_t i = 1; i < s.n(); ++i)
    d.p.push_back(s0 * MPoly::variable(nv, i) - MPoly::from_upoly(nv, s.hidden(), d.s[i]));
  return d;
}

}  // namespace shapelemma
