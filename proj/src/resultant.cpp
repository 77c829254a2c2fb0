#include <shapelemma/resultant.hpp>

#include <shapelemma/errors.hpp>

#include <algorithm>
#include <map>
#include <optional>

namespace shapelemma {

namespace {

std::vector<std::uint32_t> key_of(const Monomial& m, std::size_t n)
{
  std::vector<std::uint32_t> k(n);
  for (std::size_t i = 0; i < n; ++i)
    k[i] = m[i];
  return k;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nslots, std::size_t n, int degree)
{
  std::vector<Monomial> out;
  Monomial cur(nslots);
  auto rec = [&](auto&& self, std::size_t slot, int rem) -> void {
    if (slot + 1 == n) {
      cur.set(slot, static_cast<std::uint32_t>(rem));
      out.push_back(cur);
      return;
    }
    for (int a = rem; a >= 0; --a) {
      cur.set(slot, static_cast<std::uint32_t>(a));
      self(self, slot + 1, rem - a);
    }
    cur.set(slot, 0);
  };
  if (n == 0)
    return out;
  rec(rec, 0, degree);
  return out;
}

MacaulayMatrix macaulay_matrix(const std::vector<MPoly>& fh, const std::vector<int>& degrees, int degree)
{
  const std::size_t n = fh.size();
  const std::size_t nv = n + 1;
  MacaulayMatrix mm;
  mm.degree = degree;
  mm.hidden = n;
  mm.columns = monomials_of_degree(nv, n, degree);
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t c = 0; c < mm.columns.size(); ++c)
    index[key_of(mm.columns[c], n)] = c;
  const std::string var = var_name(n);

  for (std::size_t c = 0; c < mm.columns.size(); ++c) {
    const Monomial& g = mm.columns[c];
    std::size_t divisible = 0;
    std::size_t first = n;
    for (std::size_t p = 0; p < n; ++p)
      if (g[p] >= static_cast<std::uint32_t>(degrees[p])) {
        ++divisible;
        first = std::min(first, p);
      }
    if (first == n) {
      mm.reduced.push_back(c);
      continue;
    }
    Monomial shift = g;
    shift.set(first, g[first] - static_cast<std::uint32_t>(degrees[first]));
    std::vector<std::vector<Rational>> row(mm.columns.size());
    for (const auto& t : fh[first].terms()) {
      const Monomial m = t.mono * shift;
      const std::size_t col = index.at(key_of(m, n));
      auto& coeffs = row[col];
      const auto e = m[n];
      if (coeffs.size() <= e)
        coeffs.resize(e + 1);
      coeffs[e] += t.coeff;
    }
    std::vector<UPoly> entries;
    entries.reserve(row.size());
    for (auto& r : row)
      entries.emplace_back(std::move(r), var);
    if (divisible >= 2)
      mm.minor.push_back(mm.rows.size());
    mm.rows.push_back({c, first});
    mm.entries.push_back(std::move(entries));
  }
  return mm;
}

MacaulayMatrix macaulay_matrix(const PolySystem& s, int degree)
{
  return macaulay_matrix(s.homogenized(), s.degrees, degree);
}

Matrix MacaulayMatrix::evaluate(const Rational& t) const
{
  Matrix m(rows.size(), std::vector<Rational>(columns.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < columns.size(); ++c)
      if (!entries[r][c].is_zero())
        m[r][c] = entries[r][c].eval(t);
  return m;
}

Matrix MacaulayMatrix::evaluate_minor(const Rational& t) const
{
  Matrix m(minor.size(), std::vector<Rational>(minor.size()));
  for (std::size_t i = 0; i < minor.size(); ++i)
    for (std::size_t j = 0; j < minor.size(); ++j) {
      const UPoly& e = entries[minor[i]][rows[minor[j]].column];
      if (!e.is_zero())
        m[i][j] = e.eval(t);
    }
  return m;
}

int MacaulayMatrix::row_degree_sum() const
{
  int sum = 0;
  for (const auto& row : entries) {
    int d = 0;
    for (const auto& e : row)
      d = std::max(d, e.degree());
    sum += d;
  }
  return sum;
}

int MacaulayMatrix::minor_degree_sum() const
{
  int sum = 0;
  for (std::size_t i : minor) {
    int d = 0;
    for (std::size_t j : minor)
      d = std::max(d, entries[i][rows[j].column].degree());
    sum += d;
  }
  return sum;
}

int resultant_degree_bound(const PolySystem& s)
{
  int bound = 0;
  for (std::size_t i = 0; i < s.n(); ++i) {
    int prod = std::max(s.polys[i].degree_in(s.hidden()), 0);
    for (std::size_t j = 0; j < s.n(); ++j)
      if (j != i)
        prod *= s.degrees[j];
    bound += prod;
  }
  return bound;
}

HiddenVarResultant sylvester_resultant(const MPoly& f1, const MPoly& f2)
{
  if (f1.nvars() != 3 || f2.nvars() != 3)
    throw Error(ErrorKind::WrongArity, "the Sylvester resultant needs a system in x1, x2");
  const auto a = f1.coefficients_in(1);
  const auto b = f2.coefficients_in(1);
  const int d1 = static_cast<int>(a.size()) - 1;
  const int d2 = static_cast<int>(b.size()) - 1;
  if (d1 < 1 || d2 < 1)
    throw Error(ErrorKind::DegenerateDegree, "both polynomials need positive degree in x1");
  std::vector<UPoly> ua, ub;
  for (const auto& c : a)
    ua.push_back(c.to_upoly(2));
  for (const auto& c : b)
    ub.push_back(c.to_upoly(2));

  HiddenVarResultant out;
  out.method = "sylvester";
  out.degree_bound = std::max(f1.degree_in(2), 0) * d2 + std::max(f2.degree_in(2), 0) * d1;
  const std::size_t size = static_cast<std::size_t>(d1 + d2);
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(out.degree_bound); ++k) {
    const Rational t = sample_point(k);
    Matrix m(size, std::vector<Rational>(size));
    for (int r = 0; r < d2; ++r)
      for (int j = 0; j <= d1; ++j)
        m[r][r + j] = ua[d1 - j].eval(t);
    for (int r = 0; r < d1; ++r)
      for (int j = 0; j <= d2; ++j)
        m[d2 + r][r + j] = ub[d2 - j].eval(t);
    xs.push_back(t);
    ys.push_back(determinant(m));
  }
  out.poly = interpolate(xs, ys, "x2");
  return out;
}

HiddenVarResultant sylvester_resultant(const PolySystem& s)
{
  if (s.n() != 2)
    throw Error(ErrorKind::WrongArity, "the Sylvester resultant needs n = 2");
  return sylvester_resultant(s.polys[0], s.polys[1]);
}

namespace {

// det M / det M' by sampling; nullopt when det M' vanishes identically.
std::optional<UPoly> quotient_formula(const MacaulayMatrix& mm, std::size_t need, const std::string& var)
{
  const int minor_bound = mm.minor_degree_sum();
  std::vector<Rational> xs, ys;
  int failures = 0;
  for (std::size_t k = 0; xs.size() < need; ++k) {
    const Rational t = sample_point(k);
    const Rational dm = determinant(mm.evaluate_minor(t));
    if (dm == 0) {
      if (++failures > minor_bound)
        return std::nullopt;
      continue;
    }
    xs.push_back(t);
    ys.push_back(determinant(mm.evaluate(t)) / dm);
  }
  return interpolate(xs, ys, var);
}

// Res(f_i^h + u x_{i-1}^{d_i}) is a polynomial in u of degree at most
// u_degree whose value at u = 0 is the resultant. The perturbation adds u
// on the diagonal of M and M', and det(M' + uI) is monic in u, so all but
// finitely many u give an exact quotient.
UPoly perturbed_formula(const MacaulayMatrix& mm, std::size_t need, int u_degree, const std::string& var)
{
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k < need; ++k) {
    const Rational t = sample_point(k);
    const Matrix M = mm.evaluate(t);
    const Matrix Mp = mm.evaluate_minor(t);
    std::vector<Rational> us, vals;
    for (std::size_t j = 1; us.size() < static_cast<std::size_t>(u_degree) + 1; ++j) {
      const Rational u = sample_point(j);
      Matrix a = M, b = Mp;
      for (std::size_t i = 0; i < a.size(); ++i)
        a[i][i] += u;
      for (std::size_t i = 0; i < b.size(); ++i)
        b[i][i] += u;
      const Rational q = determinant(b);
      if (q == 0)
        continue;
      us.push_back(u);
      vals.push_back(determinant(a) / q);
    }
    xs.push_back(t);
    ys.push_back(interpolate(us, vals, "u").coeff(0));
  }
  return interpolate(xs, ys, var);
}

int perturbation_degree(const PolySystem& s)
{
  int sum = 0;
  for (std::size_t i = 0; i < s.n(); ++i) {
    int prod = 1;
    for (std::size_t j = 0; j < s.n(); ++j)
      if (j != i)
        prod *= s.degrees[j];
    sum += prod;
  }
  return sum;
}

int permutation_sign(const std::vector<std::size_t>& perm)
{
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j])
        sign = -sign;
  return sign;
}

}  // namespace

HiddenVarResultant macaulay_resultant(const PolySystem& s)
{
  HiddenVarResultant out;
  out.degree_bound = resultant_degree_bound(s);
  const std::size_t need = static_cast<std::size_t>(out.degree_bound) + 1;
  const std::string var = var_name(s.hidden());
  const std::size_t n = s.n();
  const auto fh = s.homogenized();

  std::vector<std::size_t> perm(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    perm[k] = k;
  long prod = 1;
  for (int d : s.degrees)
    prod *= d;
  // Res(F o P) = det(P)^(d_1 ... d_n) Res(F) for a permutation matrix P.
  do {
    std::vector<MPoly> g;
    for (const auto& f : fh)
      g.push_back(f.remap(n + 1, perm));
    const MacaulayMatrix mm = macaulay_matrix(g, s.degrees, s.rho + 1);
    if (auto r = quotient_formula(mm, need, var)) {
      const bool identity = std::is_sorted(perm.begin(), perm.end());
      out.method = identity ? "macaulay" : "macaulay-permuted";
      const int sign = prod % 2 ? permutation_sign(perm) : 1;
      out.poly = *r * Rational(sign);
      return out;
    }
  } while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n)));

  out.method = "macaulay-perturbed";
  out.poly = perturbed_formula(macaulay_matrix(s, s.rho + 1), need, perturbation_degree(s), var);
  return out;
}

HiddenVarResultant macaulay_perturbed_resultant(const PolySystem& s)
{
  HiddenVarResultant out;
  out.degree_bound = resultant_degree_bound(s);
  out.method = "macaulay-perturbed";
  out.poly = perturbed_formula(macaulay_matrix(s, s.rho + 1), static_cast<std::size_t>(out.degree_bound) + 1,
                               perturbation_degree(s), var_name(s.hidden()));
  return out;
}

HiddenVarResultant hidden_variable_resultant(const PolySystem& s)
{
  if (s.n() == 2)
    return sylvester_resultant(s);
  return macaulay_resultant(s);
}

std::string factored_string(const UPoly& p)
{
  if (p.is_zero())
    return "0";
  if (p.degree() == 0)
    return to_string(p.leading_coeff());
  const auto factors = split_factors(p);
  std::string s;
  const Rational c = p.leading_coeff();
  if (c == -1)
    s = "-";
  else if (c != 1)
    s = to_string(c) + "*";
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k)
      s += "*";
    const std::string body = factors[k].q.to_string();
    const bool single = factors[k].q.coeffs().size() == 2 && factors[k].q.coeff(0) == 0;
    s += single ? body : "(" + body + ")";
    if (factors[k].exponent > 1)
      s += "^" + std::to_string(factors[k].exponent);
  }
  return s;
}

}  // namespace shapelemma
