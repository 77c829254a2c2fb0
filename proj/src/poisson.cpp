#include <shapelemma/errors.hpp>
#include <shapelemma/poisson.hpp>
#include <shapelemma/resultant.hpp>

#include <algorithm>
#include <optional>

namespace shapelemma {

namespace {

std::uint32_t slot_range(std::size_t first, std::size_t last)
{
  std::uint32_t m = 0;
  for (std::size_t k = first; k <= last; ++k)
    m |= 1u << k;
  return m;
}

std::size_t dim_of(const Ideal& I)
{
  auto d = I.dimension();
  if (!d)
    throw Error(ErrorKind::NotZeroDimensional, "chart ideal is not zero-dimensional");
  return *d;
}

Matrix mat_mul(const Matrix& a, const Matrix& b)
{
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
  Matrix c(n, std::vector<Rational>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0)
        continue;
      for (std::size_t j = 0; j < m; ++j)
        if (b[k][j] != 0)
          c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Matrix columns_of(const std::vector<std::vector<Rational>>& vs, std::size_t rows)
{
  Matrix m(rows, std::vector<Rational>(vs.size()));
  for (std::size_t k = 0; k < vs.size(); ++k)
    for (std::size_t r = 0; r < rows; ++r)
      m[r][k] = vs[k][r];
  return m;
}

// Basis of the generalized kernel of b on the b-invariant column span of v,
// the stable value of ker C^j. Once ker C^j = ker C^{j+1} the chain is
// fixed, so its value at a power N >= j agrees with N + 1.
Matrix generalized_kernel(const Matrix& b, const Matrix& v)
{
  const std::size_t w = v.empty() ? 0 : v[0].size();
  if (w == 0)
    return v;
  const Matrix c = solve_full_rank(v, mat_mul(b, v));
  std::vector<std::vector<Rational>> k;
  for (std::size_t j = 0;; ++j) {
    if (j > w)
      throw Error(ErrorKind::StabilizationFailure, "kernel chain still growing past power " + std::to_string(w));
    // v with C v in the span of k
    Matrix a = c;
    for (std::size_t r = 0; r < w; ++r)
      for (const auto& x : k)
        a[r].push_back(-x[r]);
    std::vector<std::vector<Rational>> next;
    for (auto& x : kernel_basis(a, w + k.size())) {
      x.resize(w);
      next.push_back(std::move(x));
    }
    const bool done = next.size() == k.size();
    k = std::move(next);
    if (done || k.size() == w)
      break;
  }
  return mat_mul(v, columns_of(k, w));
}

Matrix identity(std::size_t n)
{
  Matrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

// Common generalized kernel of commuting multiplication maps, starting
// from the whole of A = Q[x]/I.
Matrix common_generalized_kernel(const Ideal& I, const std::vector<MPoly>& fs)
{
  Matrix v = identity(dim_of(I));
  for (const auto& f : fs)
    v = generalized_kernel(multiplication_matrix(I, f), v);
  return v;
}

// Characteristic polynomial of multiplication by the last variable on the
// chart's local part.
UPoly local_charpoly(const ChartIdeal& c)
{
  const Ideal& L = c.scheme;
  const std::size_t xn = L.nvars() - 1;
  const Matrix m = multiplication_matrix(L, MPoly::variable(L.nvars(), xn));
  Matrix r = solve_full_rank(c.local, mat_mul(m, c.local));
  for (auto& row : r)
    for (auto& x : row)
      x = -x;
  return shifted_determinant(r, var_name(xn));
}

// dim ker q(M)^N for N >= dim: the degree of the part of the
// characteristic polynomial supported on the roots of q.
std::size_t q_part_degree(UPoly chi, const UPoly& q_in)
{
  const UPoly q = q_in.with_var(chi.var());
  std::size_t len = 0;
  for (;;) {
    const UPoly h = upoly_gcd(chi, q);
    if (h.degree() < 1)
      return len;
    len += static_cast<std::size_t>(h.degree());
    chi = chi / h;
  }
}

void check_finite(const ChartIdeal& c)
{
  if (!c.finite)
    throw Error(ErrorKind::NotZeroDimensional, "chart " + c.name() + " has infinitely many points");
}

void check_length(const ChartIdeal& c)
{
  check_finite(c);
  if (!c.has_length)
    throw Error(ErrorKind::NotZeroDimensional, "chart " + c.name() + " meets a positive-dimensional component");
}

}  // namespace

std::string ChartIdeal::name() const { return pivot == 0 ? "affine" : var_name(pivot) + "=1"; }

std::vector<ChartIdeal> chart_decomposition(const PolySystem& s)
{
  const std::size_t nv = s.nvars();
  const std::size_t xn = s.hidden();
  std::vector<ChartIdeal> out;

  ChartIdeal aff;
  aff.pivot = 0;
  aff.points = Ideal::affine(nv, s.polys);
  aff.scheme = aff.points;
  aff.finite = aff.points.is_zero_dimensional();
  aff.has_length = aff.finite;
  if (aff.finite)
    aff.local = identity(dim_of(aff.scheme));
  out.push_back(aff);
  bool all_finite = aff.finite;

  const auto homog = s.homogenized();
  for (std::size_t pivot = 1; pivot < xn; ++pivot) {
    std::vector<MPoly> scheme, set;
    for (const auto& fh : homog) {
      const MPoly g = fh.substitute(pivot, Rational(1));
      scheme.push_back(g);
      MPoly h = g;
      for (std::size_t j = 0; j < pivot; ++j)
        h = h.substitute(j, Rational(0));
      set.push_back(h);
    }
    ChartIdeal c;
    c.pivot = pivot;
    c.points = Ideal(nv, slot_range(pivot + 1, xn), set);
    c.finite = c.points.is_zero_dimensional();
    c.scheme = Ideal(nv, slot_range(0, xn) & ~(1u << pivot), scheme);
    all_finite = all_finite && c.finite;
    out.push_back(std::move(c));
  }
  if (!all_finite)
    return out;
  // Every point of V off x_pivot = 0 lies in a finite chart, so the scheme
  // is zero-dimensional; the common generalized kernel of x_0..x_{pivot-1}
  // is the local part at infinity.
  for (std::size_t pivot = 1; pivot < xn; ++pivot) {
    ChartIdeal& c = out[pivot];
    std::vector<MPoly> fs;
    for (std::size_t j = 0; j < pivot; ++j)
      fs.push_back(MPoly::variable(nv, j));
    c.local = common_generalized_kernel(c.scheme, fs);
    c.has_length = true;
  }
  return out;
}

bool is_variety_finite(const PolySystem& s)
{
  for (const auto& c : chart_decomposition(s))
    if (!c.finite)
      return false;
  return true;
}

std::vector<std::vector<Rational>> chart_points(const ChartIdeal& c)
{
  check_finite(c);
  auto pts = rational_points(c.points);
  for (auto& p : pts)
    p[c.pivot] = 1;
  return pts;
}

std::size_t multiplicity_at_point(const ChartIdeal& c, std::span<const Rational> xi)
{
  check_length(c);
  const Ideal& L = c.scheme;
  std::vector<Rational> pt(xi.begin(), xi.end());
  pt.resize(L.nvars());
  bool on = true;
  for (std::size_t j = 0; j < c.pivot; ++j)
    on = on && pt[j] == 0;
  for (const auto& g : L.generators())
    on = on && g.evaluate(pt) == 0;
  if (!on)
    throw Error(ErrorKind::NotOnVariety, "point is not on chart " + c.name());
  std::vector<MPoly> p;
  for (std::size_t k = 0; k < L.nvars(); ++k)
    if (L.is_active(k))
      p.push_back(MPoly::variable(L.nvars(), k) - MPoly::constant(L.nvars(), pt[k]));
  const Matrix v = common_generalized_kernel(L, p);
  return v.empty() ? 0 : v[0].size();
}

std::size_t factor_length(const ChartIdeal& c, const UPoly& q)
{
  check_length(c);
  if (c.length() == 0)
    return 0;
  return q_part_degree(local_charpoly(c), q);
}

std::size_t factor_multiplicity(const ChartIdeal& c, const UPoly& q)
{
  if (!certified_irreducible(q))
    throw Error(ErrorKind::NotIrreducible, q.to_string() + " is not certified irreducible");
  const std::size_t len = factor_length(c, q);
  const auto deg = static_cast<std::size_t>(q.degree());
  if (len % deg != 0)
    throw Error(ErrorKind::StabilizationFailure,
                "length " + std::to_string(len) + " is not a multiple of deg " + q.to_string());
  return len / deg;
}

PoissonReport verify_poisson(const PolySystem& s)
{
  PoissonReport rep;
  const auto charts = chart_decomposition(s);
  rep.finite = std::all_of(charts.begin(), charts.end(), [](const ChartIdeal& c) { return c.finite; });
  rep.R = hidden_variable_resultant(s).poly;
  for (const auto& c : charts)
    rep.charts.push_back(c.name());
  if (!rep.finite || rep.R.is_zero())
    return rep;
  rep.c = rep.R.leading_coeff();

  std::vector<std::optional<UPoly>> charpolys;
  for (const auto& c : charts) {
    check_length(c);
    charpolys.push_back(c.length() ? std::optional<UPoly>(local_charpoly(c)) : std::nullopt);
  }
  for (const auto& fp : split_factors(rep.R)) {
    PoissonFactor f;
    f.q = fp.q;
    f.exponent = static_cast<int>(fp.exponent);
    f.irreducible = certified_irreducible(fp.q);
    std::size_t total = 0;
    for (std::size_t k = 0; k < charts.size(); ++k) {
      f.lengths.push_back(charpolys[k] ? q_part_degree(*charpolys[k], fp.q) : 0);
      total += f.lengths.back();
    }
    const auto deg = static_cast<std::size_t>(fp.q.degree());
    f.accounted = total / deg;
    f.matches = total == static_cast<std::size_t>(f.exponent) * deg;
    rep.factors.push_back(std::move(f));
  }

  std::size_t total = 0;
  for (const auto& c : charts) {
    rep.chart_lengths.push_back(c.length());
    total += rep.chart_lengths.back();
  }
  rep.pass = total == static_cast<std::size_t>(rep.R.degree()) &&
             std::all_of(rep.factors.begin(), rep.factors.end(), [](const PoissonFactor& f) { return f.matches; });
  return rep;
}

std::size_t fiber_degree(const Ideal& I, const Rational& lambda)
{
  if (!I.is_zero_dimensional())
    throw Error(ErrorKind::NotZeroDimensional, "fiber degree requires a zero-dimensional ideal");
  const std::size_t xn = I.last_var();
  const MPoly lin = MPoly::variable(I.nvars(), xn) - MPoly::constant(I.nvars(), lambda);
  return *I.plus({lin}).dimension();
}

}  // namespace shapelemma
