#include <shapelemma/system.hpp>

#include <shapelemma/errors.hpp>

namespace shapelemma {

PolySystem PolySystem::from_polys(std::vector<MPoly> polys)
{
  if (polys.size() < 2)
    throw Error(ErrorKind::ArityMismatch, "a system needs at least two polynomials");
  PolySystem s;
  const std::size_t nv = polys.size() + 1;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].nvars() != nv)
      polys[i] = polys[i].is_zero() ? MPoly(nv) : polys[i];
    if (polys[i].nvars() != nv)
      throw Error(ErrorKind::ArityMismatch, "polynomial f" + std::to_string(i + 1) + " lives in the wrong ring");
    if (polys[i].uses(0))
      throw Error(ErrorKind::ArityMismatch, "x0 is reserved for homogenization");
    const int d = polys[i].degree_in_range(1, nv - 1);
    if (d < 1)
      throw Error(ErrorKind::DegenerateDegree,
                  "f" + std::to_string(i + 1) + " has degree 0 in x1..x" + std::to_string(nv - 2));
    s.degrees.push_back(d);
    s.total_degrees.push_back(polys[i].total_degree());
    s.rho += d - 1;
  }
  s.polys = std::move(polys);
  return s;
}

std::vector<MPoly> PolySystem::homogenized() const
{
  std::vector<MPoly> out;
  out.reserve(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    out.push_back(homogenize_partial(polys[i], degrees[i]));
  return out;
}

std::string PolySystem::to_string() const
{
  std::string s = "vars:";
  for (std::size_t k = 1; k < nvars(); ++k)
    s += " " + var_name(k);
  s += '\n';
  for (std::size_t i = 0; i < polys.size(); ++i)
    s += "f" + std::to_string(i + 1) + " = " + polys[i].to_string() + '\n';
  return s;
}

MPoly homogenize_partial(const MPoly& f, int d)
{
  const std::size_t nv = f.nvars();
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    const int k = static_cast<int>(t.mono.degree_in(0, nv - 1));
    if (k > d)
      throw Error(ErrorKind::DegreeTooSmall,
                  "term of degree " + std::to_string(k) + " exceeds " + std::to_string(d));
    Term u = t;
    u.mono.set(0, t.mono[0] + static_cast<std::uint32_t>(d - k));
    terms.push_back(std::move(u));
  }
  return MPoly(nv, std::move(terms));
}

MPoly restrict_to_infinity(const MPoly& fh) { return fh.substitute(0, Rational(0)); }

UPoly leading_coeff_x1(const MPoly& f)
{
  if (f.nvars() != 3)
    throw Error(ErrorKind::WrongArity, "leading coefficient in x1 needs a system in x1, x2");
  auto coeffs = f.coefficients_in(1);
  if (coeffs.empty())
    return UPoly({}, "x2");
  return coeffs.back().to_upoly(2);
}

}  // namespace shapelemma
