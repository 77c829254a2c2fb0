#include <shapelemma/errors.hpp>
#include <shapelemma/resultant.hpp>
#include <shapelemma/shape.hpp>
#include <shapelemma/subresultant.hpp>

#include <stdexcept>

namespace shapelemma {

namespace {

std::uint32_t slot_range(std::size_t first, std::size_t last)
{
  std::uint32_t m = 0;
  for (std::size_t k = first; k <= last; ++k)
    m |= 1u << k;
  return m;
}

std::string join(const std::vector<MPoly>& ps)
{
  std::string out;
  for (const auto& p : ps) {
    if (!out.empty())
      out += ", ";
    out += p.to_string();
  }
  return out;
}

std::string point_string(const std::vector<Rational>& pt, std::size_t first, std::size_t last)
{
  std::string out = "(";
  for (std::size_t k = first; k <= last; ++k) {
    if (k > first)
      out += ", ";
    out += to_string(pt[k]);
  }
  return out + ")";
}

// Everything the verifiers look at, computed once per system.
struct Facts {
  const PolySystem& s;
  Ideal I;
  bool zero_dim = false;
  UPoly R;
  UPoly eliminant;
  std::optional<SubresultantData> sub;

  explicit Facts(const PolySystem& sys) : s(sys), I(Ideal::affine(sys.nvars(), sys.polys))
  {
    zero_dim = I.is_zero_dimensional();
    R = hidden_variable_resultant(s).poly;
    if (zero_dim)
      eliminant = univariate_eliminant(I, s.hidden());
    if (s.rho >= 1)
      sub = first_subresultant_polys(s);
  }

  MPoly R_poly() const { return MPoly::from_upoly(s.nvars(), s.hidden(), R); }

  bool elim_by_R() const { return !R.is_zero() && eliminant == R.monic(); }

  Condition elim_condition() const
  {
    return {"elim_by_R", elim_by_R(),
            "eliminant " + eliminant.to_string() + ", R = " + R.to_string()};
  }

  UPoly gcd_R_s0() const { return upoly_gcd(R, sub->s[0]).with_var(var_name(s.hidden())); }

  Condition gcd_s0_condition() const
  {
    const UPoly g = gcd_R_s0();
    return {"gcd_R_s0_one", g.is_one(), g.to_string()};
  }

  // <R, p_i : i in slots> as a reduced lex basis. When gcd(R, s_0, s_i) is
  // not 1 the ideal has a positive-dimensional component and nullopt is
  // returned.
  std::optional<std::vector<MPoly>> parametric_basis(const std::vector<std::size_t>& slots) const
  {
    std::vector<UPoly> ds;
    for (std::size_t i : slots)
      ds.push_back(sub->s[i]);
    std::vector<UPoly> all{R, sub->s[0]};
    all.insert(all.end(), ds.begin(), ds.end());
    if (R.is_zero() || !upoly_gcd(all).is_one())
      return std::nullopt;
    const ParametricShape ps = shape_from_parametric(R, sub->s[0], ds);
    const std::size_t nv = s.nvars();
    std::vector<MPoly> out{MPoly::from_upoly(nv, s.hidden(), ps.basis.r)};
    if (!ps.unit)
      for (std::size_t k = 0; k < slots.size(); ++k)
        out.push_back(MPoly::variable(nv, slots[k]) - MPoly::from_upoly(nv, s.hidden(), ps.basis.g[k]));
    return out;
  }

  Condition generated_condition() const
  {
    std::vector<MPoly> gens{R_poly()};
    gens.insert(gens.end(), sub->p.begin(), sub->p.end());
    std::vector<std::size_t> slots;
    for (std::size_t i = 1; i < s.n(); ++i)
      slots.push_back(i);
    const auto basis = parametric_basis(slots);
    const bool eq =
        basis && ideal_equal_lex(Ideal::affine(s.nvars(), I.lex_basis()), Ideal::affine(s.nvars(), *basis));
    return {"generated_by_R_and_p", eq, "<" + join(gens) + ">"};
  }

  Condition shape_condition() const
  {
    auto b = has_shape_lemma(I);
    return {"shape", b.has_value(), join(I.lex_basis())};
  }

  Condition infinity_condition() const
  {
    const InfinityReport rep = solutions_at_infinity(s);
    std::string ev;
    for (std::size_t k : rep.saturation_witnesses)
      ev += (ev.empty() ? "" : "; ") + std::string("saturation by ") + var_name(k) + " is proper";
    for (const auto& c : rep.charts) {
      if (c.empty)
        continue;
      std::string pts;
      if (!c.finite)
        pts = "infinitely many points";
      for (const auto& p : c.points)
        pts += (pts.empty() ? "" : " ") + point_string(p, c.pivot + 1, s.hidden());
      if (pts.empty())
        pts = "irrational points only";
      ev += (ev.empty() ? "" : "; ") + var_name(c.pivot) + "=1: " + pts;
    }
    if (ev.empty())
      ev = "none";
    return {"no_infinity", !rep.exists, ev};
  }
};

TheoremReport hypothesis_failure(TheoremReport rep, const std::string& name)
{
  rep.verdict = Verdict::HypothesisFailed;
  rep.failed_hypothesis = name;
  rep.message = "hypothesis " + name + " does not hold";
  return rep;
}

bool check_hypotheses(TheoremReport& rep, const Facts& f, bool need_rho)
{
  rep.hypotheses.push_back({"zero_dimensional", f.zero_dim, ""});
  if (!f.zero_dim) {
    rep = hypothesis_failure(rep, "zero_dimensional");
    return false;
  }
  if (need_rho) {
    rep.hypotheses.push_back({"rho_positive", f.s.rho >= 1, "rho = " + std::to_string(f.s.rho)});
    if (f.s.rho < 1) {
      rep = hypothesis_failure(rep, "rho_positive");
      return false;
    }
  }
  return true;
}

TheoremReport slm2_report(const Facts& f)
{
  TheoremReport rep;
  rep.theorem = "1.3";
  if (!check_hypotheses(rep, f, true))
    return rep;

  const Condition shape = f.shape_condition();
  const Condition noinf = f.infinity_condition();
  const Condition elim = f.elim_condition();
  const Condition cop = f.gcd_s0_condition();
  const Condition gen = f.generated_condition();
  rep.details = {shape, noinf, elim, cop, gen};

  const bool c1 = shape.value && noinf.value;
  const bool c2 = elim.value && cop.value;
  const bool c3 = gen.value && elim.value;
  rep.conditions = {{"shape_and_no_infinity", c1, ""}, {"elim_and_coprime_s0", c2, ""}, {"generated_and_elim", c3, ""}};

  if (!(c1 == c2 && c2 == c3)) {
    rep.verdict = Verdict::Violation;
    rep.message = "conditions are not equivalent";
    return rep;
  }
  if (c1) {
    const std::size_t n = f.s.n();
    const std::size_t xn = f.s.hidden();
    const ShapeBasis shape_basis = *has_shape_lemma(f.I);
    bool all = true;
    std::string failed;
    for (std::uint32_t sub = 1; sub < (1u << (n - 1)); ++sub) {
      std::uint32_t keep = 1u << xn;
      std::vector<MPoly> gens{f.R_poly()};
      std::vector<std::size_t> slots;
      for (std::size_t i = 1; i < n; ++i)
        if ((sub >> (i - 1)) & 1u) {
          keep |= 1u << i;
          gens.push_back(f.sub->p[i - 1]);
          slots.push_back(i);
        }
      // In shape position I meets Q[x_S, xn] in <r, x_i - g_i : i in S>.
      std::vector<MPoly> elim{MPoly::from_upoly(f.s.nvars(), xn, shape_basis.r)};
      for (std::size_t k = 0; k < shape_basis.vars.size(); ++k)
        if ((keep >> shape_basis.vars[k]) & 1u)
          elim.push_back(MPoly::variable(f.s.nvars(), shape_basis.vars[k]) -
                         MPoly::from_upoly(f.s.nvars(), xn, shape_basis.g[k]));
      const auto basis = f.parametric_basis(slots);
      if (!basis || !ideal_equal_lex(Ideal(f.s.nvars(), keep, elim), Ideal(f.s.nvars(), keep, *basis))) {
        all = false;
        failed = join(gens);
        break;
      }
    }
    rep.details.push_back({"partial_elimination", all, all ? "all subsets" : "fails for <" + failed + ">"});
    if (!all) {
      rep.verdict = Verdict::Violation;
      rep.message = "partial elimination ideal differs";
      return rep;
    }
  }
  rep.message = c1 ? "all conditions hold" : "all conditions fail";
  return rep;
}

}  // namespace

std::vector<MPoly> ShapeBasis::generators() const
{
  std::vector<MPoly> out{MPoly::from_upoly(nvars, last, r)};
  for (std::size_t i = 0; i < vars.size(); ++i)
    out.push_back(MPoly::variable(nvars, vars[i]) - MPoly::from_upoly(nvars, last, g[i]));
  return out;
}

Ideal ShapeBasis::ideal() const
{
  std::uint32_t mask = 1u << last;
  for (std::size_t k : vars)
    mask |= 1u << k;
  return Ideal(nvars, mask, generators());
}

std::optional<ShapeBasis> has_shape_lemma(const Ideal& I)
{
  if (!I.is_zero_dimensional())
    throw Error(ErrorKind::NotZeroDimensional, "shape detection requires a zero-dimensional ideal");
  ShapeBasis b;
  b.nvars = I.nvars();
  b.last = I.last_var();
  for (std::size_t k = 0; k < I.nvars(); ++k)
    if (I.is_active(k) && k != b.last)
      b.vars.push_back(k);
  const std::string xn = var_name(b.last);
  if (I.is_unit()) {
    b.r = UPoly::constant(1, xn);
    b.g.assign(b.vars.size(), UPoly({}, xn));
    return b;
  }
  const auto& lex = I.lex_basis();
  if (lex.size() != b.vars.size() + 1)
    return std::nullopt;
  if (lex[0].support() & ~(1u << b.last))
    return std::nullopt;
  b.r = lex[0].to_upoly(b.last);
  // Ascending leading monomials: x_{n-1} - g comes before x_{n-2} - g.
  for (std::size_t i = 0; i < b.vars.size(); ++i) {
    const std::size_t k = b.vars[b.vars.size() - 1 - i];
    const MPoly& f = lex[i + 1];
    const MPoly x = MPoly::variable(b.nvars, k);
    if (!(f.leading_term().mono == x.leading_term().mono))
      return std::nullopt;
    const MPoly rest = x - f;
    if (rest.support() & ~(1u << b.last))
      return std::nullopt;
    b.g.insert(b.g.begin(), rest.is_zero() ? UPoly({}, xn) : rest.to_upoly(b.last));
  }
  return b;
}

bool projection_injective(const Ideal& I)
{
  return has_shape_lemma(radical_zero_dim(I)).has_value();
}

InfinityReport solutions_at_infinity(const PolySystem& s)
{
  const std::size_t nv = s.nvars();
  const std::size_t xn = s.hidden();
  const auto homog = s.homogenized();
  InfinityReport rep;

  std::vector<MPoly> at_inf;
  for (const auto& fh : homog)
    at_inf.push_back(restrict_to_infinity(fh));
  const Ideal H(nv, slot_range(1, xn), at_inf);
  for (std::size_t i = 1; i < xn; ++i)
    if (!saturation(H, MPoly::variable(nv, i)).is_unit())
      rep.saturation_witnesses.push_back(i);
  rep.exists = !rep.saturation_witnesses.empty();

  for (std::size_t pivot = 1; pivot < xn; ++pivot) {
    std::vector<MPoly> gens;
    for (const auto& fh : homog) {
      MPoly g = fh.substitute(0, Rational(0));
      for (std::size_t j = 1; j < pivot; ++j)
        g = g.substitute(j, Rational(0));
      gens.push_back(g.substitute(pivot, Rational(1)));
    }
    InfinityChart c;
    c.pivot = pivot;
    c.ideal = Ideal(nv, slot_range(pivot + 1, xn), gens);
    c.empty = c.ideal.is_unit();
    c.finite = c.ideal.is_zero_dimensional();
    if (c.finite && !c.empty) {
      c.points = rational_points(c.ideal);
      for (auto& p : c.points)
        p[pivot] = 1;
    }
    rep.finite = rep.finite && c.finite;
    rep.charts.push_back(std::move(c));
  }
  return rep;
}

UPoly gcd_leading_coeffs(const PolySystem& s)
{
  if (s.n() != 2)
    throw Error(ErrorKind::WrongArity, "leading coefficient gcd needs two polynomials");
  return upoly_gcd(leading_coeff_x1(s.polys[0]), leading_coeff_x1(s.polys[1])).with_var(var_name(2));
}

ParametricShape shape_from_parametric(const UPoly& d_in, const UPoly& d0_in, const std::vector<UPoly>& ds_in)
{
  if (d_in.is_zero())
    throw Error(ErrorKind::ZeroModulus, "the univariate generator is zero");
  const std::size_t n = ds_in.size() + 1;
  const std::string xn = var_name(n);
  std::vector<UPoly> all{d_in, d0_in};
  all.insert(all.end(), ds_in.begin(), ds_in.end());
  if (!upoly_gcd(all).is_one())
    throw Error(ErrorKind::GcdNotOne, "gcd(d, d0, d_i) = " + upoly_gcd(all).with_var(xn).to_string());

  UPoly d = d_in, d0 = d0_in;
  std::vector<UPoly> ds = ds_in;
  ParametricShape out;
  out.basis.nvars = n + 1;
  out.basis.last = n;
  for (std::size_t i = 1; i < n; ++i)
    out.basis.vars.push_back(i);

  for (;;) {
    if (d.degree() == 0) {
      out.unit = true;
      out.basis.r = UPoly::constant(1, xn);
      out.basis.g.assign(n - 1, UPoly({}, xn));
      return out;
    }
    const UPoly e0 = upoly_gcd(d, d0);
    if (e0.is_one())
      break;
    ++out.steps;
    const UPoly e = d / e0;
    const UPoly E = d0 / e0;
    const ExtendedGcd bez = extended_gcd(e, E);
    const UPoly& B = bez.v;
    for (auto& di : ds)
      di = e.degree() > 0 ? (B * di) % e : UPoly();
    d = e;
    d0 = e0;
  }
  const UPoly inv = inverse_mod(d0, d);
  out.basis.r = d.monic().with_var(xn);
  for (const auto& di : ds)
    out.basis.g.push_back(((inv * di) % d).with_var(xn));
  return out;
}

const char* verdict_name(Verdict v)
{
  switch (v) {
  case Verdict::Consistent:
    return "consistent";
  case Verdict::HypothesisFailed:
    return "hypothesis-failed";
  case Verdict::Violation:
    return "violation";
  }
  return "?";
}

const Condition& TheoremReport::find(const std::string& name) const
{
  for (const auto* list : {&conditions, &details, &hypotheses})
    for (const auto& c : *list)
      if (c.name == name)
        return c;
  throw std::out_of_range("no condition named " + name);
}

bool TheoremReport::flag(const std::string& name) const { return find(name).value; }

TheoremReport check_theorem_elim(const PolySystem& s)
{
  const Facts f(s);
  TheoremReport rep;
  rep.theorem = "1.1";
  if (!check_hypotheses(rep, f, false))
    return rep;
  const bool inj = projection_injective(f.I);
  rep.hypotheses.push_back({"injective", inj, ""});
  if (!inj)
    return hypothesis_failure(rep, "injective");

  rep.conditions = {f.shape_condition(), f.infinity_condition(), f.elim_condition()};
  int holds = 0;
  for (const auto& c : rep.conditions)
    holds += c.value;
  if (holds == 2) {
    rep.verdict = Verdict::Violation;
    rep.message = "two conditions hold but the third fails";
  } else {
    rep.message = holds == 3 ? "all conditions hold" : "at most one condition holds";
  }
  return rep;
}

TheoremReport check_theorem_slm2(const PolySystem& s)
{
  return slm2_report(Facts(s));
}

TheoremReport check_theorem_rshape(const PolySystem& s)
{
  const Facts f(s);
  TheoremReport rep;
  rep.theorem = "1.4";
  if (!check_hypotheses(rep, f, true))
    return rep;
  const Condition gen = f.generated_condition();
  rep.hypotheses.push_back(gen);
  if (!gen.value)
    return hypothesis_failure(rep, "generated_by_R_and_p");

  std::vector<UPoly> all{f.R};
  all.insert(all.end(), f.sub->s.begin(), f.sub->s.end());
  const UPoly g = upoly_gcd(all).with_var(var_name(s.hidden()));
  const Condition shape = f.shape_condition();
  rep.conditions = {{"gcd_all_one", g.is_one(), g.to_string()}, shape, f.elim_condition(), f.gcd_s0_condition(),
                    f.infinity_condition()};
  if (!rep.conditions[0].value || !shape.value) {
    rep.verdict = Verdict::Violation;
    rep.message = "a conclusion fails";
    return rep;
  }
  const bool c3 = rep.conditions[2].value;
  if (c3 != rep.conditions[3].value || c3 != rep.conditions[4].value) {
    rep.verdict = Verdict::Violation;
    rep.message = "conditions are not equivalent";
    return rep;
  }
  rep.message = c3 ? "conclusions hold; all conditions hold" : "conclusions hold; all conditions fail";
  return rep;
}

TheoremReport check_prop_n2(const PolySystem& s)
{
  TheoremReport rep;
  rep.theorem = "5.6";
  rep.hypotheses.push_back({"two_polynomials", s.n() == 2, "n = " + std::to_string(s.n())});
  if (s.n() != 2)
    return hypothesis_failure(rep, "two_polynomials");
  rep.hypotheses.push_back({"rho_positive", s.rho >= 1, "rho = " + std::to_string(s.rho)});
  if (s.rho < 1)
    return hypothesis_failure(rep, "rho_positive");

  const UPoly R = hidden_variable_resultant(s).poly;
  const int bezout = s.total_degrees[0] * s.total_degrees[1];
  const bool full = R.degree() == bezout;
  rep.hypotheses.push_back(
      {"degree_product", full, "deg R = " + std::to_string(R.degree()) + ", product = " + std::to_string(bezout)});
  const bool sqfree = R.degree() >= 1 && upoly_gcd(R, R.derivative()).is_one();
  std::string ev;
  if (R.degree() >= 1)
    ev = "disc = " + to_string(discriminant(R));
  rep.hypotheses.push_back({"squarefree", sqfree, ev});
  if (!full)
    return hypothesis_failure(rep, "degree_product");
  if (!sqfree)
    return hypothesis_failure(rep, "squarefree");

  const Facts f(s);
  if (!f.zero_dim) {
    rep.verdict = Verdict::Violation;
    rep.message = "the ideal is not zero-dimensional";
    return rep;
  }
  const TheoremReport inner = slm2_report(f);
  rep.conditions = inner.conditions;
  rep.details = inner.details;
  if (inner.verdict != Verdict::Consistent) {
    rep.verdict = Verdict::Violation;
    rep.message = inner.message;
    return rep;
  }
  for (const auto& c : rep.conditions)
    if (!c.value) {
      rep.verdict = Verdict::Violation;
      rep.message = "condition " + c.name + " fails";
      return rep;
    }
  rep.message = "all conditions hold";
  return rep;
}

}  // namespace shapelemma
