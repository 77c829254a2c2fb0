// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any
// criterion fails.

#include "support.hpp"

#include <shapelemma/errors.hpp>
#include <shapelemma/fuzz.hpp>
#include <shapelemma/poisson.hpp>
#include <shapelemma/resultant.hpp>
#include <shapelemma/shape.hpp>
#include <shapelemma/subresultant.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace shapelemma;
using testing::fixture;
using testing::P;
using testing::U;

namespace {

// Collects the failed checks of one criterion.
struct Checks {
  std::vector<std::string> failed;

  void operator()(bool ok, const std::string& what)
  {
    if (!ok)
      failed.push_back(what);
  }
};

Ideal affine(const PolySystem& s, std::vector<MPoly> gens) { return Ideal::affine(s.nvars(), std::move(gens)); }

std::vector<MPoly> R_and_p(const PolySystem& s, const UPoly& R, const SubresultantData& d)
{
  std::vector<MPoly> gens{MPoly::from_upoly(s.nvars(), s.hidden(), R)};
  gens.insert(gens.end(), d.p.begin(), d.p.end());
  return gens;
}

void criterion_intro(Checks& check)
{
  const auto s = fixture("intro");
  const auto R = sylvester_resultant(s).poly;
  check(R == U("-x2^3 - 2*x2 + 1", 2), "R = " + R.to_string());
  const auto d = first_subresultant_polys(s);
  check(d.p.size() == 1 && d.p[0] == P("x2*x1 + x2 - 1", 3), "p1");
  const Ideal I = testing::system_ideal(s);
  check(testing::strings(I.lex_basis()) == std::vector<std::string>{"x2^3 + 2*x2 - 1", "x1 - x2^2 - 1"}, "lex basis");
  check(ideal_equal(I, affine(s, R_and_p(s, R, d))), "<f1, f2> = <R, p1>");
  const auto rep = check_theorem_slm2(s);
  check(rep.verdict == Verdict::Consistent, "slm2 verdict");
  for (const auto& c : rep.conditions)
    check(c.value, c.name);
}

void criterion_point_at_infinity(Checks& check)
{
  const auto s = fixture("point_at_infinity");
  const auto R = hidden_variable_resultant(s).poly;
  check(R == U("(x2 + 1)*(x2 + 5)", 2), "R = " + R.to_string());
  const Ideal I = testing::system_ideal(s);
  check(testing::strings(elimination_ideal(I, 1u << 2).generators()) == std::vector<std::string>{"x2 + 5"},
        "elimination ideal");
  const auto inf = solutions_at_infinity(s);
  bool witness = false;
  for (const auto& c : inf.charts)
    for (const auto& pt : c.points)
      witness = witness || pt[2] == -1;
  check(inf.exists && witness, "witness x2 = -1");
  const auto rep = check_theorem_elim(s);
  check(rep.verdict == Verdict::Consistent, "elim verdict");
  check(rep.flag("shape") && !rep.flag("no_infinity") && !rep.flag("elim_by_R"), "(1) T, (2) F, (3) F");
}

// Asserted exactly as stated; the factor x2 turns out to carry exponent 3.
void criterion_quartic(Checks& check)
{
  const auto s = fixture("quartic");
  const UPoly quartic = U("x2^4 - 3*x2^3 - x2^2 - 5*x2 + 6", 2);
  const UPoly x2 = U("x2", 2);
  const auto R = hidden_variable_resultant(s).poly;
  check(R == x2.pow(2) * quartic, "R = " + factored_string(R) + ", expected x2^2*(x2^4 - 3*x2^3 - x2^2 - 5*x2 + 6)");
  const auto r = univariate_eliminant(testing::system_ideal(s), 2);
  check(r == x2 * quartic, "eliminant = " + factored_string(r) + ", expected x2*(x2^4 - 3*x2^3 - x2^2 - 5*x2 + 6)");
  const auto rep = verify_poisson(s);
  bool found = false;
  for (const auto& f : rep.factors)
    if (f.q == x2) {
      found = true;
      std::ostringstream got;
      got << "x2: exponent " << f.exponent << " = " << f.lengths[0] << " (affine) + " << f.lengths[1]
          << " (infinity), expected 2 = 1 + 1";
      check(f.exponent == 2 && f.lengths.size() == 2 && f.lengths[0] == 1 && f.lengths[1] == 1, got.str());
    }
  check(found, "factor x2 in the Poisson table");
}

void criterion_line_at_infinity(Checks& check)
{
  const auto s = fixture("line_at_infinity");
  const auto R = hidden_variable_resultant(s).poly;
  check(R == U("x3^7*(x3 + 6)", 3), "R = " + R.to_string());
  const auto b = has_shape_lemma(testing::system_ideal(s));
  check(b && b->r == U("x3^2 + 6*x3", 3) && b->g.size() == 2 && b->g[0] == U("-2/9*x3 - 1", 3) &&
            b->g[1] == U("-1/9*x3", 3),
        "shape basis");
  check(!is_variety_finite(s), "variety is infinite");
  const auto rep = check_theorem_elim(s);
  check(rep.verdict == Verdict::Consistent, "elim verdict");
  check(rep.flag("shape") && !rep.flag("elim_by_R"), "(1) T, (3) F");
  check(!rep.flag("no_infinity"), "(2) F");
  check(!solutions_at_infinity(s).saturation_witnesses.empty(), "saturation witness");
}

void criterion_fat_point(Checks& check)
{
  const auto s = fixture("fat_point");
  check(hidden_variable_resultant(s).poly == U("4*x2^4", 2), "R = 4*x2^4");
  const auto charts = chart_decomposition(s);
  const std::vector<Rational> origin{1, 0, 0};
  const std::size_t m = multiplicity_at_point(charts[0], origin);
  check(m == 4, "multiplicity at (0, 0) = " + std::to_string(m));
  const std::size_t fib = fiber_degree(testing::system_ideal(s), 0);
  check(fib == 2, "fiber degree = " + std::to_string(fib));
  const auto rep = verify_poisson(s);
  check(rep.finite && rep.pass, "Poisson pass");
  check(rep.factors.size() == 1 && rep.factors[0].q == U("x2", 2) && rep.factors[0].accounted == 4, "x2 -> 4");
  check(fib < m, "fiber degree below multiplicity");
}

void criterion_cubic_shape(Checks& check)
{
  const auto s = fixture("cubic_shape");
  check(hidden_variable_resultant(s).poly == U("x3^3*(2 + x3 + x3^3)", 3), "R");
  const auto d = first_subresultant_polys(s);
  // one global sign is free
  const UPoly sign = d.s[0].leading_coeff() > 0 ? UPoly::constant(1, "x3") : UPoly::constant(-1, "x3");
  check(d.s[0] == sign * U("x3^2", 3) && d.s[1] == sign * U("-x3", 3) && d.s[2] == sign * U("-x3", 3), "s0, s1, s2");
  const MPoly x3 = P("x3", 4);
  const MPoly g = MPoly::from_upoly(4, 3, sign);
  check(d.p[0] == g * x3 * s.polys[0] && d.p[1] == g * x3 * s.polys[1], "p_i = x3 * f_i");
  const auto rep = check_theorem_slm2(s);
  check(rep.verdict == Verdict::Consistent, "slm2 verdict");
  for (const auto& c : rep.conditions)
    check(!c.value, c.name + " is false");
}

void criterion_shared_leading(Checks& check)
{
  const auto s = fixture("shared_leading");
  const auto R = hidden_variable_resultant(s).poly;
  check(R == U("x2^3*(x2 + 1)", 2), "R = " + R.to_string());
  const auto d = first_subresultant_polys(s);
  check(d.p[0] == P("x2*x1 + 1", 3), "p1");
  check(ideal_equal(affine(s, R_and_p(s, R, d)), affine(s, {P("x2 + 1", 3), P("x1 - 1", 3)})),
        "<R, p1> = <x2 + 1, x1 - 1>");
  const auto rep = check_theorem_rshape(s);
  check(rep.verdict == Verdict::Consistent, "rshape verdict");
  check(rep.flag("gcd_all_one") && rep.flag("shape"), "conclusions (1), (2)");
  check(!rep.flag("elim_by_R") && !rep.flag("gcd_R_s0_one") && !rep.flag("no_infinity"), "(3), (4), (5) false");
  check(rep.find("gcd_R_s0_one").evidence == "x2", "gcd(R, s0) = x2");
}

void criterion_generic_bezout(Checks& check)
{
  const auto s = fixture("generic_bezout");
  const auto R = hidden_variable_resultant(s).poly;
  check(R.degree() == 9, "deg R = 9");
  check(discriminant(R) == Rational(384126317), "discriminant = " + to_string(discriminant(R)));
  const auto rep = check_prop_n2(s);
  check(rep.verdict == Verdict::Consistent, "prop verdict: " + rep.message);
  check(rep.flag("shape") && rep.flag("generated_by_R_and_p") && rep.flag("elim_by_R"), "all conclusions");
}

void criterion_fuzz(Checks& check)
{
  FuzzOptions opts;
  opts.seed = 1;
  opts.count = 200;
  const auto rep = run_fuzz(opts);
  check(rep.checked >= 200, "checked " + std::to_string(rep.checked));
  for (const auto& c : rep.checks)
    check(c.failures == 0, c.name + ": " + std::to_string(c.failures) + " of " + std::to_string(c.runs));
  for (const char* name : {"resultant_in_ideal", "eliminant_divides_resultant", "subresultant_relations",
                           "theorem_elim", "theorem_slm2", "theorem_rshape", "parametric_shape",
                           "multiplicity_stable"})
    check(rep.check(name).runs > 0, std::string(name) + " never ran");
  for (const auto& f : rep.failures)
    check(false, f);
}

void criterion_oracles(Checks& check)
{
  std::mt19937_64 rng(2024);
  std::size_t compared = 0;
  std::size_t nonzero = 0;
  for (int k = 0; k < 100; ++k) {
    const PolySystem s = random_system(rng, 2);
    const UPoly mac = macaulay_resultant(s).poly;
    const UPoly syl = sylvester_resultant(s).poly;
    check(mac == syl || mac == -syl, "Macaulay vs Sylvester on\n" + s.to_string());
    ++compared;
    nonzero += syl.is_zero() ? 0 : 1;
  }
  check(nonzero >= 50, "compared " + std::to_string(compared) + ", nonzero " + std::to_string(nonzero));

  for (const char* name : {"intro", "point_at_infinity", "quartic", "line_at_infinity", "fat_point", "cubic_shape",
                           "shared_leading", "generic_bezout", "linear_quadric"}) {
    const auto s = fixture(name);
    if (!is_variety_finite(s))
      continue;
    const Ideal I = testing::system_ideal(s);
    const UPoly r = univariate_eliminant(I, s.hidden());
    const auto rep = verify_poisson(s);
    check(rep.pass, std::string(name) + ": Poisson");
    std::size_t affine_total = 0;
    for (const auto& f : rep.factors) {
      affine_total += f.lengths[0];
      const bool in_r = upoly_gcd(f.q, r).degree() > 0;
      check(in_r == (f.lengths[0] > 0), std::string(name) + ": affine part of " + f.q.to_string());
    }
    check(affine_total == *I.dimension(), std::string(name) + ": affine lengths sum to dim Q[x]/I");
    check(divides(r, rep.R), std::string(name) + ": eliminant divides R");
  }
}

}  // namespace

int main()
{
  const std::pair<const char*, std::function<void(Checks&)>> criteria[] = {
      {"intro system end to end", criterion_intro},
      {"point at infinity", criterion_point_at_infinity},
      {"quartic factor and Poisson split as stated", criterion_quartic},
      {"line of solutions at infinity", criterion_line_at_infinity},
      {"fat point multiplicity", criterion_fat_point},
      {"cubic subresultants", criterion_cubic_shape},
      {"shared leading coefficient", criterion_shared_leading},
      {"generic Bezout case", criterion_generic_bezout},
      {"randomized property suite", criterion_fuzz},
      {"oracle equivalence", criterion_oracles},
  };
  int failures = 0;
  int k = 0;
  for (const auto& [name, run] : criteria) {
    ++k;
    Checks check;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(check);
    } catch (const std::exception& e) {
      check.failed.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = check.failed.empty();
    failures += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " " << k << " " << name << " (" << secs << " s)\n";
    for (const auto& f : check.failed)
      std::cout << "     " << f << "\n";
  }
  std::cout << (10 - failures) << "/10 criteria pass\n";
  return failures == 0 ? 0 : 1;
}
