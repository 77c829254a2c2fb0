#include <doctest.h>

#include "support.hpp"

#include <shapelemma/errors.hpp>
#include <shapelemma/poisson.hpp>
#include <shapelemma/resultant.hpp>
#include <shapelemma/shape.hpp>
#include <shapelemma/subresultant.hpp>

using namespace shapelemma;
using testing::fixture;
using testing::P;
using testing::system_ideal;
using testing::U;

namespace {

Ideal ideal2(std::initializer_list<const char*> gens)
{
  std::vector<MPoly> g;
  for (const char* t : gens)
    g.push_back(P(t, 3));
  return Ideal::affine(3, g);
}

const char* const kAll[] = {"intro", "point_at_infinity", "quartic", "line_at_infinity", "fat_point",
                            "cubic_shape", "shared_leading", "generic_bezout", "linear_quadric"};

}  // namespace

TEST_CASE("shape detection")
{
  auto b = has_shape_lemma(system_ideal(fixture("point_at_infinity")));
  REQUIRE(b);
  CHECK(b->r.to_string() == "x2 + 5");
  CHECK(b->g[0].to_string() == "-1/2");

  CHECK_FALSE(has_shape_lemma(ideal2({"x2", "x1^2"})));

  auto c = has_shape_lemma(system_ideal(fixture("cubic_shape")));
  REQUIRE(c);
  CHECK(c->r == U("2 + x3 + x3^3", 3));
  CHECK(c->g[0] == U("1/2 + 1/2*x3^2", 3));
  CHECK(c->g[1] == U("1/2 + 1/2*x3^2", 3));
  CHECK(testing::strings(c->generators()) ==
        std::vector<std::string>{"x3^3 + x3 + 2", "x1 - 1/2*x3^2 - 1/2", "x2 - 1/2*x3^2 - 1/2"});

  auto unit = has_shape_lemma(ideal2({"x1", "x1 - 1"}));
  REQUIRE(unit);
  CHECK(unit->r.is_one());

  CHECK_THROWS_AS(has_shape_lemma(ideal2({"x1*x2"})), Error);
}

TEST_CASE("shape basis invariants on fixtures")
{
  for (const char* name : kAll) {
    CAPTURE(name);
    const Ideal I = system_ideal(fixture(name));
    auto b = has_shape_lemma(I);
    if (!b)
      continue;
    CHECK(ideal_equal(I, b->ideal()));
    CHECK(univariate_eliminant(I, b->last) == b->r);
    CHECK(*quotient_dim(I) == static_cast<std::size_t>(b->r.degree()));
    for (const auto& g : b->g)
      CHECK(g.degree() < b->r.degree());
  }
}

TEST_CASE("projection injectivity")
{
  CHECK_FALSE(projection_injective(ideal2({"x1^2 - 1", "x2"})));
  CHECK(projection_injective(system_ideal(fixture("quartic"))));
  CHECK(projection_injective(ideal2({"x1^2", "x2^2"})));
  // two irrational points over distinct x2 values
  CHECK(projection_injective(ideal2({"x1 - x2", "x2^2 - 2"})));
  CHECK_FALSE(projection_injective(ideal2({"x1^2 - 2", "x2^2"})));
}

TEST_CASE("solutions at infinity")
{
  auto a = solutions_at_infinity(fixture("point_at_infinity"));
  CHECK(a.exists);
  CHECK(a.finite);
  CHECK(a.saturation_witnesses == std::vector<std::size_t>{1});
  REQUIRE(a.charts.size() == 1);
  REQUIRE(a.charts[0].points.size() == 1);
  CHECK(a.charts[0].points[0] == std::vector<Rational>{0, 1, -1});

  auto b = solutions_at_infinity(fixture("intro"));
  CHECK_FALSE(b.exists);
  CHECK(b.charts[0].empty);

  auto c = solutions_at_infinity(fixture("line_at_infinity"));
  CHECK(c.exists);
  CHECK_FALSE(c.finite);

  for (const char* name : kAll) {
    CAPTURE(name);
    auto r = solutions_at_infinity(fixture(name));
    bool any = false;
    for (const auto& ch : r.charts)
      any = any || !ch.empty;
    CHECK(any == r.exists);
  }
}

TEST_CASE("leading coefficient gcd")
{
  CHECK(gcd_leading_coeffs(fixture("shared_leading")).to_string() == "x2");
  CHECK(gcd_leading_coeffs(fixture("intro")).to_string() == "1");
  CHECK(gcd_leading_coeffs(fixture("point_at_infinity")).to_string() == "x2 + 1");
  CHECK_THROWS_AS(gcd_leading_coeffs(fixture("cubic_shape")), Error);
  for (const char* name : {"intro", "point_at_infinity", "quartic", "fat_point", "shared_leading", "generic_bezout",
                           "linear_quadric"}) {
    CAPTURE(name);
    auto s = fixture(name);
    CHECK(gcd_leading_coeffs(s).is_one() == !solutions_at_infinity(s).exists);
  }
}

TEST_CASE("shape from a parametric representation")
{
  auto a = shape_from_parametric(U("-x2^3 - 2*x2 + 1", 2), U("x2", 2), {U("1 - x2", 2)});
  CHECK_FALSE(a.unit);
  CHECK(a.steps == 0);
  CHECK(a.basis.r.to_string() == "x2^3 + 2*x2 - 1");
  CHECK(a.basis.g[0].to_string() == "x2^2 + 1");

  auto b = shape_from_parametric(U("x2 - 1", 2), U("1", 2), {U("7", 2)});
  CHECK(b.basis.r.to_string() == "x2 - 1");
  CHECK(b.basis.g[0].to_string() == "7");

  auto c = shape_from_parametric(U("x2^2", 2), U("x2", 2), {U("1", 2)});
  CHECK(c.unit);

  CHECK_THROWS_AS(shape_from_parametric(UPoly(), U("1", 2), {U("1", 2)}), Error);
  CHECK_THROWS_AS(shape_from_parametric(U("x2^2", 2), U("x2", 2), {U("x2", 2)}), Error);
}

TEST_CASE("parametric reduction keeps the ideal")
{
  struct Case {
    const char *d, *d0, *d1, *d2;
  };
  const Case cases[] = {
      {"x3^3*(x3^3 + x3 + 2)", "x3^2", "1 - x3", "-x3"},
      {"x3^2*(x3 - 1)*(x3 + 2)", "x3*(x3 - 1)", "x3 + 1", "3"},
      {"(x3 - 1)^3", "(x3 - 1)^2", "x3", "x3 - 2"},
      {"x3^4 - 1", "x3^2 + 1", "x3", "1"},
  };
  for (const auto& cs : cases) {
    CAPTURE(cs.d);
    const UPoly d = U(cs.d, 3), d0 = U(cs.d0, 3), d1 = U(cs.d1, 3), d2 = U(cs.d2, 3);
    auto out = shape_from_parametric(d, d0, {d1, d2});
    const Ideal J = Ideal::affine(4, {MPoly::from_upoly(4, 3, d), MPoly::from_upoly(4, 3, d0) * P("x1", 4) -
                                                                      MPoly::from_upoly(4, 3, d1),
                                      MPoly::from_upoly(4, 3, d0) * P("x2", 4) - MPoly::from_upoly(4, 3, d2)});
    CHECK(ideal_equal(J, out.basis.ideal()));
    auto direct = has_shape_lemma(J);
    REQUIRE(direct);
    CHECK(direct->r == out.basis.r);
    CHECK(direct->g == out.basis.g);
  }
}

TEST_CASE("elimination theorem on fixtures")
{
  auto a = check_theorem_elim(fixture("point_at_infinity"));
  CHECK(a.verdict == Verdict::Consistent);
  CHECK(a.flag("shape"));
  CHECK_FALSE(a.flag("no_infinity"));
  CHECK_FALSE(a.flag("elim_by_R"));

  auto b = check_theorem_elim(fixture("intro"));
  CHECK(b.verdict == Verdict::Consistent);
  CHECK(b.flag("shape"));
  CHECK(b.flag("no_infinity"));
  CHECK(b.flag("elim_by_R"));

  auto c = check_theorem_elim(fixture("line_at_infinity"));
  CHECK(c.flag("shape"));
  CHECK_FALSE(c.flag("no_infinity"));
  CHECK_FALSE(c.flag("elim_by_R"));
  CHECK(c.find("no_infinity").evidence.find("saturation by x1 is proper") != std::string::npos);

  auto d = check_theorem_elim(parse_system("vars: x1 x2\nf1 = x1^2 - 1\nf2 = x2 + x1^2 - 1"));
  CHECK(d.verdict == Verdict::HypothesisFailed);
  CHECK(d.failed_hypothesis == "injective");
  auto e = check_theorem_elim(parse_system("vars: x1 x2\nf1 = x1*x2\nf2 = x1*x2^2"));
  CHECK(e.failed_hypothesis == "zero_dimensional");
}

TEST_CASE("subresultant theorem on fixtures")
{
  auto a = check_theorem_slm2(fixture("intro"));
  CHECK(a.verdict == Verdict::Consistent);
  for (const auto& c : a.conditions)
    CHECK(c.value);
  CHECK(a.flag("partial_elimination"));

  auto b = check_theorem_slm2(fixture("cubic_shape"));
  CHECK(b.verdict == Verdict::Consistent);
  for (const auto& c : b.conditions)
    CHECK_FALSE(c.value);

  auto c = check_theorem_slm2(fixture("shared_leading"));
  CHECK(c.verdict == Verdict::Consistent);
  for (const auto& k : c.conditions)
    CHECK_FALSE(k.value);
  CHECK(c.flag("shape"));
  CHECK(c.flag("generated_by_R_and_p"));
  CHECK_FALSE(c.flag("elim_by_R"));
  CHECK(c.find("gcd_R_s0_one").evidence == "x2");

  auto d = check_theorem_slm2(fixture("point_at_infinity"));
  CHECK(d.failed_hypothesis == "rho_positive");
}

TEST_CASE("generated-by-resultant theorem on fixtures")
{
  auto a = check_theorem_rshape(fixture("shared_leading"));
  CHECK(a.verdict == Verdict::Consistent);
  CHECK(a.flag("gcd_all_one"));
  CHECK(a.flag("shape"));
  CHECK_FALSE(a.flag("elim_by_R"));
  CHECK_FALSE(a.flag("gcd_R_s0_one"));
  CHECK_FALSE(a.flag("no_infinity"));
  CHECK(a.find("gcd_R_s0_one").evidence == "x2");

  auto b = check_theorem_rshape(fixture("intro"));
  CHECK(b.verdict == Verdict::Consistent);
  CHECK(b.flag("elim_by_R"));
  CHECK(b.flag("gcd_R_s0_one"));
  CHECK(b.flag("no_infinity"));

  auto c = check_theorem_rshape(fixture("cubic_shape"));
  CHECK(c.verdict == Verdict::HypothesisFailed);
  CHECK(c.failed_hypothesis == "generated_by_R_and_p");
}

TEST_CASE("two-variable criterion")
{
  auto a = check_prop_n2(fixture("generic_bezout"));
  CHECK(a.verdict == Verdict::Consistent);
  CHECK(a.find("squarefree").evidence == "disc = 384126317");
  CHECK(a.flag("shape"));
  CHECK(a.flag("generated_by_R_and_p"));
  CHECK(a.flag("elim_by_R"));

  auto b = check_prop_n2(fixture("shared_leading"));
  CHECK(b.verdict == Verdict::HypothesisFailed);
  CHECK(b.failed_hypothesis == "degree_product");
  auto c = check_prop_n2(fixture("intro"));
  CHECK(c.failed_hypothesis == "degree_product");
  CHECK(check_prop_n2(fixture("linear_quadric")).verdict == Verdict::Consistent);
}

TEST_CASE("no theorem verdict is ever a violation on fixtures")
{
  for (const char* name : kAll) {
    CAPTURE(name);
    auto s = fixture(name);
    CHECK(check_theorem_elim(s).verdict != Verdict::Violation);
    CHECK(check_theorem_slm2(s).verdict != Verdict::Violation);
    CHECK(check_theorem_rshape(s).verdict != Verdict::Violation);
    CHECK(check_prop_n2(s).verdict != Verdict::Violation);
  }
}

TEST_CASE("coprime subresultants force a Shape Lemma")
{
  for (const char* name : kAll) {
    CAPTURE(name);
    auto s = fixture(name);
    if (s.rho < 1)
      continue;
    auto d = first_subresultant_polys(s);
    std::vector<UPoly> all{hidden_variable_resultant(s).poly};
    all.insert(all.end(), d.s.begin(), d.s.end());
    const Ideal I = system_ideal(s);
    if (upoly_gcd(all).is_one() && I.is_zero_dimensional())
      CHECK(has_shape_lemma(I));
  }
}

TEST_CASE("local lengths against root multiplicities")
{
  // With a Shape Lemma, each rational point's length is the multiplicity of
  // its last coordinate in r; without one, some point disagrees or some
  // fiber has degree above one.
  for (const char* name : kAll) {
    CAPTURE(name);
    auto s = fixture(name);
    const Ideal I = system_ideal(s);
    if (!I.is_zero_dimensional() || !projection_injective(I))
      continue;
    const auto affine = chart_decomposition(s)[0];
    const UPoly r = univariate_eliminant(I, s.hidden());
    const auto shape = has_shape_lemma(I);
    bool all_match = true;
    bool fibers_small = true;
    for (const auto& root : rational_roots(r)) {
      fibers_small = fibers_small && fiber_degree(I, root.root) <= 1;
      for (const auto& pt : chart_points(affine))
        if (pt[s.hidden()] == root.root)
          all_match = all_match && multiplicity_at_point(affine, pt) == root.multiplicity;
    }
    if (shape) {
      CHECK(all_match);
      CHECK(fibers_small);
    } else {
      CHECK_FALSE((all_match && fibers_small));
    }
  }
}
