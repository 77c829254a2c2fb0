#include <doctest.h>

#include "support.hpp"

#include <shapelemma/errors.hpp>

#include <algorithm>
#include <random>

using namespace shapelemma;
using testing::fixture;
using testing::P;
using testing::strings;
using testing::system_ideal;

namespace {

using V = std::vector<std::string>;

Ideal affine(std::size_t nvars, std::initializer_list<const char*> gens)
{
  std::vector<MPoly> g;
  for (const char* s : gens)
    g.push_back(P(s, nvars));
  return Ideal::affine(nvars, std::move(g));
}

// Every S-polynomial of the basis reduces to zero.
bool is_groebner(const std::vector<MPoly>& G, const MonomialOrder& order)
{
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      const Term& a = leading_term(G[i], order);
      const Term& b = leading_term(G[j], order);
      const Monomial l = a.mono.lcm(b.mono);
      MPoly s = G[i].mul_monomial(l / a.mono) * Rational(1 / a.coeff) -
                G[j].mul_monomial(l / b.mono) * Rational(1 / b.coeff);
      if (!normal_form(s, G, order).is_zero())
        return false;
    }
  return true;
}

}  // namespace

TEST_CASE("lex bases of fixtures")
{
  CHECK(strings(system_ideal(fixture("intro")).lex_basis()) == V{"x2^3 + 2*x2 - 1", "x1 - x2^2 - 1"});
  CHECK(strings(affine(3, {"x1 + x2", "x1 - x2"}).lex_basis()) == V{"x2", "x1"});
  CHECK(strings(system_ideal(fixture("line_at_infinity")).lex_basis()) ==
        V{"x3^2 + 6*x3", "x2 + 1/9*x3", "x1 + 2/9*x3 + 1"});
  CHECK(strings(system_ideal(fixture("quartic")).lex_basis()) ==
        V{"x2^5 + 3*x2^4 - x2^3 - 5*x2^2 + 6*x2", "x1 + 1/4*x2^4 + 3/4*x2^3 + 1/4*x2^2 - 1/4*x2 + 1"});
  CHECK(strings(system_ideal(fixture("cubic_shape")).lex_basis()) ==
        V{"x3^3 + x3 + 2", "x2 - 1/2*x3^2 - 1/2", "x1 - 1/2*x3^2 - 1/2"});
  CHECK(strings(system_ideal(fixture("generic_bezout")).lex_basis()) ==
        V{"x2^9 + x2^2 + 2*x2 + 1", "x1 + x2^8 - x2^7 + x2^6 + x2 + 1"});
}

TEST_CASE("grevlex bases match an independent oracle")
{
  CHECK(strings(system_ideal(fixture("intro")).grevlex_basis()) ==
        V{"-x1 + x2^2 + 1", "x1*x2 + x2 - 1", "x1^2 - x2 - 1"});
  CHECK(strings(system_ideal(fixture("cubic_shape")).grevlex_basis()) ==
        V{"x1 - x2", "-2*x2 + x3^2 + 1", "x2*x3 + 1", "x2^2 - 1/2*x2 + 1/2*x3"});
  CHECK(strings(system_ideal(fixture("generic_bezout")).grevlex_basis()) == V{"x1^2 + x2^3", "x1^3 + x2 + 1"});
}

TEST_CASE("bases are unique and Groebner")
{
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<MPoly> gens;
    for (int k = 0; k < 3; ++k) {
      MPoly f(4);
      for (int e1 = 0; e1 <= 2; ++e1)
        for (int e2 = 0; e2 + e1 <= 2; ++e2)
          for (int e3 = 0; e3 + e2 + e1 <= 2; ++e3)
            if (int v = c(rng); v != 0 && (e1 + e2 + e3 + trial + k) % 2 == 0)
              f += MPoly::monomial(Monomial{0, static_cast<std::uint32_t>(e1), static_cast<std::uint32_t>(e2),
                                            static_cast<std::uint32_t>(e3)},
                                   v);
      gens.push_back(f);
    }
    auto shuffled = gens;
    std::reverse(shuffled.begin(), shuffled.end());
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elimination(2)}) {
      auto G = buchberger(gens, order);
      CHECK(G == buchberger(shuffled, order));
      CHECK(is_groebner(G, order));
      for (const auto& f : gens)
        CHECK(normal_form(f, G, order).is_zero());
    }
    const Ideal I = Ideal::affine(4, gens);
    if (I.is_zero_dimensional())
      CHECK(I.lex_basis() == buchberger(gens, MonomialOrder::lex()));
  }
}

TEST_CASE("elimination")
{
  const Ideal q = system_ideal(fixture("quartic"));
  CHECK(strings(elimination_ideal(q, 1u << 2).generators()) == V{"x2^5 + 3*x2^4 - x2^3 - 5*x2^2 + 6*x2"});
  CHECK(strings(elimination_ideal(affine(3, {"x1 - 1", "x2 - 2"}), 1u << 2).generators()) == V{"x2 - 2"});
  CHECK(univariate_eliminant(system_ideal(fixture("point_at_infinity")), 2).to_string() == "x2 + 5");
  CHECK(univariate_eliminant(system_ideal(fixture("point_at_infinity")), 1).to_string() == "x1 + 1/2");
  // not zero-dimensional: the block-order path
  const Ideal curve = affine(4, {"x1 - x2*x3", "x2^2 - x3"});
  CHECK(strings(elimination_ideal(curve, (1u << 1) | (1u << 3)).generators()) == V{"-x1^2 + x3^3"});
  CHECK(univariate_eliminant(curve, 3).is_zero());
}

TEST_CASE("membership")
{
  const Ideal I = system_ideal(fixture("intro"));
  CHECK(ideal_member(P("x2*x1 + x2 - 1", 3), I));
  CHECK(ideal_member(P("-x2^3 - 2*x2 + 1", 3), I));
  CHECK_FALSE(ideal_member(P("x2 - 1", 3), I));
  CHECK_FALSE(ideal_member(P("1", 3), affine(3, {"x1", "x2"})));
}

TEST_CASE("quotient dimension")
{
  CHECK(quotient_dim(affine(3, {"x1^2", "x2^2"})) == 4u);
  CHECK(quotient_dim(affine(3, {"x1 - 1", "x2"})) == 1u);
  CHECK(quotient_dim(system_ideal(fixture("line_at_infinity"))) == 2u);
  CHECK(quotient_dim(system_ideal(fixture("generic_bezout"))) == 9u);
  CHECK(quotient_dim(affine(3, {"x1*x2"})) == std::nullopt);
  CHECK(quotient_dim(affine(3, {"x1", "x1 + 1"})) == 0u);
  CHECK(quotient_dim(Ideal::full(3, {P("x0^2", 3), P("x1", 3), P("x2^3", 3)})) == 6u);
}

TEST_CASE("saturation")
{
  const Ideal s = saturation(affine(3, {"x1*x2"}), P("x1", 3));
  CHECK(strings(s.grevlex_basis()) == V{"x2"});
  CHECK(saturation(affine(3, {"x2^2", "x2*x1 - 1"}), P("x2", 3)).is_unit());
  CHECK(saturation(affine(3, {"x2^2"}), P("x2", 3)).is_unit());
  const Ideal I = affine(3, {"x1^2*x2", "x2^3*(x2 - 1)"});
  const Ideal S = saturation(I, P("x2", 3));
  CHECK(strings(S.grevlex_basis()) == V{"x2 - 1", "x1^2"});
  for (const auto& g : I.generators())
    CHECK(S.contains(g));
}

TEST_CASE("radical")
{
  CHECK(strings(radical_zero_dim(affine(3, {"x1^2", "x2^2"})).grevlex_basis()) == V{"x2", "x1"});
  const Ideal q = system_ideal(fixture("quartic"));
  CHECK(ideal_equal(radical_zero_dim(q), q));
  const Ideal r = radical_zero_dim(affine(3, {"(x2 + 1)^3", "x1 - x2"}));
  CHECK(ideal_equal(r, affine(3, {"x2 + 1", "x1 - x2"})));
  CHECK_THROWS_AS(radical_zero_dim(affine(3, {"x1*x2"})), Error);
}

TEST_CASE("ideal equality")
{
  CHECK(ideal_equal(system_ideal(fixture("intro")), affine(3, {"-x2^3 - 2*x2 + 1", "x2*x1 + x2 - 1"})));
  CHECK_FALSE(ideal_equal(affine(3, {"x1"}), affine(3, {"x1^2"})));
  CHECK(ideal_equal(affine(3, {"x2^3*(x2 + 1)", "x2*x1 + 1"}), affine(3, {"x2 + 1", "x1 - 1"})));
}

TEST_CASE("lex ideal equality")
{
  CHECK(ideal_equal_lex(affine(3, {"x1 - x2", "x2^2 - 1"}), affine(3, {"x1^2 - 1", "x1 - x2"})));
  CHECK_FALSE(ideal_equal_lex(affine(3, {"x1 - x2", "x2^2 - 1"}), affine(3, {"x1 - x2", "x2 - 1"})));
  CHECK(ideal_equal_lex(system_ideal(fixture("intro")), affine(3, {"-x2^3 - 2*x2 + 1", "x2*x1 + x2 - 1"})));
  CHECK(ideal_equal_lex(affine(3, {"x1", "x1 + 1"}), affine(3, {"1"})));
}

TEST_CASE("multiplication matrices")
{
  // Q[x1]/<x1^2 - 2> on 1, x1
  auto m = multiplication_matrix(affine(2, {"x1^2 - 2"}), P("x1", 2));
  CHECK(m == Matrix{{0, 2}, {1, 0}});
  CHECK(multiplication_matrix(affine(2, {"x1^2 - 2"}), P("x1^3 + 1", 2)) == Matrix{{1, 4}, {2, 1}});

  // multiplication maps commute and x2 has the eigenvalues of the x2-coordinates
  const Ideal I = system_ideal(fixture("intro"));
  const auto a = multiplication_matrix(I, P("x1", 3));
  const auto b = multiplication_matrix(I, P("x2", 3));
  REQUIRE(a.size() == 3);
  auto mul = [](const Matrix& x, const Matrix& y) {
    Matrix z(x.size(), std::vector<Rational>(y[0].size()));
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t k = 0; k < y.size(); ++k)
        for (std::size_t j = 0; j < y[0].size(); ++j)
          z[i][j] += x[i][k] * y[k][j];
    return z;
  };
  CHECK(mul(a, b) == mul(b, a));
  Matrix neg = b;
  for (auto& row : neg)
    for (auto& x : row)
      x = -x;
  CHECK(shifted_determinant(neg, "x2").to_string() == "x2^3 + 2*x2 - 1");
  CHECK_THROWS_AS(multiplication_matrix(affine(3, {"x1*x2"}), P("x1", 3)), Error);
}

TEST_CASE("rational points")
{
  auto pts = rational_points(system_ideal(fixture("line_at_infinity")));
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == std::vector<Rational>{0, -1, 0, 0});
  CHECK(pts[1] == std::vector<Rational>{0, make_rational(1, 3), make_rational(2, 3), -6});
  CHECK(rational_points(system_ideal(fixture("quartic"))).size() == 1);
  CHECK(rational_points(system_ideal(fixture("linear_quadric"))).empty());
}

TEST_CASE("work limit")
{
  setenv("SHAPELEMMA_MAX_PAIRS", "1", 1);
  CHECK_THROWS_AS(buchberger({P("x1^2 + x2", 3), P("x1*x2 + 1", 3), P("x2^3 - x1", 3)}, MonomialOrder::grevlex()),
                  Error);
  unsetenv("SHAPELEMMA_MAX_PAIRS");
  CHECK(max_pairs_from_env() == 100000);
}
