#ifndef SHAPELEMMA_UPOLY_HPP
#define SHAPELEMMA_UPOLY_HPP

#include <shapelemma/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace shapelemma {

// Dense univariate polynomial over Q, lowest degree first. The coefficient
// vector never has a trailing zero, so the zero polynomial is the empty
// vector and degree() == -1 for it.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs, std::string var = "x");
  UPoly(std::initializer_list<Rational> coeffs, std::string var = "x");

  static UPoly constant(const Rational& c, std::string var = "x");
  // c * var^k
  static UPoly monomial(const Rational& c, std::size_t k, std::string var = "x");
  // var - root
  static UPoly linear(const Rational& root, std::string var = "x");

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const std::string& var() const { return var_; }
  UPoly with_var(std::string var) const;

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  // Coefficient of var^k; zero past the degree.
  Rational coeff(std::size_t k) const;
  Rational leading_coeff() const;

  Rational eval(const Rational& x) const;
  UPoly derivative() const;
  UPoly monic() const;
  UPoly pow(unsigned e) const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rational& c);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
  friend UPoly operator*(const Rational& c, UPoly a) { return a *= c; }

  // Equality ignores the variable tag.
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Canonical text: descending powers, explicit '*' and '^', e.g. "-x2^3 - 2*x2 + 1".
  std::string to_string() const;

private:
  void normalize();

  std::vector<Rational> coeffs_;
  std::string var_ = "x";
};

// Quotient and remainder; throws ZeroModulus for b == 0.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly operator/(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);
bool divides(const UPoly& d, const UPoly& a);

// Monic gcd; gcd(0, 0) = 0.
UPoly upoly_gcd(const UPoly& a, const UPoly& b);
UPoly upoly_gcd(const std::vector<UPoly>& polys);

struct ExtendedGcd {
  UPoly g;
  UPoly u;
  UPoly v;
};

// u*a + v*b = g with g the monic gcd and minimal-degree cofactors
// (deg u < deg b - deg g, deg v < deg a - deg g). Throws BothZero.
ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b);

// Inverse of a modulo m; throws GcdNotOne when they share a factor.
UPoly inverse_mod(const UPoly& a, const UPoly& m);

// Monic product of the distinct irreducible factors. Throws ZeroInput.
UPoly squarefree_part(const UPoly& a);

// Yun's decomposition: a = lc(a) * prod_k factors[k-1]^k with each factor
// monic, squarefree and pairwise coprime. Empty for constants. Throws ZeroInput.
std::vector<UPoly> squarefree_decomposition(const UPoly& a);

// Resultant of two univariate polynomials (Sylvester normalization).
Rational upoly_resultant(const UPoly& a, const UPoly& b);

// (-1)^{m(m-1)/2} Res(a, a') / lc(a). Throws DegreeZero for constants.
Rational discriminant(const UPoly& a);

struct RationalRoot {
  Rational root;
  unsigned multiplicity;
  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

// All rational roots with exact multiplicities, ascending. Throws ZeroInput.
std::vector<RationalRoot> rational_roots(const UPoly& a);

struct FactorPower {
  UPoly q;  // monic
  unsigned exponent;
};

// a = lc(a) * prod q^e: the squarefree decomposition with every rational
// root split off as its own linear factor. Sorted by degree, then text.
// Empty for constants. Throws ZeroInput.
std::vector<FactorPower> split_factors(const UPoly& a);

// True only when irreducibility over Q is proven: degree one, degree two or
// three without rational roots, or irreducible modulo some small prime of
// good reduction. False means reducible or not certified.
bool certified_irreducible(const UPoly& a);

// Primitive integer polynomial with positive leading coefficient, same roots.
std::vector<Integer> primitive_integer_coeffs(const UPoly& a);

}  // namespace shapelemma

#endif
