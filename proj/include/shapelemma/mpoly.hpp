#ifndef SHAPELEMMA_MPOLY_HPP
#define SHAPELEMMA_MPOLY_HPP

#include <shapelemma/rational.hpp>
#include <shapelemma/upoly.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace shapelemma {

// Variables are positional: slot k is printed as "xk". Slot 0 is x0, the
// homogenizing variable; user systems in x1..xn live in rings with n + 1
// slots and never touch slot 0.
inline constexpr std::size_t kMaxVars = 10;

std::string var_name(std::size_t slot);

class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<std::uint32_t> exps);
  static Monomial variable(std::size_t nvars, std::size_t slot, std::uint32_t e = 1);

  std::size_t size() const { return nvars_; }
  std::uint32_t operator[](std::size_t k) const { return exps_[k]; }
  void set(std::size_t k, std::uint32_t e);
  std::uint32_t degree() const { return degree_; }
  // Sum of exponents over slots [first, last).
  std::uint32_t degree_in(std::size_t first, std::size_t last) const;

  bool divides(const Monomial& o) const;
  bool is_coprime(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  // Exact quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b)
  {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

  std::string to_string() const;

private:
  std::array<std::uint32_t, kMaxVars> exps_{};
  std::uint32_t degree_ = 0;
  std::uint32_t nvars_ = 0;
};

// Lex compares slots left to right (x0 > x1 > ... > xn). Grevlex is graded
// reverse lex. Block(k) compares slots [0, k) by grevlex first and breaks
// ties by grevlex on the remaining slots, which eliminates the first k.
struct MonomialOrder {
  enum class Kind { Lex, Grevlex, Block };
  Kind kind = Kind::Lex;
  std::size_t block = 0;

  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
  static MonomialOrder elimination(std::size_t k) { return {Kind::Block, k}; }
};

// <0, 0, >0 as a is smaller, equal, larger than b.
int compare(const Monomial& a, const Monomial& b, const MonomialOrder& order);

struct Term {
  Monomial mono;
  Rational coeff;
};

// Sparse polynomial over Q. Terms are kept sorted descending in lex order
// with no zero coefficients, so equality is structural.
class MPoly {
public:
  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
  MPoly(std::size_t nvars, std::vector<Term> terms);

  static MPoly constant(std::size_t nvars, const Rational& c);
  static MPoly variable(std::size_t nvars, std::size_t slot);
  static MPoly monomial(const Monomial& m, const Rational& c = 1);
  // p(x_slot) embedded into the ring
  static MPoly from_upoly(std::size_t nvars, std::size_t slot, const UPoly& p);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;

  // Largest term in lex; undefined for zero.
  const Term& leading_term() const { return terms_.front(); }

  int total_degree() const;
  int degree_in(std::size_t slot) const;
  // Max over terms of the degree restricted to slots [first, last).
  int degree_in_range(std::size_t first, std::size_t last) const;
  bool uses(std::size_t slot) const;
  // Bitmask of slots that appear.
  std::uint32_t support() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  MPoly pow(unsigned e) const;
  MPoly mul_monomial(const Monomial& m) const;
  MPoly monic_lex() const;

  friend bool operator==(const MPoly& a, const MPoly& b);

  // x_slot := value
  MPoly substitute(std::size_t slot, const Rational& value) const;
  // x_slot := p
  MPoly substitute(std::size_t slot, const MPoly& p) const;
  Rational evaluate(std::span<const Rational> point) const;

  // Moves slot k to slot perm[k] in a ring with new_nvars slots.
  MPoly remap(std::size_t new_nvars, std::span<const std::size_t> perm) const;

  // Univariate view; throws WrongArity if another slot appears.
  UPoly to_upoly(std::size_t slot) const;
  // Coefficients of powers of x_slot: result[j] is the coefficient of x_slot^j.
  std::vector<MPoly> coefficients_in(std::size_t slot) const;

  // Canonical text: lex descending, explicit '*' and '^', rationals as a/b.
  std::string to_string() const;

private:
  void normalize();

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

}  // namespace shapelemma

#endif
