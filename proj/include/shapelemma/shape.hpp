#ifndef SHAPELEMMA_SHAPE_HPP
#define SHAPELEMMA_SHAPE_HPP

#include <shapelemma/groebner.hpp>
#include <shapelemma/system.hpp>

#include <optional>
#include <string>
#include <vector>

namespace shapelemma {

// <r(xn), x_i - g_i(xn)> with r monic and deg g_i < deg r. The unit ideal
// is represented by r = 1 and every g_i = 0.
struct ShapeBasis {
  std::size_t nvars = 0;
  std::size_t last = 0;           // slot of xn
  std::vector<std::size_t> vars;  // slots of the other variables, ascending
  UPoly r;
  std::vector<UPoly> g;  // parallel to vars

  std::vector<MPoly> generators() const;
  Ideal ideal() const;
};

// Reads the shape off the reduced lex basis. Throws NotZeroDimensional.
std::optional<ShapeBasis> has_shape_lemma(const Ideal& I);

// Distinct points have distinct last coordinates, over the algebraic
// closure. Throws NotZeroDimensional.
bool projection_injective(const Ideal& I);

// Points at infinity with first nonzero coordinate x_pivot (set to 1).
struct InfinityChart {
  std::size_t pivot = 0;
  Ideal ideal;  // active slots pivot+1 .. n
  bool empty = false;
  bool finite = false;
  std::vector<std::vector<Rational>> points;  // rational points, full slot vectors
};

struct InfinityReport {
  bool exists = false;
  bool finite = true;
  // Slots i whose saturation of the ideal at x0 = 0 is proper.
  std::vector<std::size_t> saturation_witnesses;
  std::vector<InfinityChart> charts;
};

InfinityReport solutions_at_infinity(const PolySystem& s);

// Monic gcd of the x1-leading coefficients. Throws WrongArity unless n = 2.
UPoly gcd_leading_coeffs(const PolySystem& s);

struct ParametricShape {
  bool unit = false;
  ShapeBasis basis;
  int steps = 0;
};

// Shape basis of <d, d0 x_i - d_i> by repeated gcd splitting. Slots follow
// the system convention: x_i is slot i, xn is slot ds.size() + 1.
// Throws ZeroModulus for d = 0, GcdNotOne when gcd(d, d0, d_i) != 1.
ParametricShape shape_from_parametric(const UPoly& d, const UPoly& d0, const std::vector<UPoly>& ds);

enum class Verdict { Consistent, HypothesisFailed, Violation };

const char* verdict_name(Verdict v);

struct Condition {
  std::string name;
  bool value = false;
  std::string evidence;
};

struct TheoremReport {
  std::string theorem;
  std::vector<Condition> hypotheses;
  std::vector<Condition> conditions;
  std::vector<Condition> details;
  Verdict verdict = Verdict::Consistent;
  std::string failed_hypothesis;
  std::string message;

  // Looks in conditions, details and hypotheses; throws std::out_of_range.
  bool flag(const std::string& name) const;
  const Condition& find(const std::string& name) const;
};

// Shape Lemma, no solutions at infinity, elimination ideal generated by
// the resultant: any two imply the third.
TheoremReport check_theorem_elim(const PolySystem& s);

// Equivalence of (shape and no infinity), (elimination by R and
// gcd(R, s0) = 1), (I = <R, p_i> and elimination by R), plus partial
// elimination ideals when all hold.
TheoremReport check_theorem_slm2(const PolySystem& s);

// Under I = <R, p_i>: gcd(R, s_0..s_{n-1}) = 1 and a Shape Lemma; then
// elimination by R, gcd(R, s0) = 1 and no infinity are equivalent.
TheoremReport check_theorem_rshape(const PolySystem& s);

// n = 2: deg R = deg f1 * deg f2 with R squarefree forces every condition
// of check_theorem_slm2.
TheoremReport check_prop_n2(const PolySystem& s);

}  // namespace shapelemma

#endif
