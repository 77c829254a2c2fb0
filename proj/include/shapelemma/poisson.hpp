#ifndef SHAPELEMMA_POISSON_HPP
#define SHAPELEMMA_POISSON_HPP

#include <shapelemma/groebner.hpp>
#include <shapelemma/system.hpp>

#include <span>
#include <string>
#include <vector>

namespace shapelemma {

// One piece of V(f_1^h, .., f_n^h). Pivot 0 is the affine chart x0 = 1;
// pivot i >= 1 holds the points with x0 = .. = x_{i-1} = 0 and x_i = 1.
// Both ideals live in the ring of x0..xn.
struct ChartIdeal {
  std::size_t pivot = 0;
  // Coordinates substituted away: the points of the chart as a set.
  Ideal points;
  // f^h at x_pivot = 1 over every other slot; the system itself for the
  // affine chart. Zero-dimensional when has_length.
  Ideal scheme;
  // Columns spanning the part of Q[x]/scheme where the coordinates before
  // the pivot are nilpotent, over the grevlex standard monomials.
  Matrix local;
  bool finite = false;
  // Every point of the chart is isolated in V, so lengths are defined:
  // the affine chart when finite, an infinity chart when all charts are.
  bool has_length = false;

  std::size_t length() const { return local.empty() ? 0 : local[0].size(); }
  std::string name() const;
};

std::vector<ChartIdeal> chart_decomposition(const PolySystem& s);

bool is_variety_finite(const PolySystem& s);

// Rational points of the chart as full slot vectors (pivot coordinate 1).
std::vector<std::vector<Rational>> chart_points(const ChartIdeal& c);

// Length of the local ring at xi (one coordinate per slot). Throws
// NotZeroDimensional, NotOnVariety, StabilizationFailure.
std::size_t multiplicity_at_point(const ChartIdeal& c, std::span<const Rational> xi);

// Summed local lengths over the points whose last coordinate is a root of
// q; q must be squarefree. Throws NotZeroDimensional, StabilizationFailure.
std::size_t factor_length(const ChartIdeal& c, const UPoly& q);

// factor_length / deg q for q certified irreducible. Throws NotIrreducible.
std::size_t factor_multiplicity(const ChartIdeal& c, const UPoly& q);

struct PoissonFactor {
  UPoly q;  // monic, squarefree
  int exponent = 0;
  bool irreducible = false;
  std::vector<std::size_t> lengths;  // factor_length per chart
  std::size_t accounted = 0;         // sum of lengths / deg q
  bool matches = false;
};

struct PoissonReport {
  bool finite = false;
  UPoly R;
  Rational c;  // leading coefficient of R
  std::vector<std::string> charts;
  std::vector<std::size_t> chart_lengths;
  std::vector<PoissonFactor> factors;
  bool pass = false;  // only meaningful when finite
};

// Splits R into squarefree pieces (rational roots separated) and checks
// each exponent against the summed local lengths of all charts.
PoissonReport verify_poisson(const PolySystem& s);

// dim I + <xn - lambda> with xn the ideal's last variable. Throws
// NotZeroDimensional.
std::size_t fiber_degree(const Ideal& I, const Rational& lambda);

}  // namespace shapelemma

#endif
