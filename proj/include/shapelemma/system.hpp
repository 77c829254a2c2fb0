#ifndef SHAPELEMMA_SYSTEM_HPP
#define SHAPELEMMA_SYSTEM_HPP

#include <shapelemma/mpoly.hpp>
#include <shapelemma/upoly.hpp>

#include <string>
#include <vector>

namespace shapelemma {

// f1..fn in x1..xn, stored in rings with n + 1 slots (slot 0 unused).
// d[i] is the degree of polys[i] in x1..x_{n-1} only; rho = sum(d) - n.
struct PolySystem {
  std::vector<MPoly> polys;
  std::vector<int> degrees;
  std::vector<int> total_degrees;
  int rho = 0;

  // Validates n >= 2 and d_i >= 1 and fills the derived fields.
  static PolySystem from_polys(std::vector<MPoly> polys);

  std::size_t n() const { return polys.size(); }
  std::size_t nvars() const { return polys.size() + 1; }
  std::size_t hidden() const { return polys.size(); }

  // f_i^h for every i.
  std::vector<MPoly> homogenized() const;

  std::string to_string() const;
};

// Homogenizes with x0 up to degree d in x0..x_{n-1}; x_{nvars-1} is the
// hidden variable and does not count. Throws DegreeTooSmall.
MPoly homogenize_partial(const MPoly& f, int d);

// x0 := 0
MPoly restrict_to_infinity(const MPoly& fh);

// Coefficient of the top power of x1 as a polynomial in x2. Requires a
// two-variable system ring. Throws WrongArity.
UPoly leading_coeff_x1(const MPoly& f);

}  // namespace shapelemma

#endif
