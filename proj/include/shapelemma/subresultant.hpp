#ifndef SHAPELEMMA_SUBRESULTANT_HPP
#define SHAPELEMMA_SUBRESULTANT_HPP

#include <shapelemma/resultant.hpp>

#include <vector>

namespace shapelemma {

// The Macaulay matrix in the critical degree rho: N - 1 rows, N columns,
// the one reduced column being prod x_{i-1}^{d_i - 1}. Throws
// CriticalDegreeZero when rho = 0.
MacaulayMatrix critical_matrix(const PolySystem& s);

struct SubresultantData {
  int rho = 0;
  std::vector<Monomial> monomials;  // degree-rho monomials, lex descending
  std::vector<UPoly> s_alpha;       // parallel to monomials
  std::vector<UPoly> s;             // s_0 .. s_{n-1}
  std::vector<MPoly> p;             // p_1 .. p_{n-1}
  bool sign_normalized = true;
  bool flipped = false;  // the raw cofactors were negated
  bool perturbed = false;  // det M' vanished in every variable ordering

  const UPoly& at(const Monomial& alpha) const;
};

// Every s_alpha of degree rho, as signed maximal minors divided by det M',
// globally normalized so that the first nonzero of s_0, s_1, ... has
// positive leading coefficient. When det M' vanishes identically the
// variables x0..x_{n-1} are permuted, and failing that the system is
// perturbed to f_i^h + u x_{i-1}^{d_i} and u is sent to 0. For rho = 0 the
// single value is 1.
SubresultantData scalar_subresultants(const PolySystem& s);
// Always the perturbed formula on the original ordering.
SubresultantData perturbed_subresultants(const PolySystem& s);

// s_alpha for one monomial of degree rho. Throws WrongDegree.
UPoly scalar_subresultant(const PolySystem& s, const Monomial& alpha);

// s_alpha and p_i = s_0 x_i - s_i with s_i = s_{x0^{rho-1} x_i}. Throws
// CriticalDegreeZero.
SubresultantData first_subresultant_polys(const PolySystem& s);

// x0^{rho-1} x_i (i = 0 gives x0^rho) in the system's ring.
Monomial alpha_index(const PolySystem& s, std::size_t i);

}  // namespace shapelemma

#endif
