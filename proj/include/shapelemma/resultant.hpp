#ifndef SHAPELEMMA_RESULTANT_HPP
#define SHAPELEMMA_RESULTANT_HPP

#include <shapelemma/linalg.hpp>
#include <shapelemma/mpoly.hpp>
#include <shapelemma/system.hpp>
#include <shapelemma/upoly.hpp>

#include <string>
#include <vector>

namespace shapelemma {

// Matrix of the multiples of f_1^h..f_n^h in degree D, with entries in
// Q[xn]. Columns are the monomials of degree D in x0..x_{n-1}, lex
// descending. Row k belongs to the monomial columns[k] and holds
// columns[k] / x_{i-1}^{d_i} * f_i^h for the minimal such i; monomials
// with no such i get no row.
struct MacaulayMatrix {
  struct Row {
    std::size_t column;  // index of the row monomial
    std::size_t poly;    // zero-based i
  };

  int degree = 0;
  std::size_t hidden = 0;  // slot of xn
  std::vector<Monomial> columns;
  std::vector<Row> rows;
  std::vector<std::vector<UPoly>> entries;
  // Row indices of the non-reduced monomials (divisible by two or more
  // x_{i-1}^{d_i}); the same positions index the columns of the minor.
  std::vector<std::size_t> minor;
  // Columns without a row.
  std::vector<std::size_t> reduced;

  Matrix evaluate(const Rational& t) const;
  Matrix evaluate_minor(const Rational& t) const;
  // Max over rows of the xn-degree of the entries, summed over rows.
  int row_degree_sum() const;
  int minor_degree_sum() const;
};

MacaulayMatrix macaulay_matrix(const PolySystem& s, int degree);
// The same for forms f_1^h..f_n^h of degrees d_i in x0..x_{n-1}.
MacaulayMatrix macaulay_matrix(const std::vector<MPoly>& forms, const std::vector<int>& degrees, int degree);

// Monomials of degree D in slots [0, n), lex descending.
std::vector<Monomial> monomials_of_degree(std::size_t nslots, std::size_t n, int degree);

struct HiddenVarResultant {
  UPoly poly;
  int degree_bound = 0;
  std::string method;
};

// sum_i deg_xn(f_i) * prod_{j != i} d_j
int resultant_degree_bound(const PolySystem& s);

// Needs n = 2. Rows of f1 first, descending powers of x1.
HiddenVarResultant sylvester_resultant(const PolySystem& s);
HiddenVarResultant sylvester_resultant(const MPoly& f1, const MPoly& f2);

// det M / det M' at D = rho + 1 by evaluation at 0, 1, -1, 2, ... When
// the minor vanishes identically the homogeneous variables are permuted
// (changing the result by the sign of the permutation to the power
// d_1 ... d_n), and if every ordering degenerates the system is perturbed
// to f_i^h + u x_{i-1}^{d_i} and u is sent to 0.
HiddenVarResultant macaulay_resultant(const PolySystem& s);
// The perturbed formula on the original ordering, whatever the minor.
HiddenVarResultant macaulay_perturbed_resultant(const PolySystem& s);

// Sylvester for n = 2, Macaulay otherwise.
HiddenVarResultant hidden_variable_resultant(const PolySystem& s);

// "x3^7*(x3 + 6)": content, then squarefree factors split at rational
// roots, ascending by degree.
std::string factored_string(const UPoly& p);

}  // namespace shapelemma

#endif
