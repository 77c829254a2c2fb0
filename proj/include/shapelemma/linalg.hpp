#ifndef SHAPELEMMA_LINALG_HPP
#define SHAPELEMMA_LINALG_HPP

#include <shapelemma/rational.hpp>
#include <shapelemma/upoly.hpp>

#include <optional>
#include <vector>

namespace shapelemma {

using Matrix = std::vector<std::vector<Rational>>;

// Bareiss elimination over Z after clearing row denominators.
Rational determinant(const Matrix& m);

// det(M + u*I) as a polynomial in u, via the Hessenberg form.
UPoly shifted_determinant(const Matrix& m, const std::string& var = "u");

// Rank of an arbitrary rectangular matrix.
std::size_t rank(Matrix m);

// A nonzero kernel vector of an (N-1) x N matrix of full rank, scaled so
// that its last nonzero entry is 1; nullopt when the rank is deficient.
std::optional<std::vector<Rational>> corank_one_kernel(const Matrix& m);

// Basis of the right kernel of a matrix with the given number of columns,
// one vector per non-pivot column.
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m, std::size_t cols);

// X with A X = B for A of full column rank and B in its column space.
Matrix solve_full_rank(const Matrix& a, const Matrix& b);

// Newton divided differences through (xs[k], ys[k]); xs must be distinct.
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys, const std::string& var);

// 0, 1, -1, 2, -2, ...
Rational sample_point(std::size_t k);

}  // namespace shapelemma

#endif
