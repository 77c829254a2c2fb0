#ifndef SHAPELEMMA_GROEBNER_HPP
#define SHAPELEMMA_GROEBNER_HPP

#include <shapelemma/linalg.hpp>
#include <shapelemma/mpoly.hpp>
#include <shapelemma/upoly.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace shapelemma {

// Reduced Groebner basis, monic, sorted by ascending leading monomial.
// Honors SHAPELEMMA_MAX_PAIRS (default 100000 S-pairs) and throws
// WorkLimitExceeded past it.
std::vector<MPoly> buchberger(const std::vector<MPoly>& gens, const MonomialOrder& order);

// Full reduction of f modulo basis under order.
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis, const MonomialOrder& order);

// Leading term under an arbitrary order; f must be nonzero.
const Term& leading_term(const MPoly& f, const MonomialOrder& order);

std::size_t max_pairs_from_env();

// An ideal of Q[x_k : k in active]. Slots outside the mask must not occur
// in the generators; they are ignored by dimension counts. Bases are
// computed lazily, once, and shared between copies.
class Ideal {
public:
  Ideal() = default;
  Ideal(std::size_t nvars, std::uint32_t active, std::vector<MPoly> gens);

  // Ideal of Q[x1..x{nvars-1}], the ring of a parsed system.
  static Ideal affine(std::size_t nvars, std::vector<MPoly> gens);
  // Ideal of Q[x0..x{nvars-1}].
  static Ideal full(std::size_t nvars, std::vector<MPoly> gens);

  std::size_t nvars() const { return nvars_; }
  std::uint32_t active() const { return active_; }
  bool is_active(std::size_t slot) const { return (active_ >> slot) & 1u; }
  // Smallest active variable under lex, i.e. the highest active slot.
  std::size_t last_var() const;
  const std::vector<MPoly>& generators() const { return gens_; }

  const std::vector<MPoly>& grevlex_basis() const;
  const std::vector<MPoly>& lex_basis() const;

  bool contains(const MPoly& f) const;
  bool is_unit() const;
  bool is_zero_dimensional() const;
  // Quotient dimension over the active variables; nullopt when infinite.
  std::optional<std::size_t> dimension() const;

  Ideal plus(const std::vector<MPoly>& more) const;

private:
  struct Cache;

  std::size_t nvars_ = 0;
  std::uint32_t active_ = 0;
  std::vector<MPoly> gens_;
  std::shared_ptr<Cache> cache_;
};

std::vector<MPoly> groebner_basis(const Ideal& I, const MonomialOrder& order);

// Generators of I intersected with Q[x_k : k in keep].
Ideal elimination_ideal(const Ideal& I, std::uint32_t keep);

// Monic generator of I intersected with Q[x_slot]; the zero polynomial when
// the intersection is trivial.
UPoly univariate_eliminant(const Ideal& I, std::size_t slot);

bool ideal_member(const MPoly& f, const Ideal& I);

// Quotient dimension over the active variables; nullopt when infinite.
std::optional<std::size_t> quotient_dim(const Ideal& I);

// (I : g^inf). Needs a spare slot: nvars < kMaxVars.
Ideal saturation(const Ideal& I, const MPoly& g);

// Seidenberg radical of a zero-dimensional ideal. Throws NotZeroDimensional.
Ideal radical_zero_dim(const Ideal& I);

bool ideal_equal(const Ideal& I, const Ideal& J);
// Compares reduced lex bases computed directly from the generators, which
// is far cheaper than grevlex for nearly triangular generators.
bool ideal_equal_lex(const Ideal& I, const Ideal& J);

// Multiplication by f on Q[x]/I over the grevlex standard monomials;
// column k is the image of the k-th monomial. Throws NotZeroDimensional.
Matrix multiplication_matrix(const Ideal& I, const MPoly& f);

// Rational points of a zero-dimensional ideal, each with one coordinate per
// slot (inactive slots are zero). Sorted lexicographically by coordinates.
// Throws NotZeroDimensional.
std::vector<std::vector<Rational>> rational_points(const Ideal& I);

}  // namespace shapelemma

#endif
