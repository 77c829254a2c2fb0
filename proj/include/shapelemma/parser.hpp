#ifndef SHAPELEMMA_PARSER_HPP
#define SHAPELEMMA_PARSER_HPP

#include <shapelemma/mpoly.hpp>
#include <shapelemma/system.hpp>

#include <string_view>

namespace shapelemma {

// Reads
//   vars: x1 x2 ... xn
//   f1 = <expr>
//   ...
//   fn = <expr>
// with '#' comments and blank lines allowed anywhere. Throws ParseError,
// ArityMismatch or DegenerateDegree.
PolySystem parse_system(std::string_view text);

// A single expression over x0..x{nvars-1}.
MPoly parse_polynomial(std::string_view text, std::size_t nvars);

// "a" or "a/b".
Rational parse_rational(std::string_view text);

}  // namespace shapelemma

#endif
