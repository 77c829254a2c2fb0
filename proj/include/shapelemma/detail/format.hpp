#ifndef SHAPELEMMA_DETAIL_FORMAT_HPP
#define SHAPELEMMA_DETAIL_FORMAT_HPP

#include <shapelemma/rational.hpp>

#include <string>

namespace shapelemma::detail {

// Appends "c*mono" to out as the next term of a sum, choosing " + " or " - "
// from the sign of c. An empty mono means a constant term.
inline void append_term(std::string& out, const Rational& c, const std::string& mono)
{
  const bool negative = sgn(c) < 0;
  const Rational mag = abs(c);
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (mono.empty()) {
    out += mag.get_str();
  } else if (mag == 1) {
    out += mono;
  } else {
    out += mag.get_str();
    out += '*';
    out += mono;
  }
}

inline std::string power_string(const std::string& var, unsigned e)
{
  if (e == 0)
    return {};
  if (e == 1)
    return var;
  return var + "^" + std::to_string(e);
}

}  // namespace shapelemma::detail

#endif
