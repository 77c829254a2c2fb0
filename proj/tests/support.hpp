#ifndef SHAPELEMMA_TESTS_SUPPORT_HPP
#define SHAPELEMMA_TESTS_SUPPORT_HPP

#include <shapelemma/groebner.hpp>
#include <shapelemma/parser.hpp>

#include <fstream>
#include <sstream>
#include <string>

#ifndef SHAPELEMMA_FIXTURE_DIR
#define SHAPELEMMA_FIXTURE_DIR "fixtures"
#endif

namespace testing {

inline std::string read_file(const std::string& path)
{
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline shapelemma::PolySystem fixture(const std::string& name)
{
  return shapelemma::parse_system(read_file(std::string(SHAPELEMMA_FIXTURE_DIR) + "/" + name + ".sys"));
}

// Polynomial over x0..x{nvars-1}.
inline shapelemma::MPoly P(const std::string& text, std::size_t nvars)
{
  return shapelemma::parse_polynomial(text, nvars);
}

// Univariate polynomial in x{slot}.
inline shapelemma::UPoly U(const std::string& text, std::size_t slot)
{
  return P(text, slot + 1).to_upoly(slot);
}

inline shapelemma::Ideal system_ideal(const shapelemma::PolySystem& s)
{
  return shapelemma::Ideal::affine(s.nvars(), s.polys);
}

inline std::vector<std::string> strings(const std::vector<shapelemma::MPoly>& ps)
{
  std::vector<std::string> out;
  for (const auto& p : ps)
    out.push_back(p.to_string());
  return out;
}

}  // namespace testing

#endif
