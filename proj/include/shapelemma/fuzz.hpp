#ifndef SHAPELEMMA_FUZZ_HPP
#define SHAPELEMMA_FUZZ_HPP

#include <shapelemma/system.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace shapelemma {

// n polynomials with 1 <= d_i <= max_degree, xn-degree at most 2 and
// integer coefficients in [-5, 5].
PolySystem random_system(std::mt19937_64& rng, std::size_t n, int max_degree = 3);

struct FuzzOptions {
  std::uint64_t seed = 1;
  std::size_t count = 200;  // zero-dimensional systems to check
  std::size_t max_attempts = 0;  // 0 means 20 * count
};

struct FuzzCheck {
  std::string name;
  std::size_t runs = 0;
  std::size_t failures = 0;
  double seconds = 0;
};

struct FuzzReport {
  std::uint64_t seed = 0;
  std::size_t generated = 0;
  std::size_t checked = 0;  // zero-dimensional systems
  std::size_t skipped = 0;  // hit the work limit while filtering
  std::vector<FuzzCheck> checks;
  std::vector<std::string> failures;  // first few, with the system text

  bool ok() const;
  const FuzzCheck& check(const std::string& name) const;
};

// Property suite over random systems with n in {2, 3}.
FuzzReport run_fuzz(const FuzzOptions& opts);

}  // namespace shapelemma

#endif
