#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace spectre {

// Deaths and distances live on the extended real line; +inf marks features
// that never die.  NaN is never produced by any operation in this library.
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Malformed or inconsistent caller input (bad JSON, index out of range,
// mismatched color sets, ...).  The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An iterative numerical routine failed to converge.  CLI exit code 3.
struct numerical_error : std::runtime_error {
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// A property or verification suite found a counterexample.  CLI exit code 1.
struct property_violation : std::runtime_error {
  explicit property_violation(const std::string& what) : std::runtime_error(what) {}
};

// Seeded RNG wrapper.  Draws bits straight from mt19937_64 so sequences are
// identical on every platform, independent of libstdc++ distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n).
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

  // Fisher-Yates shuffle.
  template <typename Vec>
  void shuffle(Vec& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace spectre
