#pragma once

// Shared helpers for the unit tests: exact literals and a seeded generator of
// random rationals for property checks.

#include <doctest.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "simson/error.hpp"
#include "simson/geom/primitives.hpp"
#include "simson/numeric/scalar.hpp"

namespace simson::testing {

inline num::Scalar q(std::string_view text) { return num::Scalar::parse(text); }
inline geom::Point pt(std::string_view x, std::string_view y) { return {q(x), q(y)}; }
inline geom::Point fpt(double x, double y) { return {num::Scalar::approximate(x), num::Scalar::approximate(y)}; }

/// Error code thrown by fn; fails the test if nothing is thrown.
template <class Fn>
Errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a simson::Error");
  return Errc::InvalidConfig;
}

class RandomRationals {
 public:
  explicit RandomRationals(std::uint64_t seed, long max_mag = 30, long max_den = 12)
      : engine_(seed), num_(-max_mag, max_mag), den_(1, max_den) {}

  num::Scalar next() { return num::Scalar(num::Rational::make(num_(engine_), den_(engine_))); }
  num::Scalar nonzero() {
    for (;;) {
      auto s = next();
      if (!s.is_zero()) return s;
    }
  }
  geom::Point point() { return {next(), next()}; }

 private:
  std::mt19937_64 engine_;
  std::uniform_int_distribution<long> num_;
  std::uniform_int_distribution<long> den_;
};

}  // namespace simson::testing
