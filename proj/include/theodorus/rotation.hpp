#pragma once

// Rotation direction of an arm from its per-winding angular slip.

#include <cmath>
#include <cstdint>
#include <string>

#include "theodorus/error.hpp"
#include "theodorus/quadratic.hpp"
#include "theodorus/spiral.hpp"

namespace theodorus {

enum class Rotation { Positive, Negative, Indeterminate };

inline const char* label_of(Rotation r) {
  switch (r) {
    case Rotation::Positive:
      return "P";
    case Rotation::Negative:
      return "N";
    case Rotation::Indeterminate:
      break;
  }
  return "I";
}

inline Rotation rotation_from_label(const std::string& s) {
  if (s == "P") return Rotation::Positive;
  if (s == "N") return Rotation::Negative;
  if (s == "I") return Rotation::Indeterminate;
  throw Error("unknown rotation label '" + s + "'");
}

/// Inclusive range of polynomial arguments.
struct XRange {
  std::int64_t lo = 5;
  std::int64_t hi = 40;
};

inline constexpr double kDefaultDriftEpsilon = 0.005;

namespace detail {

inline Index arm_index(const HalfIntQuadratic& q, std::int64_t x) {
  const std::int64_t v = eval(q, x);
  if (v < 1) throw RangeExhausted("arm value " + std::to_string(v) + " is not a spiral ray");
  return static_cast<Index>(v);
}

}  // namespace detail

/// theta(f(x+1)) - theta(f(x)) - 2pi. Tends to 2 sqrt(A/2) - 2pi.
inline double drift(const Spiral& spiral, const HalfIntQuadratic& q, std::int64_t x) {
  const Index a = detail::arm_index(q, x);
  const Index b = detail::arm_index(q, x + 1);
  return spiral.angle(b) - spiral.angle(a) - kTwoPi;
}

inline double asymptotic_drift(std::int64_t A) {
  return 2.0 * std::sqrt(static_cast<double>(A) / 2.0) - kTwoPi;
}

inline double mean_drift(const Spiral& spiral, const HalfIntQuadratic& q, XRange range) {
  if (range.hi - range.lo + 1 < 5) throw TooShort("rotation range needs at least 5 steps");
  CompensatedSum acc;
  for (std::int64_t x = range.lo; x <= range.hi; ++x) acc.add(drift(spiral, q, x));
  return acc.value() / static_cast<double>(range.hi - range.lo + 1);
}

/// Negative mean drift means the arm falls behind the spiral's own turn,
/// which the paper's FIG 1 calibration (A = 18 arms) labels positive.
inline Rotation rotation_of(const Spiral& spiral, const HalfIntQuadratic& q, XRange range = {},
                            double epsilon = kDefaultDriftEpsilon) {
  const double m = mean_drift(spiral, q, range);
  if (std::fabs(m) < epsilon) return Rotation::Indeterminate;
  return m < 0.0 ? Rotation::Positive : Rotation::Negative;
}

/// Label implied by the sign of the asymptotic drift alone.
inline Rotation asymptotic_rotation(std::int64_t A) {
  return asymptotic_drift(A) < 0.0 ? Rotation::Positive : Rotation::Negative;
}

}  // namespace theodorus
