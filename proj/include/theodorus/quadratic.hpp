#pragma once

// Exact calculus of spiral-graph polynomials f(x) = (A x^2 + B x + C) / 2.
//
// Storing doubled coefficients keeps every arm polynomial (including the
// 10.5 / 6.5 / 8.5 leading coefficients) in plain integers, and the
// constant second difference of f is exactly A.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "theodorus/error.hpp"

namespace theodorus {

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("integer addition overflow");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow("integer subtraction overflow");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer multiplication overflow");
  return r;
}

}  // namespace checked

struct HalfIntQuadratic {
  std::int64_t A = 2;  // twice the leading coefficient ("2. Differential")
  std::int64_t B = 0;  // twice the linear coefficient
  std::int64_t C = 0;  // twice the constant term

  /// Arms open outward and take integer values at every integer x.
  constexpr bool valid() const { return A > 0 && (A + B) % 2 == 0 && C % 2 == 0; }

  static HalfIntQuadratic make(std::int64_t a2, std::int64_t b2, std::int64_t c2) {
    HalfIntQuadratic q{a2, b2, c2};
    if (!q.valid()) {
      throw InvalidPolynomial("(" + std::to_string(a2) + "x^2 + " + std::to_string(b2) +
                              "x + " + std::to_string(c2) +
                              ")/2 is not an integer-valued upward quadratic");
    }
    return q;
  }

  friend constexpr auto operator<=>(const HalfIntQuadratic&, const HalfIntQuadratic&) = default;
};

/// Exact (A x^2 + B x + C) / 2, overflow-checked.
inline std::int64_t eval(const HalfIntQuadratic& q, std::int64_t x) {
  using namespace checked;
  const std::int64_t num = add(add(mul(mul(q.A, x), x), mul(q.B, x)), q.C);
  return num / 2;
}

inline std::int64_t second_differential(const HalfIntQuadratic& q) { return q.A; }

/// f(x + s) as a new polynomial.
inline HalfIntQuadratic shifted(const HalfIntQuadratic& q, std::int64_t s) {
  using namespace checked;
  return {q.A, add(mul(mul(2, q.A), s), q.B), add(add(mul(mul(q.A, s), s), mul(q.B, s)), q.C)};
}

/// Value of f at its real vertex, C/2 - B^2/(8A). Small magnitude means the
/// arm's parabola bottoms out at the spiral centre.
inline double vertex_value(const HalfIntQuadratic& q) {
  const double a = static_cast<double>(q.A);
  const double b = static_cast<double>(q.B);
  return static_cast<double>(q.C) / 2.0 - b * b / (8.0 * a);
}

/// Re-index q so that x = 0 is the innermost member of the arm: the first
/// natural value on the increasing branch.
inline HalfIntQuadratic innermost_indexed(const HalfIntQuadratic& q) {
  std::int64_t x0 = 0;
  // move forward out of non-positive or decreasing territory
  while (eval(q, x0) < 1 || eval(q, x0 + 1) <= eval(q, x0)) ++x0;
  // then inward while the predecessor is a smaller natural number
  while (true) {
    const std::int64_t prev = eval(q, x0 - 1);
    if (prev < 1 || prev >= eval(q, x0)) break;
    --x0;
  }
  return shifted(q, x0);
}

/// Human form matching the paper tables, e.g. "10.5x^2 + 34.5x + 24".
inline std::string display(const HalfIntQuadratic& q) {
  auto half = [](std::int64_t v) {
    const std::int64_t a = std::llabs(v);
    std::string s = std::to_string(a / 2);
    if (a % 2 != 0) s += ".5";
    return s;
  };
  std::string out;
  auto term = [&](std::int64_t v, const char* suffix) {
    if (v == 0) return;
    const bool unit = std::llabs(v) == 2 && *suffix != '\0';
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    if (!unit) out += half(v);
    out += suffix;
  };
  term(q.A, "x^2");
  term(q.B, "x");
  term(q.C, "");
  return out.empty() ? "0" : out;
}

struct DifferenceTable {
  std::vector<std::int64_t> values;
  std::vector<std::int64_t> first_differences;
  std::vector<std::int64_t> second_differences;
  bool constant_second = false;
};

inline DifferenceTable difference_table(std::span<const std::int64_t> values) {
  if (values.size() < 3) throw TooShort("difference table needs at least 3 values");
  DifferenceTable t;
  t.values.assign(values.begin(), values.end());
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    t.first_differences.push_back(checked::sub(values[i + 1], values[i]));
  }
  for (std::size_t i = 0; i + 1 < t.first_differences.size(); ++i) {
    t.second_differences.push_back(
        checked::sub(t.first_differences[i + 1], t.first_differences[i]));
  }
  t.constant_second = std::all_of(t.second_differences.begin(), t.second_differences.end(),
                                  [&](std::int64_t v) { return v == t.second_differences[0]; });
  return t;
}

namespace detail {

// Minimal exact rational over __int128, enough for three-point interpolation.
class Rational {
 public:
  using Int = __int128;

  Rational(Int num = 0, Int den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw Error("rational with zero denominator");
    normalize();
  }

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {add(mul(a.num_, b.den_), mul(b.num_, a.den_)), mul(a.den_, b.den_)};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational(-b.num_, b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {mul(a.num_, b.num_), mul(a.den_, b.den_)};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error("rational division by zero");
    return {mul(a.num_, b.den_), mul(a.den_, b.num_)};
  }

 private:
  static Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow("rational overflow");
    return r;
  }
  static Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow("rational overflow");
    return r;
  }
  static Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const Int t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const Int g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_;
  Int den_;
};

}  // namespace detail

struct IntPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
};

/// Exact interpolation through the first three points, verified against the
/// rest. Throws NotQuadratic, NotHalfInteger or Inconsistent.
inline HalfIntQuadratic fit_quadratic(std::span<const IntPoint> pts) {
  using detail::Rational;
  if (pts.size() < 3) throw TooShort("fit_quadratic needs at least 3 points");
  const IntPoint p0 = pts[0], p1 = pts[1], p2 = pts[2];
  if (p0.x == p1.x || p0.x == p2.x || p1.x == p2.x) {
    throw Inconsistent("fit_quadratic needs distinct x values");
  }
  // Newton divided differences
  const Rational d01 = Rational(p1.y - p0.y) / Rational(p1.x - p0.x);
  const Rational d12 = Rational(p2.y - p1.y) / Rational(p2.x - p1.x);
  const Rational a = (d12 - d01) / Rational(p2.x - p0.x);
  const Rational b = d01 - a * Rational(static_cast<__int128>(p0.x) + p1.x);
  const Rational c = Rational(p0.y) - a * Rational(p0.x) * Rational(p0.x) - b * Rational(p0.x);

  if (a.num() == 0) throw NotQuadratic("points lie on a line (zero second differential)");
  const Rational two(2);
  const Rational a2 = a * two, b2 = b * two, c2 = c * two;
  if (!a2.is_integer() || !b2.is_integer() || !c2.is_integer()) {
    throw NotHalfInteger("interpolant has coefficients that are not multiples of 1/2");
  }
  const HalfIntQuadratic q{static_cast<std::int64_t>(a2.num()),
                           static_cast<std::int64_t>(b2.num()),
                           static_cast<std::int64_t>(c2.num())};
  if (q.A < 0) throw NotQuadratic("interpolant opens downward");
  if (!q.valid()) throw NotHalfInteger("interpolant is not integer-valued on the integers");
  for (std::size_t i = 3; i < pts.size(); ++i) {
    if (eval(q, pts[i].x) != pts[i].y) {
      throw Inconsistent("point " + std::to_string(i) + " deviates from the fitted quadratic");
    }
  }
  return q;
}

/// True iff f(x) is divisible by d for every integer x. The numerator is an
/// integer polynomial, so f mod d repeats with period 2d and one full period
/// decides the claim exactly.
inline bool divisible_by(const HalfIntQuadratic& q, std::int64_t d) {
  if (d < 2) throw Error("divisor must be >= 2");
  for (std::int64_t x = 0; x < 2 * d; ++x) {
    if (eval(q, x) % d != 0) return false;
  }
  return true;
}

}  // namespace theodorus
