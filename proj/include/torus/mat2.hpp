#pragma once

#include <cstdint>
#include <optional>

#include "torus/laurent.hpp"

namespace torus {

/// Entry bits used by degree masks.
enum EntryBit : std::uint8_t { kA11 = 1, kA12 = 2, kA21 = 4, kA22 = 8 };

struct DegreePattern {
  int degree = 0;
  /// Entries attaining `degree`, as EntryBit flags.
  std::uint8_t mask = 0;
};

struct Mat2 {
  LPoly a11, a12, a21, a22;

  static Mat2 identity() { return {LPoly(1), LPoly(), LPoly(), LPoly(1)}; }
  static Mat2 scalar(const LPoly& s) { return {s, LPoly(), LPoly(), s}; }

  LPoly det() const { return a11 * a22 - a12 * a21; }
  LPoly trace() const { return a11 + a22; }
  Mat2 transpose() const { return {a11, a21, a12, a22}; }
  bool is_zero() const { return a11.is_zero() && a12.is_zero() && a21.is_zero() && a22.is_zero(); }

  /// Adjugate over det; throws NotInvertible unless det is a unit.
  Mat2 inverse() const;
  /// Square-and-multiply; negative exponents go through inverse().
  Mat2 pow(long k) const;

  /// The scalar s when the matrix equals s * I.
  std::optional<LPoly> scalar_value() const;
  bool is_scalar() const { return scalar_value().has_value(); }

  /// Max q-degree over the four entries and the entries attaining it.
  /// Throws ZeroMatrix for the zero matrix.
  DegreePattern degree_pattern() const;

  Mat2 scaled(const LPoly& s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }
  Mat2 substituted(const Substitution& s) const {
    return {s.apply(a11), s.apply(a12), s.apply(a21), s.apply(a22)};
  }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
  }
  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a11 + y.a11, x.a12 + y.a12, x.a21 + y.a21, x.a22 + y.a22};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a11 - y.a11, x.a12 - y.a12, x.a21 - y.a21, x.a22 - y.a22};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a11 == y.a11 && x.a12 == y.a12 && x.a21 == y.a21 && x.a22 == y.a22;
  }

  std::size_t hash() const;
};

}  // namespace torus

template <>
struct std::hash<torus::Mat2> {
  std::size_t operator()(const torus::Mat2& m) const noexcept { return m.hash(); }
};
