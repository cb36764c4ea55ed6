#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torus/reps.hpp"

namespace torus {

/// Substitution making the meridian of rho3 satisfy the Hecke quadratic
/// relation after t := q. With a = 2l + 1 (a odd) or a = 2l (a even), l by
/// floor division:
///   a odd,  l odd  -> t = q
///   a odd,  l even -> t -> -t, then t = q
///   a even, l even -> q -> iq, t -> -t, then t = q
///   a even, l odd  -> q -> iq, then t = q
struct SpecializationRule {
  long a = 0;
  long ell = 0;
  bool rotate_q = false;  // q -> iq
  int t_sign = 1;         // t -> t_sign * t
  std::string describe() const;
};

SpecializationRule hecke_rule(long a);

struct HeckeResult {
  SpecializationRule rule;
  Mat2 x_primed, y_primed;  // before t := q
  FundReport recheck;       // conditions on the primed matrices
  Generators collapsed;     // after t := q
  Mat2 meridian;            // of the collapsed generators
  bool quadratic = false;
};

/// Throws ShapeMismatch unless the collapsed meridian is lower triangular
/// with diagonal (q^{-2}, -1).
HeckeResult hecke_specialize(const Rep& rep);

/// M^2 = (q^{-2} - 1) M + q^{-2} I for a unit q (a variable or a constant).
bool quadratic_check(const Mat2& m, const LPoly& q);

struct ToricResult {
  Mat2 x, y, meridian;
  bool relation = false;
  ReflectionCheck reflection;
};

/// a odd: t = q = 1; a even: t = 1, q = i. Throws ReflectionCheckFailed when
/// the meridian image is not an order-2 reflection.
ToricResult toric_specialize(const Rep& rep);

struct ClosureResult {
  std::optional<long> order;  // empty when the cap was hit
  long cap = 0;
  std::vector<Mat2> elements;  // filled when requested
};

/// Breadth-first closure of the group generated by invertible constant
/// matrices under exact equality. Stops once more than `cap` elements exist.
ClosureResult group_closure(const std::vector<Mat2>& generators, long cap = 10000, bool keep_elements = false);

}  // namespace torus
