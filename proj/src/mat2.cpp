#include "torus/mat2.hpp"

#include "torus/error.hpp"

namespace torus {

Mat2 Mat2::inverse() const {
  const LPoly d = det();
  if (!d.is_unit()) throw Error(ErrorKind::NotInvertible, "determinant is not a unit");
  const Term& u = d.terms()[0];
  const CycNum ci = u.c.inverse();
  auto over = [&](const LPoly& p) { return p.shifted(-u.et, -u.eq).scaled(ci); };
  return {over(a22), over(-a12), over(-a21), over(a11)};
}

Mat2 Mat2::pow(long k) const {
  Mat2 base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Mat2 result = identity();
  while (e != 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

std::optional<LPoly> Mat2::scalar_value() const {
  if (!a12.is_zero() || !a21.is_zero() || !(a11 == a22)) return std::nullopt;
  return a11;
}

DegreePattern Mat2::degree_pattern() const {
  const Degree d[4] = {a11.dq(), a12.dq(), a21.dq(), a22.dq()};
  Degree best;
  for (const auto& x : d) {
    if (x && (!best || *x > *best)) best = x;
  }
  if (!best) throw Error(ErrorKind::ZeroMatrix, "degree pattern of the zero matrix");
  DegreePattern p;
  p.degree = *best;
  const std::uint8_t bits[4] = {kA11, kA12, kA21, kA22};
  for (int i = 0; i < 4; ++i) {
    if (d[i] == best) p.mask |= bits[i];
  }
  return p;
}

std::size_t Mat2::hash() const {
  std::size_t h = a11.hash();
  for (const LPoly* p : {&a12, &a21, &a22}) h ^= p->hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace torus
