#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "torus/rational.hpp"

namespace torus {

/// Integer polynomial, coefficients from the constant term upwards.
using IntPoly = std::vector<std::int64_t>;

/// The N-th cyclotomic polynomial. Coefficients are exact (checked int64).
IntPoly cyclotomic_polynomial(int order);

/// Euler's totient.
int euler_phi(int order);

/// Field data for Q(zeta_N): the modulus Phi_N and the reduced powers
/// x^k mod Phi_N for 0 <= k < N. Instances are interned and never freed.
struct CycloField {
  int order = 1;
  int degree = 1;
  IntPoly modulus;
  /// (j, Phi_N[j]) for the nonzero coefficients below the leading one.
  std::vector<std::pair<int, std::int64_t>> tail;
  /// power_table[k] = coordinates of zeta_N^k, length `degree`.
  std::vector<std::vector<std::int64_t>> power_table;
};

const CycloField& cyclo_field(int order);

/// Exact element of Q(zeta_N), stored as (1/den) * sum num[k] zeta_N^k with
/// k < phi(N), den > 0 and gcd(content(num), den) = 1.
///
/// Values whose numerators and denominator fit in 64 bits use a machine-word
/// representation; everything else is held in GMP integers. The choice is
/// canonical, so equality is a plain comparison of the stored data.
class CycNum {
 public:
  CycNum();
  CycNum(long value);  // NOLINT(google-explicit-constructor)
  explicit CycNum(const Rational& value);

  /// zeta_N^k; k is taken mod N.
  static CycNum root(int order, long k);
  static CycNum from_coords(int order, std::span<const Rational> coords);

  int order() const { return field_->order; }
  int degree() const { return field_->degree; }
  const CycloField& field() const { return *field_; }

  Rational coord(int k) const;
  std::vector<Rational> coords() const;

  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in Q (only the constant coordinate is set).
  bool is_rational() const;

  /// Same value viewed in Q(zeta_M); `order()` must divide M.
  CycNum lifted(int new_order) const;
  /// The same value in Q(zeta_M) for M | order(), when it lies there.
  std::optional<CycNum> restricted(int new_order) const;

  /// Galois automorphism zeta -> zeta^j, gcd(j, N) = 1.
  CycNum galois(long j) const;
  /// Complex conjugation (the automorphism j = -1).
  CycNum conj() const { return galois(-1); }

  /// Multiplicative inverse via the extended Euclidean algorithm mod Phi_N.
  CycNum inverse() const;
  CycNum pow(long exponent) const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

  /// Exact field equality; values of different orders are compared in the
  /// common overfield.
  friend bool operator==(const CycNum& a, const CycNum& b);

  /// Hash of the stored representation. Consistent with == for values of
  /// the same order and for rationals of any order.
  std::size_t hash() const;

  /// Largest coordinate numerator bit length; used by tests and diagnostics.
  std::size_t height_bits() const;

 private:
  friend struct CycNumAccess;
  static CycNum zero_of(const CycloField* f);

  const CycloField* field_;
  bool big_ = false;
  std::vector<std::int64_t> small_num_;
  std::int64_t small_den_ = 1;
  std::vector<mpz_class> big_num_;
  mpz_class big_den_;
};

/// Evaluates at zeta_N = exp(2 pi i / N). `precision` is in binary digits
/// and may not exceed the long double mantissa (64).
std::complex<long double> numeric_embed(const CycNum& value, int precision = 64);

/// Quadratic extension Q(zeta_N)[c]/(c^2 - s). Construction verifies that s
/// is not a square in Q(zeta_N) and throws SIsSquare otherwise.
class QuadField {
 public:
  explicit QuadField(const CycNum& s);
  const CycNum& s() const { return s_; }

 private:
  CycNum s_;
};

/// Exact test for s being a square in its cyclotomic field. Returns a square
/// root when one exists.
std::optional<CycNum> cyclotomic_sqrt(const CycNum& s);

/// re + im * c in a QuadField.
class QuadExt {
 public:
  QuadExt(std::shared_ptr<const QuadField> field, CycNum re, CycNum im = CycNum());

  /// The formal generator c.
  static QuadExt generator(std::shared_ptr<const QuadField> field);

  const CycNum& re() const { return re_; }
  const CycNum& im() const { return im_; }
  const QuadField& field() const { return *field_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  QuadExt conjugate() const { return QuadExt(field_, re_, -im_); }
  QuadExt inverse() const;

  QuadExt operator-() const { return QuadExt(field_, -re_, -im_); }
  friend QuadExt operator+(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator/(const QuadExt& a, const QuadExt& b);
  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  std::shared_ptr<const QuadField> field_;
  CycNum re_;
  CycNum im_;
};

}  // namespace torus

template <>
struct std::hash<torus::CycNum> {
  std::size_t operator()(const torus::CycNum& v) const noexcept { return v.hash(); }
};
