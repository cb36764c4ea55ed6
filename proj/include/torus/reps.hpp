#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torus/garside.hpp"
#include "torus/mat2.hpp"

namespace torus {

enum class RepKind { Rho1, Rho2, Rho3 };

std::string_view kind_name(RepKind kind);
/// "rho1" | "rho2" | "rho3"; throws BadParameters otherwise.
RepKind parse_kind(std::string_view text);

struct Bezout {
  long a;
  long b;
};

/// a n - b m = 1 with a = n^{-1} mod m taken in (-m/2, m/2].
Bezout bezout(int n, int m);

/// Field order lcm(4m, 2n, 4) shared by every constant of a representation.
int rep_field_order(int n, int m);

/// (z^k - z^{-k}) / (z - z^{-1}); k may be negative.
CycNum quantum_bracket(const CycNum& z, long k);

/// Constants of the Burau-type family; defined for gcd(n, m) = 1, 3 !| m.
struct Rho3Constants {
  int n = 0, m = 0, order = 0;
  long a = 0, b = 0;
  CycNum U, Uprime, V, lambda1, lambda2, mu1, mu2;
  LPoly A1, A2;

  /// (lambda2^k - lambda1^k) / (lambda2 - lambda1).
  CycNum bracket_lambda(long k) const;
  /// (mu2^k - mu1^k) / (mu2^b - mu1^b); throws ZeroDenominator when
  /// mu2^b = mu1^b.
  CycNum bracket_mu(long k) const;
};

Rho3Constants rho3_constants(int n, int m);

/// A pair of generator images satisfying X^m = Y^n = delta * I, with the
/// tables the encoder and decoder need. `collapsed` marks matrices in which
/// t has been identified with q, so only q remains.
struct Generators {
  int n = 0, m = 0;
  bool collapsed = false;
  Mat2 x, y, x_inv, y_inv;
  std::vector<Mat2> x_pow;  // X^0 .. X^{m-1}
  std::vector<Mat2> y_pow;  // Y^0 .. Y^{n-1}
  LPoly delta;

  /// Throws BadParameters unless X^m = Y^n is scalar with unit entries and
  /// both generators are invertible.
  static Generators make(int n, int m, Mat2 x, Mat2 y, bool collapsed);
  /// Applies a substitution to both generators and rebuilds the tables.
  Generators substituted(const Substitution& s, bool collapse) const;

  const Mat2& gen(Letter l) const { return l == Letter::X ? x : y; }
  const Mat2& inv(Letter l) const { return l == Letter::X ? x_inv : y_inv; }
};

class Rep {
 public:
  static Rep rho1(int n);
  static Rep rho2(int n, int m);
  /// Even n is accepted and yields a non-faithful representation.
  static Rep rho3(int n, int m);
  static Rep build(RepKind kind, int n, int m);

  RepKind kind() const { return kind_; }
  int n() const { return n_; }
  int m() const { return m_; }
  int field_order() const { return order_; }
  bool faithful() const { return faithful_; }
  const std::string& faithful_reason() const { return reason_; }
  const std::optional<Rho3Constants>& constants() const { return consts_; }
  /// (a, b) used by the meridian; rho1 uses (1, (n-1)/2).
  Bezout bezout_pair() const;

  const Mat2& mx() const { return generic_.x; }
  const Mat2& my() const { return generic_.y; }
  const Generators& generic() const { return generic_; }
  /// Both generators under t = q.
  const Generators& specialized() const { return specialized_; }
  const Generators& generators(bool specialized) const { return specialized ? specialized_ : generic_; }

 private:
  Rep(RepKind kind, int n, int m, Mat2 x, Mat2 y);

  RepKind kind_;
  int n_, m_, order_;
  bool faithful_ = true;
  std::string reason_;
  std::optional<Rho3Constants> consts_;
  Generators generic_;
  Generators specialized_;
};

/// Closed-form power of a generator for any integer k.
Mat2 closed_form_power(const Rep& rep, Letter letter, long k);

/// Product of generator images; D maps to X^m. Throws ParameterMismatch when
/// the word was built for other parameters.
Mat2 encode(const Generators& gens, const MonoidWord& w);
Mat2 encode(const Rep& rep, const MonoidWord& w, bool specialized = false);

struct FundCheck {
  int condition;  // 1, 2 or 3
  long k;
  bool pass;
  std::string detail;
};

struct FundReport {
  bool relation = false;
  bool cond2 = false;
  bool cond3 = false;
  std::vector<FundCheck> checks;
  bool passed() const { return relation && cond2 && cond3; }
};

/// Conditions (1) X^m = Y^n, (2) X^k = t^{nk} * constants with nonzero (1,2)
/// entry for 0 < k < m, (3) Y^k = t^{mk} * q-polynomials with d_q <= 0 off
/// the (2,1) entry and d_q = 1 on it for 0 < k < n.
FundReport verify_fund(const Mat2& x, const Mat2& y, int n, int m);
FundReport verify_fund(const Rep& rep);

/// Y^b X^{-a}. Supported for rho3 and rho1.
Mat2 meridian(const Rep& rep);
Mat2 meridian(const Generators& gens, const Bezout& ab);

/// Lower-triangular with diagonal i^{-a-1} t^{-1} (q^{-1}, (-1)^a q).
bool meridian_shape_ok(const Rep& rep, const Mat2& mer);

struct ReflectionCheck {
  bool squares_to_identity = false;
  bool traceless = false;
  bool not_scalar = false;
  bool passed() const { return squares_to_identity && traceless && not_scalar; }
};
/// R^2 = I, tr R = 0, R != +-I for a constant matrix.
ReflectionCheck reflection_check(const Mat2& r);

struct UnitarityReport {
  bool q_rotated = false;  // q -> iq applied first (a even)
  bool x_ok = false;
  bool y_ok = false;
  bool passed() const { return x_ok && y_ok; }
};
/// transpose(bar M) J M = J for both generators, J = antidiag(1, 1). The bar
/// map is q -> -q, t -> t^{-1}; `conjugate_coefficients` also applies
/// complex conjugation to the cyclotomic coefficients.
UnitarityReport unitarity_check(const Rep& rep, bool conjugate_coefficients = true);

struct DihedralReport {
  /// S1 = Y^{n'} X^{-1}, S2 = S1^{-1} Y.
  bool literal_form = false;
  /// S1 = X Y^{-n'}, S2 = Y S1^{-1}: the images of the Artin generators.
  bool artin_form = false;
  /// Conjugation by diag(1, p) gives the displayed simplified matrices.
  bool conjugated_matches = false;
  /// (tr S1 S2, tr S1, tr meridian at t = q = 1) agree before and after.
  bool trace_triple_invariant = false;
  bool passed() const { return artin_form && conjugated_matches && trace_triple_invariant; }
};
/// For rho3(n, 2), n odd.
DihedralReport dihedral_braid_check(const Rep& rep);

}  // namespace torus
