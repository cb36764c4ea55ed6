#pragma once

#include <optional>
#include <vector>

#include "torus/cyclo.hpp"

namespace torus {

/// q- or t-degree; std::nullopt is the degree of the zero polynomial and
/// orders below every integer.
using Degree = std::optional<int>;

struct Term {
  int et = 0;
  int eq = 0;
  CycNum c;
};

/// Sparse Laurent polynomial in t and q over a cyclotomic field. Terms are
/// sorted by (et, eq) and every stored coefficient is nonzero.
class LPoly {
 public:
  LPoly() = default;
  LPoly(long value);                   // NOLINT(google-explicit-constructor)
  LPoly(const CycNum& value);          // NOLINT(google-explicit-constructor)
  static LPoly monomial(const CycNum& c, int et, int eq);
  static LPoly t(int e = 1) { return monomial(CycNum(1), e, 0); }
  static LPoly q(int e = 1) { return monomial(CycNum(1), 0, e); }
  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static LPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// A single nonzero term; exactly the units of the Laurent ring.
  bool is_unit() const { return terms_.size() == 1; }
  /// The value when the polynomial has no t or q dependence.
  std::optional<CycNum> constant_value() const;
  CycNum coeff(int et, int eq) const;

  Degree dq() const;
  Degree dt() const;
  Degree min_dt() const;

  LPoly operator-() const;
  LPoly& operator+=(const LPoly& o);
  LPoly& operator-=(const LPoly& o);
  LPoly& operator*=(const LPoly& o) { return *this = *this * o; }
  friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
  friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  friend bool operator==(const LPoly& a, const LPoly& b);

  LPoly scaled(const CycNum& c) const;
  /// Multiplies by t^et q^eq.
  LPoly shifted(int et, int eq) const;
  /// Non-negative powers always; negative powers only for units.
  LPoly pow(int k) const;

  /// Applies f to every coefficient; zero results are dropped.
  template <typename F>
  LPoly map_coeffs(F f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& tm : terms_) out.push_back({tm.et, tm.eq, f(tm.c)});
    return from_terms(std::move(out));
  }

  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

/// p / u for a single-term u; throws NotAUnit otherwise.
LPoly divide_by_unit(const LPoly& p, const LPoly& u);

/// Monomial substitution t -> beta t^A q^B, q -> alpha t^C q^D, optionally
/// preceded by complex conjugation of the coefficients. Every named rule is
/// an instance, and compose() keeps the family closed.
struct Substitution {
  CycNum beta = 1;
  CycNum alpha = 1;
  int A = 1, B = 0, C = 0, D = 1;
  bool conjugate = false;

  static Substitution identity() { return {}; }
  static Substitution scale_q(const CycNum& a);
  static Substitution scale_t(const CycNum& b);
  static Substitution t_to_q();
  static Substitution invert_t();
  static Substitution invert_q();
  static Substitution eval_t(const CycNum& v);
  static Substitution eval_q(const CycNum& v);
  /// q -> -q, t -> t^{-1}, coefficients conjugated.
  static Substitution bar();
  static Substitution conj_coeffs();

  /// The substitution "first this, then next".
  Substitution then(const Substitution& next) const;

  LPoly apply(const LPoly& p) const;
};

}  // namespace torus

template <>
struct std::hash<torus::LPoly> {
  std::size_t operator()(const torus::LPoly& p) const noexcept { return p.hash(); }
};
