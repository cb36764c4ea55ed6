#pragma once

// Shared fixtures for the test binaries: parameter lists, seeded generators
// for random field elements and polynomials, and oracles that recompute
// results by routes independent of the library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "torus/decoder.hpp"

namespace torus::testing {

/// Coprime pairs with n odd and 3 !| m used by every acceptance check.
inline const std::vector<std::pair<int, int>>& test_pairs() {
  static const std::vector<std::pair<int, int>> pairs{{3, 2}, {5, 2}, {7, 2}, {9, 2}, {3, 4},
                                                      {5, 4}, {3, 5}, {7, 5}, {5, 8}, {7, 4}};
  return pairs;
}

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Random element of Q(zeta_order) with small numerators and denominators.
inline CycNum random_cyc(Rng& rng, int order, int density_percent = 60) {
  std::vector<Rational> coords;
  const int phi = euler_phi(order);
  for (int k = 0; k < phi; ++k) {
    if (uniform(rng, 0, 99) >= density_percent) {
      coords.emplace_back();
      continue;
    }
    coords.emplace_back(mpz_class(uniform(rng, -9, 9)), mpz_class(uniform(rng, 1, 6)));
  }
  return CycNum::from_coords(order, coords);
}

inline CycNum random_nonzero_cyc(Rng& rng, int order) {
  for (;;) {
    CycNum c = random_cyc(rng, order);
    if (!c.is_zero()) return c;
  }
}

/// Random Laurent polynomial with exponents in [-span, span].
inline LPoly random_lpoly(Rng& rng, int order, int max_terms = 4, int span = 3) {
  std::vector<Term> terms;
  const long count = uniform(rng, 0, max_terms);
  for (long i = 0; i < count; ++i) {
    terms.push_back({static_cast<int>(uniform(rng, -span, span)), static_cast<int>(uniform(rng, -span, span)),
                     random_nonzero_cyc(rng, order)});
  }
  return LPoly::from_terms(std::move(terms));
}

inline LPoly random_nonzero_lpoly(Rng& rng, int order) {
  for (;;) {
    LPoly p = random_lpoly(rng, order);
    if (!p.is_zero()) return p;
  }
}

/// Invertible matrix: a product of elementary and unit-diagonal factors.
inline Mat2 random_invertible(Rng& rng, int order) {
  Mat2 m = Mat2::identity();
  for (int i = 0; i < 3; ++i) {
    const LPoly e = random_lpoly(rng, order, 2, 2);
    const Mat2 elem = uniform(rng, 0, 1) ? Mat2{1, e, 0, 1} : Mat2{1, 0, e, 1};
    const LPoly u = LPoly::monomial(random_nonzero_cyc(rng, order), static_cast<int>(uniform(rng, -2, 2)),
                                    static_cast<int>(uniform(rng, -2, 2)));
    m = m * elem * Mat2{u, 0, 0, 1};
  }
  return m;
}

/// Direct evaluation of the stored coordinates at exp(2 pi i / N) in double.
inline std::complex<double> embed_oracle(const CycNum& c) {
  std::complex<double> sum = 0;
  const auto coords = c.coords();
  for (std::size_t k = 0; k < coords.size(); ++k) {
    sum += coords[k].to_double() * std::polar(1.0, 2 * M_PI * static_cast<double>(k) / c.order());
  }
  return sum;
}

/// Evaluates a Laurent polynomial at complex t and q.
inline std::complex<double> eval_oracle(const LPoly& p, std::complex<double> t, std::complex<double> q) {
  std::complex<double> sum = 0;
  for (const auto& tm : p.terms()) sum += embed_oracle(tm.c) * std::pow(t, tm.et) * std::pow(q, tm.eq);
  return sum;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

/// Normal form by the rewriting fixpoint: merge runs, pull whole periods out
/// as D, hoist D to the front, repeat. Independent of the library's
/// single-pass stack algorithm.
inline NormalForm rewrite_oracle(const MonoidWord& w) {
  std::vector<Syllable> s = w.syllables;
  long delta = 0;
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Syllable> next;
    for (const auto& syl : s) {
      if (syl.letter == Letter::D) {
        delta += syl.exp;
        changed = true;
        continue;
      }
      if (!next.empty() && next.back().letter == syl.letter) {
        next.back().exp += syl.exp;
        changed = true;
      } else {
        next.push_back(syl);
      }
    }
    std::vector<Syllable> reduced;
    for (auto syl : next) {
      const long period = syl.letter == Letter::X ? w.m : w.n;
      if (syl.exp >= period) {
        delta += syl.exp / period;
        syl.exp %= period;
        changed = true;
      }
      if (syl.exp > 0) reduced.push_back(syl);
    }
    s = std::move(reduced);
  }
  return {w.n, w.m, delta, s};
}

/// Delta-free random normal form: alternating syllables with in-range
/// exponents, so no period is ever reached.
inline NormalForm random_delta_free(Rng& rng, int n, int m, int max_syllables) {
  NormalForm nf{n, m, 0, {}};
  const long count = uniform(rng, 1, max_syllables);
  Letter next = uniform(rng, 0, 1) ? Letter::X : Letter::Y;
  for (long i = 0; i < count; ++i) {
    const long period = next == Letter::X ? m : n;
    nf.syllables.push_back({next, uniform(rng, 1, period - 1)});
    next = next == Letter::X ? Letter::Y : Letter::X;
  }
  return nf;
}

}  // namespace torus::testing
