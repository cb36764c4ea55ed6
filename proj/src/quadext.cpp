#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "torus/cyclo.hpp"
#include "torus/error.hpp"

namespace torus {

namespace {

using cplx = std::complex<long double>;

// Sign patterns are enumerated exhaustively; beyond this many free signs the
// search is refused rather than run for hours.
constexpr int kMaxSignBits = 20;

const long double kTwoPi = 6.283185307179586476925286766559005768L;

std::vector<int> units_below_half(int n) {
  std::vector<int> out;
  for (int j = 1; 2 * j < n; ++j) {
    if (std::gcd(j, n) == 1) out.push_back(j);
  }
  return out;
}

// Inverse of the matrix V[r][k] = zeta^{j_r k}, rows over all units j_r, as
// long double. Interned per order.
const std::vector<std::vector<cplx>>& inverse_vandermonde(int n) {
  static std::map<int, std::vector<std::vector<cplx>>> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<int> units;
  for (int j = 1; j < n; ++j) {
    if (std::gcd(j, n) == 1) units.push_back(j);
  }
  const int d = static_cast<int>(units.size());
  std::vector<std::vector<cplx>> a(d, std::vector<cplx>(2 * d));
  for (int r = 0; r < d; ++r) {
    for (int k = 0; k < d; ++k) {
      const long double ang = kTwoPi * static_cast<long double>((static_cast<long>(units[r]) * k) % n) / n;
      a[r][k] = cplx(std::cos(ang), std::sin(ang));
    }
    a[r][d + r] = 1;
  }
  for (int c = 0; c < d; ++c) {
    int p = c;
    for (int r = c + 1; r < d; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    }
    std::swap(a[p], a[c]);
    const cplx inv = 1.0L / a[c][c];
    for (auto& v : a[c]) v *= inv;
    for (int r = 0; r < d; ++r) {
      if (r == c) continue;
      const cplx f = a[r][c];
      if (f == cplx(0)) continue;
      for (int k = 0; k < 2 * d; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<std::vector<cplx>> inv(d, std::vector<cplx>(d));
  for (int r = 0; r < d; ++r) {
    for (int k = 0; k < d; ++k) inv[r][k] = a[r][d + k];
  }
  return cache.emplace(n, std::move(inv)).first->second;
}

cplx embed_at(const std::vector<Rational>& coords, int n, long j) {
  cplx acc = 0;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k].is_zero()) continue;
    const long double ang = kTwoPi * static_cast<long double>((j * static_cast<long>(k)) % n) / n;
    acc += static_cast<long double>(coords[k].to_double()) * cplx(std::cos(ang), std::sin(ang));
  }
  return acc;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  const mpz_class num = r.num();
  const mpz_class den = r.den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class a, b;
  mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
  return Rational(a, b);
}

}  // namespace

std::optional<CycNum> cyclotomic_sqrt(const CycNum& s) {
  if (s.is_zero()) return CycNum(0).lifted(s.order());
  const int n = s.order();
  if (s.degree() == 1) {
    auto r = rational_sqrt(s.coord(0));
    if (!r) return std::nullopt;
    return CycNum(*r).lifted(n);
  }
  // Work with the integral element T = s * den^2; any root of T is integral.
  const auto coords = s.coords();
  mpz_class den = 1;
  for (const auto& c : coords) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
  const CycNum scale(Rational(den * den, 1));
  const CycNum t = s * scale;
  const auto tc = t.coords();

  const auto& inv = inverse_vandermonde(n);
  std::vector<int> all_units;
  for (int j = 1; j < n; ++j) {
    if (std::gcd(j, n) == 1) all_units.push_back(j);
  }
  const auto half = units_below_half(n);
  const int free_bits = static_cast<int>(half.size()) - 1;
  if (free_bits > kMaxSignBits) {
    throw Error(ErrorKind::CapExceeded, "square-root search too large for Q(zeta_" + std::to_string(n) + ")");
  }
  std::map<int, cplx> base_root;
  for (int j : half) base_root[j] = std::sqrt(embed_at(tc, n, j));

  const int d = s.degree();
  for (long pattern = 0; pattern < (1L << free_bits); ++pattern) {
    std::vector<cplx> y(all_units.size());
    for (std::size_t r = 0; r < all_units.size(); ++r) {
      const int j = all_units[r];
      const bool low = 2 * j < n;
      const int rep = low ? j : n - j;
      const std::size_t idx = static_cast<std::size_t>(
          std::find(half.begin(), half.end(), rep) - half.begin());
      const bool flip = idx > 0 && ((pattern >> (idx - 1)) & 1L);
      cplx v = base_root[rep];
      if (flip) v = -v;
      y[r] = low ? v : std::conj(v);
    }
    std::vector<Rational> x(d, Rational(0));
    bool sane = true;
    for (int k = 0; k < d && sane; ++k) {
      cplx acc = 0;
      for (int r = 0; r < d; ++r) acc += inv[k][r] * y[r];
      const long double rounded = std::round(acc.real());
      if (std::fabs(rounded) > 9.0e18L) {
        sane = false;
        break;
      }
      x[k] = Rational(static_cast<long>(rounded));
    }
    if (!sane) continue;
    const CycNum cand = CycNum::from_coords(n, x);
    if (cand * cand == t) {
      return cand * CycNum(Rational(1, den));
    }
  }
  return std::nullopt;
}

QuadField::QuadField(const CycNum& s) : s_(s) {
  if (cyclotomic_sqrt(s)) {
    throw Error(ErrorKind::SIsSquare, "adjoined element is already a square in Q(zeta_" + std::to_string(s.order()) + ")");
  }
}

QuadExt::QuadExt(std::shared_ptr<const QuadField> field, CycNum re, CycNum im)
    : field_(std::move(field)), re_(std::move(re)), im_(std::move(im)) {}

QuadExt QuadExt::generator(std::shared_ptr<const QuadField> field) {
  return QuadExt(std::move(field), CycNum(0), CycNum(1));
}

QuadExt QuadExt::inverse() const {
  const CycNum norm = re_ * re_ - im_ * im_ * field_->s();
  if (norm.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in quadratic extension");
  const CycNum inv = norm.inverse();
  return QuadExt(field_, re_ * inv, -(im_ * inv));
}

QuadExt operator+(const QuadExt& a, const QuadExt& b) { return QuadExt(a.field_, a.re_ + b.re_, a.im_ + b.im_); }

QuadExt operator-(const QuadExt& a, const QuadExt& b) { return QuadExt(a.field_, a.re_ - b.re_, a.im_ - b.im_); }

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
  return QuadExt(a.field_, a.re_ * b.re_ + a.im_ * b.im_ * a.field_->s(), a.re_ * b.im_ + a.im_ * b.re_);
}

QuadExt operator/(const QuadExt& a, const QuadExt& b) { return a * b.inverse(); }

}  // namespace torus
