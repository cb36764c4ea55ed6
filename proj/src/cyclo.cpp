#include "torus/cyclo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "torus/error.hpp"

namespace torus {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic polynomial coefficient overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("cyclotomic polynomial coefficient overflow");
  return r;
}

int mobius(int d) {
  int result = 1;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    result = -result;
  }
  if (d > 1) result = -result;
  return result;
}

// p * (x^d - 1)
IntPoly times_binomial(const IntPoly& p, int d) {
  IntPoly r(p.size() + d, 0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    r[k + d] = p[k];
  }
  for (std::size_t k = 0; k < p.size(); ++k) {
    r[k] = checked_sub(r[k], p[k]);
  }
  return r;
}

// p / (x^d - 1), exact.
IntPoly over_binomial(const IntPoly& p, int d) {
  const int deg = static_cast<int>(p.size()) - 1;
  IntPoly q(deg - d + 1, 0);
  // p[k + d] = q[k] - q[k + d]
  for (int k = deg - d; k >= 0; --k) {
    std::int64_t hi = (k + d <= deg - d) ? q[k + d] : 0;
    std::int64_t v;
    if (__builtin_add_overflow(p[k + d], hi, &v)) throw std::overflow_error("cyclotomic polynomial coefficient overflow");
    q[k] = v;
  }
  return q;
}

std::unique_ptr<CycloField> make_field(int order) {
  auto f = std::make_unique<CycloField>();
  f->order = order;
  f->modulus = cyclotomic_polynomial(order);
  f->degree = static_cast<int>(f->modulus.size()) - 1;
  for (int j = 0; j < f->degree; ++j) {
    if (f->modulus[j] != 0) f->tail.emplace_back(j, f->modulus[j]);
  }
  const int deg = f->degree;
  f->power_table.assign(order, std::vector<std::int64_t>(deg, 0));
  std::vector<std::int64_t> cur(deg, 0);
  cur[0] = 1;
  for (int k = 0; k < order; ++k) {
    f->power_table[k] = cur;
    // multiply by x and reduce the overflowing top coefficient
    std::int64_t top = cur[deg - 1];
    for (int j = deg - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (deg == 1) cur[0] = 0;
    if (top != 0) {
      for (auto [j, c] : f->tail) cur[j] = checked_sub(cur[j], checked_mul(top, c));
    }
  }
  return f;
}

int bit_length_abs(std::int64_t v) {
  std::uint64_t a = v < 0 ? (~static_cast<std::uint64_t>(v) + 1) : static_cast<std::uint64_t>(v);
  return 64 - std::countl_zero(a);
}

int max_bits(const std::vector<std::int64_t>& v) {
  int b = 0;
  for (auto x : v) b = std::max(b, bit_length_abs(x));
  return b;
}

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  u128 a = neg ? (~static_cast<u128>(v) + 1) : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(a >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(a)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

mpz_class to_mpz(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

bool fits_i64(i128 v) {
  return v >= static_cast<i128>(INT64_MIN) && v <= static_cast<i128>(INT64_MAX);
}

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs_u128(i128 v) { return v < 0 ? (~static_cast<u128>(v) + 1) : static_cast<u128>(v); }

std::mutex& registry_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

IntPoly cyclotomic_polynomial(int order) {
  if (order < 1) throw Error(ErrorKind::BadParameters, "cyclotomic order must be positive");
  // Phi_N = prod_{d | N} (x^d - 1)^{mu(N/d)}: multiply first, then divide.
  IntPoly p{1};
  std::vector<int> divide_by;
  for (int d = 1; d <= order; ++d) {
    if (order % d != 0) continue;
    int mu = mobius(order / d);
    if (mu == 1) p = times_binomial(p, d);
    if (mu == -1) divide_by.push_back(d);
  }
  for (int d : divide_by) p = over_binomial(p, d);
  return p;
}

int euler_phi(int order) {
  int result = order;
  int n = order;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const CycloField& cyclo_field(int order) {
  if (order < 1) throw Error(ErrorKind::BadParameters, "cyclotomic order must be positive");
  static std::map<int, std::unique_ptr<CycloField>> fields;
  std::lock_guard lock(registry_mutex());
  auto it = fields.find(order);
  if (it == fields.end()) it = fields.emplace(order, make_field(order)).first;
  return *it->second;
}

// Internal constructors shared by the arithmetic routines below.
struct CycNumAccess {
  static CycNum from_i128(const CycloField* f, std::vector<i128>& acc, i128 den) {
    // acc has length f->degree, den > 0
    CycNum r;
    r.field_ = f;
    bool all_small = fits_i64(den);
    for (auto v : acc) all_small = all_small && fits_i64(v);
    if (den != 1) {
      if (all_small) {
        std::uint64_t g = static_cast<std::uint64_t>(static_cast<std::int64_t>(den));
        for (auto v : acc) {
          if (g == 1) break;
          g = std::gcd(g, static_cast<std::uint64_t>(abs_u128(v)));
        }
        if (g > 1) {
          for (auto& v : acc) v /= static_cast<i128>(g);
          den /= static_cast<i128>(g);
        }
      } else {
        u128 g = abs_u128(den);
        for (auto v : acc) {
          if (g == 1) break;
          g = gcd_u128(g, abs_u128(v));
        }
        if (g > 1) {
          for (auto& v : acc) v /= static_cast<i128>(g);
          den /= static_cast<i128>(g);
        }
        all_small = fits_i64(den);
        for (auto v : acc) all_small = all_small && fits_i64(v);
      }
    }
    if (all_small) {
      r.small_num_.resize(acc.size());
      for (std::size_t k = 0; k < acc.size(); ++k) r.small_num_[k] = static_cast<std::int64_t>(acc[k]);
      r.small_den_ = static_cast<std::int64_t>(den);
      return r;
    }
    std::vector<mpz_class> num(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) num[k] = to_mpz(acc[k]);
    return from_big(f, std::move(num), to_mpz(den));
  }

  static CycNum from_big(const CycloField* f, std::vector<mpz_class> num, mpz_class den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    if (den < 0) {
      den = -den;
      for (auto& v : num) v = -v;
    }
    mpz_class g = den;
    for (const auto& v : num) {
      if (g == 1) break;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (g != 1) {
      for (auto& v : num) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
    }
    CycNum r;
    r.field_ = f;
    bool small = den.fits_slong_p();
    for (const auto& v : num) small = small && v.fits_slong_p();
    if (small) {
      r.small_num_.resize(num.size());
      for (std::size_t k = 0; k < num.size(); ++k) r.small_num_[k] = num[k].get_si();
      r.small_den_ = den.get_si();
      return r;
    }
    r.big_ = true;
    r.small_num_.clear();
    r.big_num_ = std::move(num);
    r.big_den_ = std::move(den);
    return r;
  }

  static std::vector<mpz_class> big_num(const CycNum& a) {
    if (a.big_) return a.big_num_;
    std::vector<mpz_class> v(a.small_num_.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = to_mpz(a.small_num_[k]);
    return v;
  }

  static mpz_class big_den(const CycNum& a) { return a.big_ ? a.big_den_ : to_mpz(a.small_den_); }

  static bool is_big(const CycNum& a) { return a.big_; }
  static const std::vector<std::int64_t>& small_num(const CycNum& a) { return a.small_num_; }
  static std::int64_t small_den(const CycNum& a) { return a.small_den_; }
  static const CycloField* field(const CycNum& a) { return a.field_; }

  // Reduces a coefficient vector of arbitrary length modulo Phi_N.
  static void reduce_big(const CycloField& f, std::vector<mpz_class>& v) {
    const int deg = f.degree;
    for (int k = static_cast<int>(v.size()) - 1; k >= deg; --k) {
      if (v[k] == 0) continue;
      const mpz_class c = v[k];
      for (auto [j, p] : f.tail) v[k - deg + j] -= c * static_cast<long>(p);
      v[k] = 0;
    }
    v.resize(deg);
  }

  // Returns false on overflow.
  static bool reduce_i128(const CycloField& f, std::vector<i128>& v) {
    const int deg = f.degree;
    for (int k = static_cast<int>(v.size()) - 1; k >= deg; --k) {
      const i128 c = v[k];
      if (c == 0) continue;
      for (auto [j, p] : f.tail) {
        i128 prod;
        if (__builtin_mul_overflow(c, static_cast<i128>(p), &prod)) return false;
        if (__builtin_sub_overflow(v[k - deg + j], prod, &v[k - deg + j])) return false;
      }
      v[k] = 0;
    }
    v.resize(deg);
    return true;
  }

  static CycNum mul_big(const CycNum& a, const CycNum& b) {
    const CycloField& f = *a.field_;
    auto an = big_num(a);
    auto bn = big_num(b);
    std::vector<mpz_class> acc(2 * f.degree - 1);
    for (std::size_t i = 0; i < an.size(); ++i) {
      if (an[i] == 0) continue;
      for (std::size_t j = 0; j < bn.size(); ++j) {
        if (bn[j] == 0) continue;
        mpz_addmul(acc[i + j].get_mpz_t(), an[i].get_mpz_t(), bn[j].get_mpz_t());
      }
    }
    reduce_big(f, acc);
    return from_big(a.field_, std::move(acc), big_den(a) * big_den(b));
  }

  static CycNum mul(const CycNum& a, const CycNum& b) {
    const CycloField& f = *a.field_;
    if (!a.big_ && !b.big_) {
      const int deg = f.degree;
      const int ba = max_bits(a.small_num_);
      const int bb = max_bits(b.small_num_);
      if (ba == 0 || bb == 0) return CycNum::zero_of(a.field_);
      const int slack = 64 - std::countl_zero(static_cast<std::uint64_t>(deg));
      if (ba + bb + slack <= 125) {
        std::vector<i128> acc(2 * deg - 1, 0);
        const auto& x = a.small_num_;
        const auto& y = b.small_num_;
        for (int i = 0; i < deg; ++i) {
          const i128 xi = x[i];
          if (xi == 0) continue;
          i128* out = acc.data() + i;
          for (int j = 0; j < deg; ++j) out[j] += xi * y[j];
        }
        if (reduce_i128(f, acc)) {
          return from_i128(a.field_, acc, static_cast<i128>(a.small_den_) * b.small_den_);
        }
      }
    }
    return mul_big(a, b);
  }

  static CycNum scale(const CycNum& a, const CycNum& rational) {
    // rational has only a constant coordinate
    if (!a.big_ && !rational.big_) {
      const i128 c = rational.small_num_[0];
      std::vector<i128> acc(a.small_num_.size());
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] = c * a.small_num_[k];
      return from_i128(a.field_, acc, static_cast<i128>(a.small_den_) * rational.small_den_);
    }
    auto num = big_num(a);
    const mpz_class c = rational.big_ ? rational.big_num_[0] : to_mpz(rational.small_num_[0]);
    for (auto& v : num) v *= c;
    return from_big(a.field_, std::move(num), big_den(a) * big_den(rational));
  }

  static CycNum add(const CycNum& a, const CycNum& b, bool subtract) {
    if (!a.big_ && !b.big_) {
      const std::size_t deg = a.small_num_.size();
      std::vector<i128> acc(deg);
      if (a.small_den_ == b.small_den_) {
        for (std::size_t k = 0; k < deg; ++k) {
          acc[k] = subtract ? static_cast<i128>(a.small_num_[k]) - b.small_num_[k]
                            : static_cast<i128>(a.small_num_[k]) + b.small_num_[k];
        }
        return from_i128(a.field_, acc, a.small_den_);
      }
      const std::int64_t g = std::gcd(a.small_den_, b.small_den_);
      const i128 fa = b.small_den_ / g;  // multiplier for a
      const i128 fb = a.small_den_ / g;
      const i128 den = fa * a.small_den_;
      bool ok = true;
      for (std::size_t k = 0; k < deg && ok; ++k) {
        i128 u, v;
        ok = !__builtin_mul_overflow(fa, static_cast<i128>(a.small_num_[k]), &u) &&
             !__builtin_mul_overflow(fb, static_cast<i128>(b.small_num_[k]), &v);
        if (ok) ok = subtract ? !__builtin_sub_overflow(u, v, &acc[k]) : !__builtin_add_overflow(u, v, &acc[k]);
      }
      if (ok) return from_i128(a.field_, acc, den);
    }
    auto an = big_num(a);
    auto bn = big_num(b);
    const mpz_class ad = big_den(a);
    const mpz_class bd = big_den(b);
    for (std::size_t k = 0; k < an.size(); ++k) {
      an[k] = subtract ? mpz_class(an[k] * bd - bn[k] * ad) : mpz_class(an[k] * bd + bn[k] * ad);
    }
    return from_big(a.field_, std::move(an), ad * bd);
  }

  // sum_k a_k * rows[idx(k)], used by lifting and Galois maps
  template <typename IndexFn>
  static CycNum linear_map(const CycNum& a, const CycloField* target, IndexFn idx) {
    const int deg = target->degree;
    if (!a.big_) {
      std::vector<i128> acc(deg, 0);
      bool ok = true;
      for (std::size_t k = 0; k < a.small_num_.size() && ok; ++k) {
        const std::int64_t c = a.small_num_[k];
        if (c == 0) continue;
        const auto& row = target->power_table[idx(static_cast<long>(k))];
        for (int j = 0; j < deg; ++j) {
          i128 prod;
          if (__builtin_mul_overflow(static_cast<i128>(c), static_cast<i128>(row[j]), &prod) ||
              __builtin_add_overflow(acc[j], prod, &acc[j])) {
            ok = false;
            break;
          }
        }
      }
      if (ok) return from_i128(target, acc, a.small_den_);
    }
    auto an = big_num(a);
    std::vector<mpz_class> acc(deg);
    for (std::size_t k = 0; k < an.size(); ++k) {
      if (an[k] == 0) continue;
      const auto& row = target->power_table[idx(static_cast<long>(k))];
      for (int j = 0; j < deg; ++j) acc[j] += an[k] * static_cast<long>(row[j]);
    }
    return from_big(target, std::move(acc), big_den(a));
  }
};

CycNum CycNum::zero_of(const CycloField* f) {
  CycNum r;
  r.field_ = f;
  r.small_num_.assign(f->degree, 0);
  return r;
}

CycNum::CycNum() : field_(&cyclo_field(1)), small_num_(1, 0) {}

CycNum::CycNum(long value) : field_(&cyclo_field(1)), small_num_(1, value) {}

CycNum::CycNum(const Rational& value) : field_(&cyclo_field(1)) {
  *this = CycNumAccess::from_big(field_, {value.num()}, value.den());
}

CycNum CycNum::root(int order, long k) {
  const CycloField& f = cyclo_field(order);
  long r = k % order;
  if (r < 0) r += order;
  CycNum out;
  out.field_ = &f;
  out.small_num_ = f.power_table[r];
  return out;
}

CycNum CycNum::from_coords(int order, std::span<const Rational> coords) {
  const CycloField& f = cyclo_field(order);
  if (static_cast<int>(coords.size()) != f.degree) {
    throw Error(ErrorKind::BadParameters, "coordinate count does not match phi(N)");
  }
  mpz_class den = 1;
  for (const auto& c : coords) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> num(coords.size());
  for (std::size_t k = 0; k < coords.size(); ++k) num[k] = coords[k].num() * (den / coords[k].den());
  return CycNumAccess::from_big(&f, std::move(num), den);
}

Rational CycNum::coord(int k) const {
  if (k < 0 || k >= degree()) throw std::out_of_range("coordinate index");
  if (big_) return Rational(big_num_[k], big_den_);
  return Rational(to_mpz(small_num_[k]), to_mpz(small_den_));
}

std::vector<Rational> CycNum::coords() const {
  std::vector<Rational> out;
  out.reserve(degree());
  for (int k = 0; k < degree(); ++k) out.push_back(coord(k));
  return out;
}

bool CycNum::is_zero() const {
  if (big_) return false;  // zero is always small
  return std::all_of(small_num_.begin(), small_num_.end(), [](std::int64_t v) { return v == 0; });
}

bool CycNum::is_one() const {
  if (big_ || small_den_ != 1 || small_num_[0] != 1) return false;
  return std::all_of(small_num_.begin() + 1, small_num_.end(), [](std::int64_t v) { return v == 0; });
}

bool CycNum::is_rational() const {
  if (big_) {
    return std::all_of(big_num_.begin() + 1, big_num_.end(), [](const mpz_class& v) { return v == 0; });
  }
  return std::all_of(small_num_.begin() + 1, small_num_.end(), [](std::int64_t v) { return v == 0; });
}

CycNum CycNum::lifted(int new_order) const {
  if (new_order == order()) return *this;
  if (new_order % order() != 0) throw Error(ErrorKind::BadParameters, "lift target must be a multiple of the order");
  const CycloField& target = cyclo_field(new_order);
  const long step = new_order / order();
  return CycNumAccess::linear_map(*this, &target, [&](long k) { return (k * step) % new_order; });
}

std::optional<CycNum> CycNum::restricted(int new_order) const {
  if (new_order == order()) return *this;
  if (order() % new_order != 0) throw Error(ErrorKind::BadParameters, "restriction target must divide the order");
  // Solve lift(x) = this over Q by Gaussian elimination.
  const CycloField& small = cyclo_field(new_order);
  const int rows = degree();
  const int cols = small.degree;
  const long step = order() / new_order;
  std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols + 1));
  for (int c = 0; c < cols; ++c) {
    const auto& col = field_->power_table[(c * step) % order()];
    for (int r = 0; r < rows; ++r) m[r][c] = col[r];
  }
  const auto rhs = coords();
  for (int r = 0; r < rows; ++r) m[r][cols] = rhs[r].value();
  int pivot_row = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < cols && pivot_row < rows; ++c) {
    int p = pivot_row;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[pivot_row]);
    const mpq_class inv = 1 / m[pivot_row][c];
    for (auto& v : m[pivot_row]) v *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == pivot_row || m[r][c] == 0) continue;
      const mpq_class fct = m[r][c];
      for (int k = 0; k <= cols; ++k) m[r][k] -= fct * m[pivot_row][k];
    }
    pivot_col.push_back(c);
    ++pivot_row;
  }
  for (int r = pivot_row; r < rows; ++r) {
    if (m[r][cols] != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = Rational(m[i][cols]);
  return from_coords(new_order, x);
}

CycNum CycNum::galois(long j) const {
  const long n = order();
  long r = j % n;
  if (r < 0) r += n;
  if (std::gcd(r, n) != 1 && n > 1) throw Error(ErrorKind::BadParameters, "Galois exponent must be a unit mod N");
  return CycNumAccess::linear_map(*this, field_, [&](long k) { return (k * r) % n; });
}

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// (quotient, remainder) of a / b, b nonzero and trimmed.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {QPoly{}, a};
  QPoly q(a.size() - b.size() + 1);
  const mpq_class lead = b.back();
  for (int k = static_cast<int>(a.size()) - 1; k >= static_cast<int>(b.size()) - 1; --k) {
    const mpq_class c = a[k] / lead;
    const int shift = k - (static_cast<int>(b.size()) - 1);
    q[shift] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

QPoly sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  QPoly r(std::max(a.size(), q.empty() || b.empty() ? 0 : q.size() + b.size() - 1));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k];
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= q[i] * b[j];
  }
  trim(r);
  return r;
}

}  // namespace

CycNum CycNum::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  QPoly r0(field_->modulus.begin(), field_->modulus.end());
  QPoly r1;
  for (const auto& c : coords()) r1.push_back(c.value());
  trim(r1);
  QPoly s0, s1{mpq_class(1)};
  while (!r1.empty()) {
    auto [q, rem] = divmod(r0, r1);
    QPoly s2 = sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_N is irreducible
  const mpq_class g = r0[0];
  std::vector<mpz_class> acc;
  mpz_class den = 1;
  for (auto& c : s0) {
    c /= g;
    c.canonicalize();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  acc.assign(std::max<std::size_t>(s0.size(), field_->degree), 0);
  for (std::size_t k = 0; k < s0.size(); ++k) acc[k] = s0[k].get_num() * (den / s0[k].get_den());
  CycNumAccess::reduce_big(*field_, acc);
  return CycNumAccess::from_big(field_, std::move(acc), den);
}

CycNum CycNum::pow(long exponent) const {
  CycNum base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  CycNum result = CycNum(1).lifted(order());
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  if (r.big_) {
    for (auto& v : r.big_num_) v = -v;
  } else {
    bool overflow = false;
    for (auto v : r.small_num_) overflow = overflow || v == INT64_MIN;
    if (overflow) return CycNumAccess::scale(*this, CycNum(-1));
    for (auto& v : r.small_num_) v = -v;
  }
  return r;
}

namespace {

int lcm_order(int a, int b) { return std::lcm(a, b); }

}  // namespace

CycNum& CycNum::operator+=(const CycNum& o) {
  if (field_ != o.field_) {
    const int l = lcm_order(order(), o.order());
    *this = CycNumAccess::add(lifted(l), o.lifted(l), false);
    return *this;
  }
  *this = CycNumAccess::add(*this, o, false);
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  if (field_ != o.field_) {
    const int l = lcm_order(order(), o.order());
    *this = CycNumAccess::add(lifted(l), o.lifted(l), true);
    return *this;
  }
  *this = CycNumAccess::add(*this, o, true);
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  const int l = a.field_ == b.field_ ? a.order() : lcm_order(a.order(), b.order());
  if (b.is_rational()) return CycNumAccess::scale(a.lifted(l), b);
  if (a.is_rational()) return CycNumAccess::scale(b.lifted(l), a);
  if (a.field_ != b.field_) return CycNumAccess::mul(a.lifted(l), b.lifted(l));
  return CycNumAccess::mul(a, b);
}

CycNum& CycNum::operator*=(const CycNum& o) {
  *this = *this * o;
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "cyclotomic division by zero");
  *this = *this * o.inverse();
  return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.field_ != b.field_) {
    const int l = std::lcm(a.order(), b.order());
    return a.lifted(l) == b.lifted(l);
  }
  if (a.big_ != b.big_) return false;
  if (a.big_) return a.big_den_ == b.big_den_ && a.big_num_ == b.big_num_;
  return a.small_den_ == b.small_den_ && a.small_num_ == b.small_num_;
}

std::size_t CycNum::hash() const {
  std::size_t h = 0x2545f491;
  auto mix = [&h](std::uint64_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  // Rationals hash alike in every field, so constants such as the identity
  // matrix entries agree with their lifts.
  if (is_rational()) {
    if (big_) {
      mix(mpz_getlimbn(big_den_.get_mpz_t(), 0));
      mix(mpz_getlimbn(big_num_[0].get_mpz_t(), 0) ^ static_cast<std::uint64_t>(sgn(big_num_[0])));
    } else {
      mix(static_cast<std::uint64_t>(small_den_));
      mix(static_cast<std::uint64_t>(small_num_[0]));
    }
    return h;
  }
  mix(static_cast<std::uint64_t>(order()));
  if (big_) {
    mix(mpz_getlimbn(big_den_.get_mpz_t(), 0));
    for (const auto& v : big_num_) mix(mpz_getlimbn(v.get_mpz_t(), 0) ^ static_cast<std::uint64_t>(sgn(v)));
  } else {
    mix(static_cast<std::uint64_t>(small_den_));
    for (auto v : small_num_) mix(static_cast<std::uint64_t>(v));
  }
  return h;
}

std::size_t CycNum::height_bits() const {
  std::size_t b = 0;
  if (big_) {
    for (const auto& v : big_num_) b = std::max(b, mpz_sizeinbase(v.get_mpz_t(), 2));
    return b;
  }
  return static_cast<std::size_t>(max_bits(small_num_));
}

std::complex<long double> numeric_embed(const CycNum& value, int precision) {
  if (precision < 1 || precision > 64) {
    throw Error(ErrorKind::BadParameters, "numeric_embed supports at most 64 binary digits");
  }
  const long double two_pi = 6.283185307179586476925286766559005768L;
  const int n = value.order();
  std::complex<long double> acc = 0;
  const auto coords = value.coords();
  for (int k = 0; k < value.degree(); ++k) {
    if (coords[k].is_zero()) continue;
    const long double angle = two_pi * static_cast<long double>(k) / static_cast<long double>(n);
    long double c;
    if (coords[k].num().fits_slong_p() && coords[k].den().fits_slong_p()) {
      c = static_cast<long double>(coords[k].num().get_si()) / static_cast<long double>(coords[k].den().get_si());
    } else {
      c = static_cast<long double>(coords[k].to_double());
    }
    acc += c * std::complex<long double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

}  // namespace torus
