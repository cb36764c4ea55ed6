#include "torus/laurent.hpp"

#include <algorithm>
#include <map>

#include "torus/error.hpp"

namespace torus {

namespace {

bool key_less(const Term& a, const Term& b) { return a.et != b.et ? a.et < b.et : a.eq < b.eq; }
bool key_equal(const Term& a, const Term& b) { return a.et == b.et && a.eq == b.eq; }

// Merges two sorted term lists; sign = -1 subtracts the second.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && key_less(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || key_less(b[j], a[i])) {
      out.push_back(b[j]);
      if (subtract) out.back().c = -out.back().c;
      ++j;
    } else {
      CycNum c = subtract ? a[i].c - b[j].c : a[i].c + b[j].c;
      if (!c.is_zero()) out.push_back({a[i].et, a[i].eq, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LPoly::LPoly(long value) {
  if (value != 0) terms_.push_back({0, 0, CycNum(value)});
}

LPoly::LPoly(const CycNum& value) {
  if (!value.is_zero()) terms_.push_back({0, 0, value});
}

LPoly LPoly::monomial(const CycNum& c, int et, int eq) {
  LPoly p;
  if (!c.is_zero()) p.terms_.push_back({et, eq, c});
  return p;
}

LPoly LPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), key_less);
  LPoly p;
  p.terms_.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    CycNum c = std::move(terms[i].c);
    while (j < terms.size() && key_equal(terms[i], terms[j])) c += terms[j++].c;
    if (!c.is_zero()) p.terms_.push_back({terms[i].et, terms[i].eq, std::move(c)});
    i = j;
  }
  return p;
}

std::optional<CycNum> LPoly::constant_value() const {
  if (terms_.empty()) return CycNum(0);
  if (terms_.size() == 1 && terms_[0].et == 0 && terms_[0].eq == 0) return terms_[0].c;
  return std::nullopt;
}

CycNum LPoly::coeff(int et, int eq) const {
  const Term key{et, eq, CycNum()};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, key_less);
  if (it != terms_.end() && key_equal(*it, key)) return it->c;
  return CycNum(0);
}

Degree LPoly::dq() const {
  Degree d;
  for (const auto& tm : terms_) {
    if (!d || tm.eq > *d) d = tm.eq;
  }
  return d;
}

Degree LPoly::dt() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().et;
}

Degree LPoly::min_dt() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().et;
}

LPoly LPoly::operator-() const {
  LPoly p = *this;
  for (auto& tm : p.terms_) tm.c = -tm.c;
  return p;
}

LPoly& LPoly::operator+=(const LPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

LPoly operator*(const LPoly& a, const LPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return LPoly();
  // Multiplying by a single term keeps the key order.
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const Term& u = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    const LPoly& p = a.terms_.size() == 1 ? b : a;
    LPoly out;
    out.terms_.reserve(p.terms_.size());
    for (const auto& tm : p.terms_) out.terms_.push_back({tm.et + u.et, tm.eq + u.eq, tm.c * u.c});
    return out;
  }
  std::vector<Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prods.push_back({x.et + y.et, x.eq + y.eq, x.c * y.c});
  }
  return LPoly::from_terms(std::move(prods));
}

bool operator==(const LPoly& a, const LPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!key_equal(a.terms_[i], b.terms_[i]) || !(a.terms_[i].c == b.terms_[i].c)) return false;
  }
  return true;
}

LPoly LPoly::scaled(const CycNum& c) const {
  if (c.is_zero()) return LPoly();
  LPoly p = *this;
  for (auto& tm : p.terms_) tm.c = tm.c * c;
  return p;
}

LPoly LPoly::shifted(int et, int eq) const {
  LPoly p = *this;
  for (auto& tm : p.terms_) {
    tm.et += et;
    tm.eq += eq;
  }
  return p;
}

LPoly LPoly::pow(int k) const {
  if (k < 0) {
    if (!is_unit()) throw Error(ErrorKind::NotAUnit, "negative power of a non-unit polynomial");
    const Term& u = terms_[0];
    return monomial(u.c.pow(k), u.et * k, u.eq * k);
  }
  LPoly result(1);
  LPoly base = *this;
  while (k != 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k != 0) base *= base;
  }
  return result;
}

std::size_t LPoly::hash() const {
  std::size_t h = 0x51ed27;
  for (const auto& tm : terms_) {
    h ^= std::hash<long>()((static_cast<long>(tm.et) << 32) ^ static_cast<unsigned>(tm.eq)) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
    h ^= tm.c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

LPoly divide_by_unit(const LPoly& p, const LPoly& u) {
  if (!u.is_unit()) throw Error(ErrorKind::NotAUnit, "divisor has " + std::to_string(u.size()) + " terms");
  const Term& d = u.terms()[0];
  return p.shifted(-d.et, -d.eq).scaled(d.c.inverse());
}

Substitution Substitution::scale_q(const CycNum& a) {
  Substitution s;
  s.alpha = a;
  return s;
}

Substitution Substitution::scale_t(const CycNum& b) {
  Substitution s;
  s.beta = b;
  return s;
}

Substitution Substitution::t_to_q() {
  Substitution s;
  s.A = 0;
  s.B = 1;
  return s;
}

Substitution Substitution::invert_t() {
  Substitution s;
  s.A = -1;
  return s;
}

Substitution Substitution::invert_q() {
  Substitution s;
  s.D = -1;
  return s;
}

Substitution Substitution::eval_t(const CycNum& v) {
  Substitution s;
  s.beta = v;
  s.A = 0;
  return s;
}

Substitution Substitution::eval_q(const CycNum& v) {
  Substitution s;
  s.alpha = v;
  s.D = 0;
  return s;
}

Substitution Substitution::bar() {
  Substitution s;
  s.alpha = CycNum(-1);
  s.A = -1;
  s.conjugate = true;
  return s;
}

Substitution Substitution::conj_coeffs() {
  Substitution s;
  s.conjugate = true;
  return s;
}

Substitution Substitution::then(const Substitution& next) const {
  Substitution r;
  auto c2 = [&](const CycNum& x) { return next.conjugate ? x.conj() : x; };
  r.conjugate = conjugate != next.conjugate;
  r.beta = c2(beta) * next.beta.pow(A) * next.alpha.pow(B);
  r.alpha = c2(alpha) * next.beta.pow(C) * next.alpha.pow(D);
  r.A = next.A * A + next.C * B;
  r.B = next.B * A + next.D * B;
  r.C = next.A * C + next.C * D;
  r.D = next.B * C + next.D * D;
  return r;
}

LPoly Substitution::apply(const LPoly& p) const {
  std::map<int, CycNum> beta_pow, alpha_pow;
  auto power = [](std::map<int, CycNum>& cache, const CycNum& base, int e) -> const CycNum& {
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, base.pow(e)).first;
    return it->second;
  };
  const bool trivial_beta = beta.is_one();
  const bool trivial_alpha = alpha.is_one();
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& tm : p.terms()) {
    CycNum c = conjugate ? tm.c.conj() : tm.c;
    if (!trivial_beta && tm.et != 0) c *= power(beta_pow, beta, tm.et);
    if (!trivial_alpha && tm.eq != 0) c *= power(alpha_pow, alpha, tm.eq);
    out.push_back({A * tm.et + C * tm.eq, B * tm.et + D * tm.eq, std::move(c)});
  }
  return LPoly::from_terms(std::move(out));
}

}  // namespace torus
