#include "torus/reps.hpp"

#include <numeric>

#include "torus/error.hpp"

namespace torus {

namespace {

long sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

// zeta_k^e inside Q(zeta_order); k must divide order.
CycNum zeta(int order, int k, long e) {
  long r = (static_cast<long>(order / k) * (e % k)) % order;
  return CycNum::root(order, r);
}

CycNum i_pow(int order, long e) { return zeta(order, 4, ((e % 4) + 4) % 4); }

Mat2 const_mat(const CycNum& a, const CycNum& b, const CycNum& c, const CycNum& d) {
  return {LPoly(a), LPoly(b), LPoly(c), LPoly(d)};
}

bool all_terms(const Mat2& mat, int et, bool q_free) {
  for (const LPoly* p : {&mat.a11, &mat.a12, &mat.a21, &mat.a22}) {
    for (const auto& tm : p->terms()) {
      if (tm.et != et) return false;
      if (q_free && tm.eq != 0) return false;
    }
  }
  return true;
}

std::string degree_text(const Degree& d) { return d ? std::to_string(*d) : std::string("-inf"); }

}  // namespace

std::string_view kind_name(RepKind kind) {
  switch (kind) {
    case RepKind::Rho1: return "rho1";
    case RepKind::Rho2: return "rho2";
    case RepKind::Rho3: return "rho3";
  }
  return "?";
}

RepKind parse_kind(std::string_view text) {
  if (text == "rho1") return RepKind::Rho1;
  if (text == "rho2") return RepKind::Rho2;
  if (text == "rho3") return RepKind::Rho3;
  throw Error(ErrorKind::BadParameters, "unknown representation kind '" + std::string(text) + "'");
}

Bezout bezout(int n, int m) {
  if (n < 1 || m < 1 || std::gcd(n, m) != 1) {
    throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(n) + ", " + std::to_string(m) + ") != 1");
  }
  long a = 0;
  for (long c = 0; c < m; ++c) {
    if ((c * n) % m == 1 % m) {
      a = c;
      break;
    }
  }
  if (2 * a > m) a -= m;
  return {a, (a * n - 1) / m};
}

int rep_field_order(int n, int m) { return std::lcm(std::lcm(4 * m, 2 * n), 4); }

CycNum quantum_bracket(const CycNum& z, long k) {
  const CycNum den = z - z.inverse();
  if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "z - z^{-1} vanishes");
  return (z.pow(k) - z.pow(-k)) / den;
}

CycNum Rho3Constants::bracket_lambda(long k) const {
  const CycNum den = lambda2 - lambda1;
  if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "lambda2 = lambda1");
  return (lambda2.pow(k) - lambda1.pow(k)) / den;
}

CycNum Rho3Constants::bracket_mu(long k) const {
  const CycNum den = mu2.pow(b) - mu1.pow(b);
  if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "mu2^b = mu1^b");
  return (mu2.pow(k) - mu1.pow(k)) / den;
}

Rho3Constants rho3_constants(int n, int m) {
  if (n < 2 || m < 2) throw Error(ErrorKind::BadParameters, "n and m must be at least 2");
  if (std::gcd(n, m) != 1) throw Error(ErrorKind::BadParameters, "rho3 needs gcd(n, m) = 1");
  if (m % 3 == 0) throw Error(ErrorKind::BadParameters, "rho3 needs m not divisible by 3");
  Rho3Constants c;
  c.n = n;
  c.m = m;
  c.order = rep_field_order(n, m);
  const Bezout ab = bezout(n, m);
  c.a = ab.a;
  c.b = ab.b;
  const int N = c.order;
  const CycNum u0 = zeta(N, 4 * m, 3 * m - 2);
  c.U = u0 - u0.inverse();
  c.lambda1 = zeta(N, 4 * m, 3 * m - 6);
  c.lambda2 = zeta(N, 4 * m, 3 * m + 6);
  c.Uprime = c.U + c.lambda1 + c.lambda2;
  c.V = m > 2 ? CycNum(-1) - zeta(N, m, 1) - zeta(N, m, -1) : CycNum(-1).lifted(N);
  c.mu1 = zeta(N, n, 1);
  c.mu2 = zeta(N, n, -1);
  const LPoly head = LPoly::monomial(c.Uprime * c.bracket_lambda(c.a) + c.bracket_lambda(c.a - 1), 0, -1);
  c.A1 = head - LPoly(c.mu1.pow(c.b));
  c.A2 = head - LPoly(c.mu2.pow(c.b));
  return c;
}

Generators Generators::make(int n, int m, Mat2 x, Mat2 y, bool collapsed) {
  Generators g;
  g.n = n;
  g.m = m;
  g.collapsed = collapsed;
  g.x = std::move(x);
  g.y = std::move(y);
  g.x_pow.push_back(Mat2::identity());
  for (int k = 1; k <= m; ++k) g.x_pow.push_back(g.x_pow.back() * g.x);
  g.y_pow.push_back(Mat2::identity());
  for (int k = 1; k <= n; ++k) g.y_pow.push_back(g.y_pow.back() * g.y);
  const Mat2 xm = g.x_pow.back();
  const Mat2 yn = g.y_pow.back();
  g.x_pow.pop_back();
  g.y_pow.pop_back();
  if (!(xm == yn)) throw Error(ErrorKind::BadParameters, "generators violate X^m = Y^n");
  auto s = xm.scalar_value();
  if (!s || !s->is_unit()) throw Error(ErrorKind::BadParameters, "X^m is not a scalar monomial");
  g.delta = *s;
  g.x_inv = g.x.inverse();
  g.y_inv = g.y.inverse();
  return g;
}

Generators Generators::substituted(const Substitution& s, bool collapse) const {
  return make(n, m, x.substituted(s), y.substituted(s), collapsed || collapse);
}

Rep::Rep(RepKind kind, int n, int m, Mat2 x, Mat2 y)
    : kind_(kind), n_(n), m_(m), order_(rep_field_order(n, m)) {
  generic_ = Generators::make(n, m, std::move(x), std::move(y), false);
  specialized_ = generic_.substituted(Substitution::t_to_q(), true);
}

Rep Rep::rho1(int n) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorKind::BadParameters, "rho1 needs odd n >= 3");
  const int N = rep_field_order(n, 2);
  const long l = (n - 1) / 2;
  const CycNum zn = zeta(N, n, 1);
  const CycNum c = CycNum(2) + zn + zn.inverse();
  const LPoly t2 = LPoly::t(2);
  const LPoly tn = LPoly::t(n);
  Mat2 y{LPoly(CycNum(-1)), LPoly::monomial(CycNum(-1), 0, -1), LPoly::monomial(c, 0, 1), LPoly(c - CycNum(1))};
  Mat2 x{LPoly(), LPoly(-quantum_bracket(zn, l)), LPoly(c * quantum_bracket(zn, l + 1)), LPoly()};
  Rep rep(RepKind::Rho1, n, 2, x.scaled(tn), y.scaled(t2));
  rep.reason_ = "faithful: m = 2 and n odd";
  return rep;
}

Rep Rep::rho2(int n, int m) {
  if (n < 2 || m < 2) throw Error(ErrorKind::BadParameters, "n and m must be at least 2");
  const int N = rep_field_order(n, m);
  const CycNum z2m = zeta(N, 2 * m, 1);
  const CycNum z2n = zeta(N, 2 * n, 1);
  Mat2 x = const_mat(z2m, CycNum(1), CycNum(0), z2m.inverse());
  Mat2 y{LPoly(z2n), LPoly(), LPoly::q(), LPoly(z2n.inverse())};
  Rep rep(RepKind::Rho2, n, m, x.scaled(LPoly::t(n)), y.scaled(LPoly::t(m)));
  rep.reason_ = "faithful for all n, m >= 2";
  return rep;
}

Rep Rep::rho3(int n, int m) {
  Rho3Constants c = rho3_constants(n, m);
  const int N = c.order;
  const CycNum lam_a = c.bracket_lambda(c.a);
  const CycNum mu_b1 = c.bracket_mu(1);
  const CycNum x_pref = CycNum(sign_pow(c.b)) * i_pow(N, n + 1);
  const CycNum y_pref = CycNum(sign_pow(c.a)) * i_pow(N, m);
  Mat2 x = const_mat(c.Uprime, c.V, c.V, -c.U);
  const LPoly off = LPoly::monomial(c.V * lam_a, 0, -1);  // q^{-1} V [lambda]_a
  Mat2 y{c.A1.scaled(mu_b1) + LPoly(c.mu1), off.scaled(mu_b1), -divide_by_unit(c.A1 * c.A2, off).scaled(mu_b1),
         LPoly(c.mu1) - c.A2.scaled(mu_b1)};
  Rep rep(RepKind::Rho3, n, m, x.scaled(LPoly::monomial(x_pref, n, 0)), y.scaled(LPoly::monomial(y_pref, m, 0)));
  rep.faithful_ = n % 2 == 1;
  rep.reason_ = rep.faithful_ ? "faithful: gcd(n, m) = 1, n odd, 3 does not divide m"
                              : "not faithful: n even makes Y^{n/2} scalar";
  rep.consts_ = std::move(c);
  return rep;
}

Rep Rep::build(RepKind kind, int n, int m) {
  switch (kind) {
    case RepKind::Rho1:
      if (m != 2) throw Error(ErrorKind::BadParameters, "rho1 needs m = 2");
      return rho1(n);
    case RepKind::Rho2: return rho2(n, m);
    case RepKind::Rho3: return rho3(n, m);
  }
  throw Error(ErrorKind::BadParameters, "unknown kind");
}

Bezout Rep::bezout_pair() const {
  if (consts_) return {consts_->a, consts_->b};
  if (kind_ == RepKind::Rho1) return {1, (n_ - 1) / 2};
  throw Error(ErrorKind::UnsupportedKind, "no meridian convention for rho2");
}

Mat2 closed_form_power(const Rep& rep, Letter letter, long k) {
  const int n = rep.n();
  const int m = rep.m();
  const int N = rep.field_order();
  if (letter == Letter::D) throw Error(ErrorKind::BadParameters, "closed forms exist for X and Y only");
  switch (rep.kind()) {
    case RepKind::Rho1: {
      const CycNum zn = zeta(N, n, 1);
      const CycNum c = CycNum(2) + zn + zn.inverse();
      if (letter == Letter::X) {
        // X^2 = t^{2n} I, so only the parity of k matters.
        const LPoly tk = LPoly::t(static_cast<int>(n * k));
        if (k % 2 == 0) return Mat2::scalar(tk);
        const Mat2 x1{LPoly(), LPoly(-quantum_bracket(zn, (n - 1) / 2)), LPoly(c * quantum_bracket(zn, (n + 1) / 2)),
                      LPoly()};
        return x1.scaled(tk);
      }
      auto br = [&](long j) { return quantum_bracket(zn, j); };
      Mat2 body{LPoly(-br(k) - br(k - 1)), LPoly::monomial(-br(k), 0, -1), LPoly::monomial(c * br(k), 0, 1),
                LPoly(br(k) + br(k + 1))};
      return body.scaled(LPoly::t(static_cast<int>(2 * k)));
    }
    case RepKind::Rho2: {
      if (letter == Letter::X) {
        const CycNum z = zeta(N, 2 * m, 1);
        return const_mat(z.pow(k), quantum_bracket(z, k), CycNum(0), z.pow(-k)).scaled(LPoly::t(static_cast<int>(n * k)));
      }
      const CycNum z = zeta(N, 2 * n, 1);
      Mat2 body{LPoly(z.pow(k)), LPoly(), LPoly::monomial(quantum_bracket(z, k), 0, 1), LPoly(z.pow(-k))};
      return body.scaled(LPoly::t(static_cast<int>(m * k)));
    }
    case RepKind::Rho3: {
      const Rho3Constants& c = *rep.constants();
      if (letter == Letter::X) {
        const CycNum pref = CycNum(sign_pow(c.b * k)) * i_pow(N, (n + 1) * k);
        const CycNum lk = c.bracket_lambda(k);
        Mat2 body = const_mat(c.Uprime * lk + c.bracket_lambda(k - 1), c.V * lk, c.V * lk,
                              -(c.Uprime * lk) + c.bracket_lambda(k + 1));
        return body.scaled(LPoly::monomial(pref, static_cast<int>(n * k), 0));
      }
      const CycNum pref = CycNum(sign_pow(c.a * k)) * i_pow(N, m * k);
      const CycNum muk = c.bracket_mu(k);
      const CycNum mu1k = c.mu1.pow(k);
      const LPoly off = LPoly::monomial(c.V * c.bracket_lambda(c.a), 0, -1);
      Mat2 body{c.A1.scaled(muk) + LPoly(mu1k), off.scaled(muk), -divide_by_unit(c.A1 * c.A2, off).scaled(muk),
                LPoly(mu1k) - c.A2.scaled(muk)};
      return body.scaled(LPoly::monomial(pref, static_cast<int>(m * k), 0));
    }
  }
  throw Error(ErrorKind::UnsupportedKind, "unknown kind");
}

Mat2 encode(const Generators& gens, const MonoidWord& w) {
  if (w.n != gens.n || w.m != gens.m) {
    throw Error(ErrorKind::ParameterMismatch, "word over G(" + std::to_string(w.n) + "," + std::to_string(w.m) +
                                                  ") given to a representation of G(" + std::to_string(gens.n) +
                                                  "," + std::to_string(gens.m) + ")");
  }
  Mat2 acc = Mat2::identity();
  long deltas = 0;
  for (const auto& s : w.syllables) {
    if (s.letter == Letter::D) {
      deltas += s.exp;
      continue;
    }
    const long period = s.letter == Letter::X ? gens.m : gens.n;
    deltas += s.exp / period;
    const long r = s.exp % period;
    if (r == 0) continue;
    acc = acc * (s.letter == Letter::X ? gens.x_pow[r] : gens.y_pow[r]);
  }
  if (deltas != 0) acc = acc.scaled(gens.delta.pow(static_cast<int>(deltas)));
  return acc;
}

Mat2 encode(const Rep& rep, const MonoidWord& w, bool specialized) {
  return encode(rep.generators(specialized), w);
}

FundReport verify_fund(const Mat2& x, const Mat2& y, int n, int m) {
  FundReport r;
  r.relation = x.pow(m) == y.pow(n);
  r.checks.push_back({1, 0, r.relation, r.relation ? "X^m = Y^n" : "X^m != Y^n"});
  r.cond2 = true;
  Mat2 p = Mat2::identity();
  for (int k = 1; k < m; ++k) {
    p = p * x;
    std::string detail;
    bool ok = all_terms(p, n * k, true);
    if (!ok) detail = "X^k is not t^{nk} times a constant matrix";
    if (ok && p.a12.is_zero()) {
      ok = false;
      detail = "entry a12 of t^{-nk} X^k vanishes";
    }
    if (ok) detail = "constant entries, a12 != 0";
    r.cond2 = r.cond2 && ok;
    r.checks.push_back({2, k, ok, detail});
  }
  r.cond3 = true;
  p = Mat2::identity();
  for (int k = 1; k < n; ++k) {
    p = p * y;
    std::string detail;
    bool ok = all_terms(p, m * k, false);
    if (!ok) detail = "Y^k is not t^{mk} times a q-polynomial matrix";
    if (ok) {
      const Degree d11 = p.a11.dq(), d12 = p.a12.dq(), d21 = p.a21.dq(), d22 = p.a22.dq();
      auto le0 = [](const Degree& d) { return !d || *d <= 0; };
      if (!le0(d11) || !le0(d12) || !le0(d22)) {
        ok = false;
        detail = "d_q(a11, a12, a22) = (" + degree_text(d11) + ", " + degree_text(d12) + ", " + degree_text(d22) +
                 "), expected <= 0";
      } else if (d21 != Degree(1)) {
        ok = false;
        detail = "d_q(a21) = " + degree_text(d21) + ", expected 1";
      } else {
        detail = "d_q pattern (<=0, <=0, 1, <=0)";
      }
    }
    r.cond3 = r.cond3 && ok;
    r.checks.push_back({3, k, ok, detail});
  }
  return r;
}

FundReport verify_fund(const Rep& rep) { return verify_fund(rep.mx(), rep.my(), rep.n(), rep.m()); }

Mat2 meridian(const Generators& gens, const Bezout& ab) { return gens.y.pow(ab.b) * gens.x.pow(-ab.a); }

Mat2 meridian(const Rep& rep) {
  if (rep.kind() == RepKind::Rho2) throw Error(ErrorKind::UnsupportedKind, "meridian is defined for rho1 and rho3");
  return meridian(rep.generic(), rep.bezout_pair());
}

bool meridian_shape_ok(const Rep& rep, const Mat2& mer) {
  const Bezout ab = rep.bezout_pair();
  const CycNum pref = i_pow(rep.field_order(), -ab.a - 1);
  return mer.a12.is_zero() && mer.a11 == LPoly::monomial(pref, -1, -1) &&
         mer.a22 == LPoly::monomial(pref * CycNum(sign_pow(ab.a)), -1, 1);
}

ReflectionCheck reflection_check(const Mat2& r) {
  ReflectionCheck c;
  c.squares_to_identity = r * r == Mat2::identity();
  c.traceless = r.trace().is_zero();
  c.not_scalar = !(r == Mat2::identity()) && !(r == Mat2::scalar(LPoly(-1)));
  return c;
}

UnitarityReport unitarity_check(const Rep& rep, bool conjugate_coefficients) {
  if (rep.kind() != RepKind::Rho3) throw Error(ErrorKind::UnsupportedKind, "unitarity is checked for rho3");
  const Rho3Constants& c = *rep.constants();
  UnitarityReport r;
  r.q_rotated = c.a % 2 == 0;
  Substitution bar = Substitution::bar();
  bar.conjugate = conjugate_coefficients;
  const Mat2 J{LPoly(), LPoly(1), LPoly(1), LPoly()};
  auto check = [&](Mat2 mat) {
    if (r.q_rotated) mat = mat.substituted(Substitution::scale_q(i_pow(rep.field_order(), 1)));
    return mat.substituted(bar).transpose() * J * mat == J;
  };
  r.x_ok = check(rep.mx());
  r.y_ok = check(rep.my());
  return r;
}

namespace {

Mat2 alternating(const Mat2& first, const Mat2& second, int factors) {
  Mat2 acc = Mat2::identity();
  for (int i = 0; i < factors; ++i) acc = acc * (i % 2 == 0 ? first : second);
  return acc;
}

struct TraceTriple {
  LPoly s1s2, s1, meridian_at_one;
  friend bool operator==(const TraceTriple&, const TraceTriple&) = default;
};

TraceTriple trace_triple(const Mat2& x, const Mat2& y, int n) {
  const int np = (n - 1) / 2;
  const Mat2 s1 = x * y.pow(-np);
  const Mat2 s2 = y * s1.inverse();
  const Mat2 mer = y.pow(np) * x.pow(-1);
  const Substitution at_one = Substitution::eval_t(CycNum(1)).then(Substitution::eval_q(CycNum(1)));
  return {(s1 * s2).trace(), s1.trace(), at_one.apply(mer.trace())};
}

}  // namespace

DihedralReport dihedral_braid_check(const Rep& rep) {
  const int n = rep.n();
  if (rep.kind() != RepKind::Rho3 || rep.m() != 2 || n % 2 == 0 || n < 3) {
    throw Error(ErrorKind::UnsupportedKind, "dihedral check needs rho3(n, 2) with n odd");
  }
  const int np = (n - 1) / 2;
  const Mat2& x = rep.mx();
  const Mat2& y = rep.my();
  DihedralReport r;
  {
    const Mat2 s1 = y.pow(np) * x.inverse();
    const Mat2 s2 = s1.inverse() * y;
    r.literal_form = alternating(s1, s2, n) == x && alternating(s2, s1, n) == x;
  }
  {
    const Mat2 s1 = x * y.pow(-np);
    const Mat2 s2 = y * s1.inverse();
    r.artin_form = alternating(s1, s2, n) == x && alternating(s2, s1, n) == x;
  }
  const int N = rep.field_order();
  const CycNum z = zeta(N, n, 1);
  const CycNum p = (z.inverse() - z) / (z.pow(np) - z.pow(-np));
  const CycNum pinv = p.inverse();
  auto conj = [&](const Mat2& mat) {
    return Mat2{mat.a11, mat.a12.scaled(pinv), mat.a21.scaled(p), mat.a22};
  };
  const Mat2 xc = conj(x);
  const Mat2 yc = conj(y);
  const Mat2 x_expected = Mat2{LPoly(), LPoly(pinv), LPoly(p), LPoly()}.scaled(LPoly::t(n));
  const Mat2 y_expected = Mat2{LPoly(z + CycNum(1) + z.inverse()), LPoly::q(-1),
                               LPoly::monomial(-(z + CycNum(2) + z.inverse()), 0, 1), LPoly(-1)}
                              .scaled(LPoly::t(2));
  r.conjugated_matches = xc == x_expected && yc == y_expected;
  r.trace_triple_invariant = trace_triple(x, y, n) == trace_triple(xc, yc, n);
  return r;
}

}  // namespace torus
