#include "torus/hecke.hpp"

#include <deque>
#include <numeric>
#include <unordered_set>

#include "torus/error.hpp"

namespace torus {

namespace {

long floor_div2(long a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

CycNum imag_unit(int order) { return CycNum::root(order, order / 4); }

}  // namespace

std::string SpecializationRule::describe() const {
  std::string s;
  if (rotate_q) s += "q -> iq, ";
  if (t_sign < 0) s += "t -> -t, ";
  return s + "t = q";
}

SpecializationRule hecke_rule(long a) {
  SpecializationRule r;
  r.a = a;
  const bool a_odd = a % 2 != 0;
  r.ell = a_odd ? floor_div2(a - 1) : floor_div2(a);
  const bool ell_odd = r.ell % 2 != 0;
  r.rotate_q = !a_odd;
  r.t_sign = ell_odd ? 1 : -1;
  return r;
}

bool quadratic_check(const Mat2& m, const LPoly& q) {
  const LPoly qm2 = q.pow(-2);
  return m * m == m.scaled(qm2 - LPoly(1)) + Mat2::scalar(qm2);
}

HeckeResult hecke_specialize(const Rep& rep) {
  if (rep.kind() != RepKind::Rho3) throw Error(ErrorKind::UnsupportedKind, "Hecke specialization is defined for rho3");
  if (rep.n() % 2 == 0) throw Error(ErrorKind::BadParameters, "Hecke specialization needs n odd");
  const Rho3Constants& c = *rep.constants();
  HeckeResult h;
  h.rule = hecke_rule(c.a);
  Substitution s;
  if (h.rule.rotate_q) s = s.then(Substitution::scale_q(imag_unit(rep.field_order())));
  if (h.rule.t_sign < 0) s = s.then(Substitution::scale_t(CycNum(-1)));
  h.x_primed = rep.mx().substituted(s);
  h.y_primed = rep.my().substituted(s);
  h.recheck = verify_fund(h.x_primed, h.y_primed, rep.n(), rep.m());
  h.collapsed = Generators::make(rep.n(), rep.m(), h.x_primed.substituted(Substitution::t_to_q()),
                                 h.y_primed.substituted(Substitution::t_to_q()), true);
  h.meridian = meridian(h.collapsed, {c.a, c.b});
  const bool shape = h.meridian.a12.is_zero() && h.meridian.a11 == LPoly::q(-2) && h.meridian.a22 == LPoly(-1);
  if (!shape) throw Error(ErrorKind::ShapeMismatch, "meridian diagonal is not (q^-2, -1) under " + h.rule.describe());
  h.quadratic = quadratic_check(h.meridian, LPoly::q());
  return h;
}

ToricResult toric_specialize(const Rep& rep) {
  if (rep.kind() != RepKind::Rho3) throw Error(ErrorKind::UnsupportedKind, "toric specialization is defined for rho3");
  const Rho3Constants& c = *rep.constants();
  const CycNum qv = c.a % 2 != 0 ? CycNum(1) : imag_unit(rep.field_order());
  const Substitution s = Substitution::eval_t(CycNum(1)).then(Substitution::eval_q(qv));
  ToricResult r;
  r.x = rep.mx().substituted(s);
  r.y = rep.my().substituted(s);
  r.relation = r.x.pow(rep.m()) == r.y.pow(rep.n());
  r.meridian = r.y.pow(c.b) * r.x.pow(-c.a);
  r.reflection = reflection_check(r.meridian);
  if (!r.reflection.passed()) throw Error(ErrorKind::ReflectionCheckFailed, "meridian image is not an order-2 reflection");
  return r;
}

ClosureResult group_closure(const std::vector<Mat2>& generators, long cap, bool keep_elements) {
  if (cap < 1) throw Error(ErrorKind::BadParameters, "cap must be positive");
  // Hashes agree across orders only for rationals, so every irrational
  // entry is lifted to one common field first.
  int order = 1;
  for (const auto& g : generators) {
    for (const LPoly* p : {&g.a11, &g.a12, &g.a21, &g.a22}) {
      const auto c = p->constant_value();
      if (!c) throw Error(ErrorKind::BadParameters, "closure needs constant matrices");
      if (!c->is_rational()) order = std::lcm(order, c->order());
    }
  }
  const auto lift = [order](const LPoly& p) { return p.map_coeffs([order](const CycNum& c) { return c.lifted(order); }); };
  std::vector<Mat2> steps;
  for (const auto& g : generators) {
    const Mat2 common{lift(g.a11), lift(g.a12), lift(g.a21), lift(g.a22)};
    steps.push_back(common);
    steps.push_back(common.inverse());
  }
  ClosureResult r;
  r.cap = cap;
  std::unordered_set<Mat2> seen;
  std::deque<Mat2> frontier;
  seen.insert(Mat2::identity());
  frontier.push_back(Mat2::identity());
  std::vector<Mat2> order_of_discovery{Mat2::identity()};
  while (!frontier.empty()) {
    const Mat2 cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : steps) {
      Mat2 next = cur * g;
      if (seen.count(next)) continue;
      if (static_cast<long>(seen.size()) >= cap) return r;
      seen.insert(next);
      if (keep_elements) order_of_discovery.push_back(next);
      frontier.push_back(std::move(next));
    }
  }
  r.order = static_cast<long>(seen.size());
  if (keep_elements) r.elements = std::move(order_of_discovery);
  return r;
}

}  // namespace torus
