#include "torus/serialize.hpp"

#include "torus/error.hpp"

namespace torus {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::BadParameters, "malformed document: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing key '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) malformed(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

mpz_class parse_mpz(const Json& v) {
  if (!v.is_string()) malformed("integers are written as decimal strings");
  mpz_class z;
  if (z.set_str(v.get<std::string>(), 10) != 0) malformed("bad integer '" + v.get<std::string>() + "'");
  return z;
}

std::string join_terms(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (!parts[i].empty() && parts[i][0] == '-') {
      out += " - " + parts[i].substr(1);
    } else {
      out += " + " + parts[i];
    }
  }
  return out;
}

std::string var_power(const char* name, int e) {
  if (e == 1) return name;
  return std::string(name) + "^" + std::to_string(e);
}

}  // namespace

Json to_json(const CycNum& c) {
  Json coords = Json::array();
  for (const auto& r : c.coords()) coords.push_back({r.num().get_str(), r.den().get_str()});
  return {{"N", c.order()}, {"coords", coords}};
}

CycNum cycnum_from_json(const Json& j) {
  const int n = int_field(j, "N");
  if (n < 1) malformed("N must be positive");
  const Json& coords = field(j, "coords");
  if (!coords.is_array()) malformed("coords must be an array");
  std::vector<Rational> values;
  for (const auto& pair : coords) {
    if (!pair.is_array() || pair.size() != 2) malformed("each coordinate is a [num, den] pair");
    const mpz_class den = parse_mpz(pair[1]);
    if (den == 0) malformed("zero denominator");
    values.emplace_back(parse_mpz(pair[0]), den);
  }
  if (static_cast<int>(values.size()) != euler_phi(n)) malformed("coordinate count differs from phi(N)");
  return CycNum::from_coords(n, values);
}

Json to_json(const LPoly& p) {
  Json terms = Json::array();
  for (const auto& tm : p.terms()) terms.push_back({{"t", tm.et}, {"q", tm.eq}, {"c", to_json(tm.c)}});
  return {{"terms", terms}};
}

LPoly lpoly_from_json(const Json& j) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) malformed("terms must be an array");
  std::vector<Term> out;
  for (const auto& tm : terms) out.push_back({int_field(tm, "t"), int_field(tm, "q"), cycnum_from_json(field(tm, "c"))});
  return LPoly::from_terms(std::move(out));
}

Json to_json(const Mat2& m) {
  return {{"a11", to_json(m.a11)}, {"a12", to_json(m.a12)}, {"a21", to_json(m.a21)}, {"a22", to_json(m.a22)}};
}

Mat2 mat2_from_json(const Json& j) {
  return {lpoly_from_json(field(j, "a11")), lpoly_from_json(field(j, "a12")), lpoly_from_json(field(j, "a21")),
          lpoly_from_json(field(j, "a22"))};
}

Json to_json(const NormalForm& nf) {
  Json syl = Json::array();
  for (const auto& s : nf.syllables) syl.push_back({std::string(1, static_cast<char>(s.letter)), s.exp});
  return {{"delta", nf.delta}, {"syllables", syl}};
}

Json to_json(const FundReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"condition", c.condition}, {"k", c.k}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return {{"passed", r.passed()}, {"relation", r.relation}, {"cond2", r.cond2}, {"cond3", r.cond3}, {"checks", checks}};
}

Json to_json(const Rep& rep) {
  Json j{{"kind", std::string(kind_name(rep.kind()))},
         {"n", rep.n()},
         {"m", rep.m()},
         {"N", rep.field_order()},
         {"faithful", rep.faithful()},
         {"reason", rep.faithful_reason()},
         {"MX", to_json(rep.mx())},
         {"MY", to_json(rep.my())}};
  if (rep.constants()) {
    j["a"] = rep.constants()->a;
    j["b"] = rep.constants()->b;
  }
  return j;
}

Json to_json(const ClosureResult& r) {
  if (r.order) return {{"order", *r.order}};
  return {{"cap_exceeded", r.cap}};
}

std::string to_text(const CycNum& c) {
  std::vector<std::string> parts;
  const std::string z = "z" + std::to_string(c.order());
  const auto coords = c.coords();
  for (int k = 0; k < c.degree(); ++k) {
    const Rational& r = coords[k];
    if (r.is_zero()) continue;
    if (k == 0) {
      parts.push_back(r.to_string());
      continue;
    }
    const std::string mono = k == 1 ? z : z + "^" + std::to_string(k);
    if (r == Rational(1)) {
      parts.push_back(mono);
    } else if (r == Rational(-1)) {
      parts.push_back("-" + mono);
    } else {
      parts.push_back(r.to_string() + "*" + mono);
    }
  }
  return join_terms(parts);
}

std::string to_text(const LPoly& p) {
  std::vector<std::string> parts;
  for (const auto& tm : p.terms()) {
    std::string mono;
    if (tm.et != 0) mono = var_power("t", tm.et);
    if (tm.eq != 0) mono += (mono.empty() ? "" : "*") + var_power("q", tm.eq);
    std::string coeff = to_text(tm.c);
    const bool compound = coeff.find(' ') != std::string::npos;
    if (mono.empty()) {
      parts.push_back(compound ? "(" + coeff + ")" : coeff);
    } else if (coeff == "1") {
      parts.push_back(mono);
    } else if (coeff == "-1") {
      parts.push_back("-" + mono);
    } else {
      parts.push_back((compound ? "(" + coeff + ")" : coeff) + "*" + mono);
    }
  }
  return join_terms(parts);
}

std::string to_text(const Mat2& m) {
  return "[[" + to_text(m.a11) + ", " + to_text(m.a12) + "], [" + to_text(m.a21) + ", " + to_text(m.a22) + "]]";
}

}  // namespace torus
