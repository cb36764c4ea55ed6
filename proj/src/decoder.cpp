#include "torus/decoder.hpp"

#include <algorithm>

#include "torus/error.hpp"

namespace torus {

namespace {

constexpr std::uint8_t kRow2 = kA21 | kA22;
constexpr std::uint8_t kCol2 = kA12 | kA22;

bool subset(std::uint8_t mask, std::uint8_t of) { return (mask & ~of) == 0; }

std::string mask_text(std::uint8_t mask) {
  std::string s = "{";
  const char* names[4] = {"a11", "a12", "a21", "a22"};
  for (int i = 0; i < 4; ++i) {
    if (mask & (1u << i)) {
      if (s.size() > 1) s += ",";
      s += names[i];
    }
  }
  return s + "}";
}

// Exponent of the only variable left in a unit determinant or scalar:
// t for generic matrices, q once t has been collapsed onto q.
std::optional<int> monomial_degree(const LPoly& p, bool collapsed) {
  if (!p.is_unit()) return std::nullopt;
  const Term& u = p.terms()[0];
  if (collapsed ? u.et != 0 : u.eq != 0) return std::nullopt;
  return collapsed ? u.eq : u.et;
}

}  // namespace

bool mask_allowed(int id, std::uint8_t mask) {
  switch (id) {
    case 1: return mask == kA21;
    case 2: return (mask & kA22) && subset(mask, kRow2);
    case 3: return (mask & kA11) && subset(mask, kA11 | kA21);
    case 4: return (mask & kA12) != 0;
  }
  return false;
}

Situation classify(const Mat2& m) {
  const DegreePattern p = m.degree_pattern();
  const Letter left = subset(p.mask, kRow2) ? Letter::Y : Letter::X;
  const Letter right = (p.mask & kCol2) ? Letter::X : Letter::Y;
  const int id = left == Letter::Y ? (right == Letter::Y ? 1 : 2) : (right == Letter::Y ? 3 : 4);
  if (!mask_allowed(id, p.mask)) {
    throw Error(ErrorKind::PatternInvalid, "degree mask " + mask_text(p.mask) + " matches no situation");
  }
  return {id, left, right};
}

NormalForm decode(const Generators& gens, const Mat2& input) {
  const long nm = static_cast<long>(gens.n) * gens.m;
  if (input.is_zero()) throw Error(ErrorKind::PatternInvalid, "zero matrix");
  // det of a monoid image is z * t^{2 l_w}: it bounds the number of letters.
  const auto det_deg = monomial_degree(input.det(), gens.collapsed);
  if (!det_deg || *det_deg < 0 || *det_deg % 2 != 0) {
    throw Error(ErrorKind::PatternInvalid, "determinant is not a monomial of the form z t^{2w}");
  }
  const long cap = *det_deg / (2L * std::min(gens.n, gens.m)) + nm;

  std::vector<Letter> stream;
  Mat2 cur = input;
  std::optional<LPoly> scalar;
  while (!(scalar = cur.scalar_value())) {
    if (static_cast<long>(stream.size()) >= cap) {
      throw Error(ErrorKind::NonTermination, "letter stream exceeded " + std::to_string(cap));
    }
    const Situation s = classify(cur);
    cur = gens.inv(s.left) * cur;
    stream.push_back(s.left);
  }

  const auto d = monomial_degree(*scalar, gens.collapsed);
  if (!d || *d < 0 || *d % nm != 0) {
    throw Error(ErrorKind::DeltaResidue, "terminal scalar is not a power of Delta");
  }
  const long k = *d / nm;
  if (!(*scalar == gens.delta.pow(static_cast<int>(k)))) {
    throw Error(ErrorKind::DeltaResidue, "terminal scalar differs from Delta^" + std::to_string(k));
  }

  NormalForm nf{gens.n, gens.m, k, {}};
  for (Letter l : stream) {
    if (!nf.syllables.empty() && nf.syllables.back().letter == l) {
      ++nf.syllables.back().exp;
    } else {
      nf.syllables.push_back({l, 1});
    }
  }
  for (const auto& s : nf.syllables) {
    const long period = s.letter == Letter::X ? gens.m : gens.n;
    if (s.exp >= period) throw Error(ErrorKind::PatternInvalid, "recovered run reaches the period");
  }
  return nf;
}

NormalForm decode(const Rep& rep, const Mat2& m, bool specialized) { return decode(rep.generators(specialized), m); }

ReadLengths read_lengths(const Generators& gens, const Mat2& m) {
  if (m.is_scalar()) throw Error(ErrorKind::EmptyWord, "image of a power of Delta");
  const Situation s = classify(m);
  long n_q = m.degree_pattern().degree;
  if (gens.collapsed) {
    const auto det_deg = monomial_degree(m.det(), true);
    if (!det_deg) throw Error(ErrorKind::PatternInvalid, "determinant is not a monomial in q");
    n_q -= *det_deg / 2;
  }
  const long n1 = s.left == Letter::Y ? 1 : 0;
  const long mk = s.right == Letter::X ? 1 : 0;
  const long k = n_q + 1 - n1;
  return {2 * (k - 1) + n1 + mk, n_q};
}

}  // namespace torus
