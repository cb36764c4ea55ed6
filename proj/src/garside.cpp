#include "torus/garside.hpp"

#include <algorithm>
#include <cctype>

#include "torus/error.hpp"

namespace torus {

namespace {

void check_params(int n, int m) {
  if (n < 2 || m < 2) throw Error(ErrorKind::BadParameters, "n and m must be at least 2");
}

void append_merged(std::vector<Syllable>& out, Syllable s) {
  if (!out.empty() && out.back().letter == s.letter) {
    out.back().exp += s.exp;
  } else {
    out.push_back(s);
  }
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

// Uniform draw in [0, bound) by rejection, independent of the standard
// library's distribution implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

}  // namespace

MonoidWord NormalForm::word() const {
  MonoidWord w{n, m, {}};
  if (delta > 0) w.syllables.push_back({Letter::D, delta});
  for (const auto& s : syllables) w.syllables.push_back(s);
  return w;
}

MonoidWord parse_word(std::string_view text, int n, int m) {
  check_params(n, m);
  MonoidWord w{n, m, {}};
  std::size_t i = 0;
  while (i < text.size() && is_space(text[i])) ++i;
  while (i < text.size()) {
    const char c = text[i];
    if (c != 'X' && c != 'Y' && c != 'D') {
      throw ParseError(ErrorKind::SyntaxError, i, std::string("unexpected character '") + c + "'");
    }
    const Letter letter = static_cast<Letter>(c);
    ++i;
    long exp = 1;
    if (i < text.size() && text[i] == '^') {
      const std::size_t exp_start = ++i;
      bool negative = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
      }
      const std::size_t digits = i;
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1'000'000'000L) throw ParseError(ErrorKind::SyntaxError, digits, "exponent too large");
        ++i;
      }
      if (i == digits) throw ParseError(ErrorKind::SyntaxError, exp_start, "expected an exponent");
      if (negative || value == 0) {
        throw ParseError(ErrorKind::NonPositiveExponent, exp_start, "exponents must be positive");
      }
      exp = value;
    }
    append_merged(w.syllables, {letter, exp});
    while (i < text.size() && is_space(text[i])) ++i;
  }
  return w;
}

std::string to_string(const MonoidWord& w) {
  std::string out;
  for (const auto& s : w.syllables) {
    if (!out.empty()) out += ' ';
    out += static_cast<char>(s.letter);
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

std::string to_string(const NormalForm& nf) { return to_string(nf.word()); }

NormalForm normalize(const MonoidWord& w) {
  check_params(w.n, w.m);
  NormalForm nf{w.n, w.m, 0, {}};
  // The stack always alternates in X and Y with exponents inside the
  // period, so each incoming run only interacts with the top.
  auto& st = nf.syllables;
  for (const auto& s : w.syllables) {
    if (s.letter == Letter::D) {
      nf.delta += s.exp;
      continue;
    }
    long e = s.exp;
    if (!st.empty() && st.back().letter == s.letter) {
      e += st.back().exp;
      st.pop_back();
    }
    const long period = s.letter == Letter::X ? w.m : w.n;
    nf.delta += e / period;
    e %= period;
    if (e > 0) st.push_back({s.letter, e});
  }
  return nf;
}

long weighted_length(const NormalForm& nf) {
  long total = static_cast<long>(nf.n) * nf.m * nf.delta;
  for (const auto& s : nf.syllables) total += s.exp * (s.letter == Letter::X ? nf.n : nf.m);
  return total;
}

namespace {

struct Shape {
  long k;
  bool n1_nonzero;
  bool mk_nonzero;
};

Shape shape(const NormalForm& nf) {
  if (nf.delta > 0) throw Error(ErrorKind::DeltaDivisible, "length requested for a word divisible by Delta");
  if (nf.syllables.empty()) return {0, false, false};
  const bool n1 = nf.syllables.front().letter == Letter::Y;
  const bool mk = nf.syllables.back().letter == Letter::X;
  // Pad to Y...X; every (Y, X) pair is one index i.
  const long padded = static_cast<long>(nf.syllables.size()) + (n1 ? 0 : 1) + (mk ? 0 : 1);
  return {padded / 2, n1, mk};
}

}  // namespace

long garside_length(const NormalForm& nf) {
  const Shape s = shape(nf);
  if (s.k == 0) return 0;
  return 2 * (s.k - 1) + (s.n1_nonzero ? 1 : 0) + (s.mk_nonzero ? 1 : 0);
}

long q_length(const NormalForm& nf) {
  const Shape s = shape(nf);
  if (s.k == 0) return 0;
  return (s.k - 1) + (s.n1_nonzero ? 1 : 0);
}

Lengths lengths(const NormalForm& nf) { return {garside_length(nf), weighted_length(nf), q_length(nf)}; }

Boundary boundary_letters(const NormalForm& nf) {
  if (nf.syllables.empty()) throw Error(ErrorKind::EmptyWord, "no letters outside Delta");
  return {nf.syllables.front().letter, nf.syllables.back().letter};
}

MonoidWord random_word(int n, int m, long max_weighted, int delta_insertions, std::uint64_t seed) {
  check_params(n, m);
  if (max_weighted < 0 || delta_insertions < 0) throw Error(ErrorKind::BadParameters, "bounds must be non-negative");
  std::mt19937_64 rng(seed);
  MonoidWord w{n, m, {}};
  const long target = static_cast<long>(draw(rng, static_cast<std::uint64_t>(max_weighted) + 1));
  long weight = 0;
  std::vector<Syllable> raw;
  while (true) {
    const bool x = draw(rng, 2) == 0;
    const long period = x ? m : n;
    const long per_letter = x ? n : m;
    const long room = (target - weight) / per_letter;
    if (room <= 0) {
      // The other letter may still fit.
      const long other = x ? m : n;
      if ((target - weight) / other <= 0) break;
      continue;
    }
    const long e = 1 + static_cast<long>(draw(rng, static_cast<std::uint64_t>(std::min(period, room))));
    raw.push_back({x ? Letter::X : Letter::Y, e});
    weight += e * per_letter;
  }
  for (int d = 0; d < delta_insertions; ++d) {
    const auto pos = static_cast<std::ptrdiff_t>(draw(rng, raw.size() + 1));
    raw.insert(raw.begin() + pos, Syllable{Letter::D, 1});
  }
  for (const auto& s : raw) append_merged(w.syllables, s);
  return w;
}

}  // namespace torus
