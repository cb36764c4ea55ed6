#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "torus/error.hpp"

using namespace torus;
using namespace torus::testing;

namespace {

std::vector<Syllable> syl(std::initializer_list<std::pair<char, long>> items) {
  std::vector<Syllable> out;
  for (auto [c, e] : items) out.push_back({static_cast<Letter>(c), e});
  return out;
}

NormalForm nf_of(const char* text, int n = 3, int m = 4) { return normalize(parse_word(text, n, m)); }

ErrorKind parse_error_kind(const char* text) {
  try {
    (void)parse_word(text, 3, 4);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("parsed: " << text);
  return ErrorKind::BadParameters;
}

// Flattens a word into single letters with D expanded as X^m.
std::vector<Letter> letters(const MonoidWord& w) {
  std::vector<Letter> out;
  for (const auto& s : w.syllables) {
    const Letter l = s.letter == Letter::D ? Letter::X : s.letter;
    const long count = s.letter == Letter::D ? s.exp * w.m : s.exp;
    out.insert(out.end(), count, l);
  }
  return out;
}

MonoidWord from_letters(const std::vector<Letter>& ls, int n, int m) {
  MonoidWord w{n, m, {}};
  for (Letter l : ls) {
    if (!w.syllables.empty() && w.syllables.back().letter == l) {
      ++w.syllables.back().exp;
    } else {
      w.syllables.push_back({l, 1});
    }
  }
  return w;
}

// Replaces one occurrence of X^m by Y^n (or the reverse) at a random spot.
std::optional<MonoidWord> apply_relation(const MonoidWord& w, Rng& rng) {
  std::vector<Letter> ls = letters(w);
  std::vector<std::pair<std::size_t, Letter>> spots;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (auto [l, len] : {std::pair{Letter::X, w.m}, std::pair{Letter::Y, w.n}}) {
      if (i + len > ls.size()) continue;
      bool run = true;
      for (int j = 0; j < len; ++j) run = run && ls[i + j] == l;
      if (run) spots.emplace_back(i, l);
    }
  }
  if (spots.empty()) return std::nullopt;
  auto [at, l] = spots[uniform(rng, 0, spots.size() - 1)];
  const int len = l == Letter::X ? w.m : w.n;
  const Letter other = l == Letter::X ? Letter::Y : Letter::X;
  const int other_len = l == Letter::X ? w.n : w.m;
  ls.erase(ls.begin() + at, ls.begin() + at + len);
  ls.insert(ls.begin() + at, other_len, other);
  return from_letters(ls, w.n, w.m);
}

}  // namespace

TEST_CASE("parsing") {
  CHECK(parse_word("X^3 Y^2 X", 3, 4).syllables == syl({{'X', 3}, {'Y', 2}, {'X', 1}}));
  CHECK(parse_word("", 3, 4).syllables.empty());
  CHECK(parse_word("  XY^2  D ", 3, 4).syllables == syl({{'X', 1}, {'Y', 2}, {'D', 1}}));
  CHECK(parse_word("X X^2 Y", 3, 4).syllables == syl({{'X', 3}, {'Y', 1}}));
  CHECK(parse_error_kind("X^0") == ErrorKind::NonPositiveExponent);
  CHECK(parse_error_kind("X^-2") == ErrorKind::NonPositiveExponent);
  CHECK(parse_error_kind("X^") == ErrorKind::SyntaxError);
  CHECK(parse_error_kind("Z") == ErrorKind::SyntaxError);
  CHECK(parse_error_kind("X^^2") == ErrorKind::SyntaxError);
  try {
    (void)parse_word("X Y q", 3, 4);
    FAIL("parsed");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("normal form examples") {
  CHECK(nf_of("X^4") == NormalForm{3, 4, 1, {}});
  CHECK(nf_of("Y X^5 Y^2") == NormalForm{3, 4, 1, syl({{'Y', 1}, {'X', 1}, {'Y', 2}})});
  CHECK(nf_of("X^2 X^3") == NormalForm{3, 4, 1, syl({{'X', 1}})});
  CHECK(nf_of("") == NormalForm{3, 4, 0, {}});
  CHECK(nf_of("Y^3 D^2 X^8") == NormalForm{3, 4, 5, {}});
  CHECK(to_string(nf_of("Y X^5 Y^2")) == "D Y X Y^2");
}

TEST_CASE("lengths") {
  const Lengths xy = lengths(nf_of("X Y"));
  CHECK(xy.garside == 2);
  CHECK(xy.weighted == 7);
  CHECK(xy.n_q == 1);
  CHECK(garside_length(nf_of("Y^2 X^3 Y")) == 3);
  const Lengths empty = lengths(nf_of(""));
  CHECK(empty.garside == 0);
  CHECK(empty.weighted == 0);
  CHECK(weighted_length(nf_of("D X")) == 12 + 3);
  try {
    (void)garside_length(nf_of("D X"));
    FAIL("Delta-divisible accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DeltaDivisible);
  }
}

TEST_CASE("boundary letters") {
  auto check = [](const char* w, Letter l, Letter r) {
    const Boundary b = boundary_letters(nf_of(w));
    CHECK(b.left == l);
    CHECK(b.right == r);
  };
  check("Y X", Letter::Y, Letter::X);
  check("X^2", Letter::X, Letter::X);
  check("X Y^2", Letter::X, Letter::Y);
  try {
    (void)boundary_letters(nf_of("D"));
    FAIL("empty accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyWord);
  }
}

TEST_CASE("random words") {
  CHECK(random_word(3, 4, 50, 1, 1) == random_word(3, 4, 50, 1, 1));
  bool saw_free = false, saw_full = false;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    for (int d = 0; d <= 2; ++d) {
      const MonoidWord w = random_word(3, 4, 30, d, seed);
      REQUIRE(weighted_length(normalize(w)) <= 30 + 12 * d);
    }
    const long delta = normalize(random_word(3, 4, 20, 0, seed)).delta;
    saw_free = saw_free || delta == 0;
    saw_full = saw_full || delta > 0;
  }
  CHECK(saw_free);
  CHECK(saw_full);
}

TEST_CASE("property: normalize agrees with the rewriting fixpoint") {
  for (auto [n, m] : test_pairs()) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const MonoidWord w = random_word(n, m, 120, static_cast<int>(seed % 3), seed);
      REQUIRE(normalize(w) == rewrite_oracle(w));
    }
  }
}

TEST_CASE("property: the defining relation does not change the normal form") {
  Rng rng(9);
  for (auto [n, m] : test_pairs()) {
    int applied = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const MonoidWord w = random_word(n, m, 80, static_cast<int>(seed % 2), 7000 + seed);
      const auto moved = apply_relation(w, rng);
      if (!moved) continue;
      ++applied;
      REQUIRE(normalize(*moved) == normalize(w));
      REQUIRE(weighted_length(normalize(*moved)) == weighted_length(normalize(w)));
    }
    CHECK(applied > 100);
  }
}

TEST_CASE("property: normalize is idempotent and normal forms satisfy the bounds") {
  for (auto [n, m] : test_pairs()) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const NormalForm nf = normalize(random_word(n, m, 150, 2, seed));
      REQUIRE(normalize(nf.word()) == nf);
      for (std::size_t i = 0; i < nf.syllables.size(); ++i) {
        const Syllable& s = nf.syllables[i];
        REQUIRE(s.letter != Letter::D);
        REQUIRE(s.exp >= 1);
        REQUIRE(s.exp < (s.letter == Letter::X ? m : n));
        if (i > 0) REQUIRE(s.letter != nf.syllables[i - 1].letter);
      }
    }
  }
}

TEST_CASE("property: garside length and n_q follow the syllable count") {
  Rng rng(10);
  for (auto [n, m] : test_pairs()) {
    for (int i = 0; i < 200; ++i) {
      const NormalForm nf = random_delta_free(rng, n, m, 9);
      const bool n1 = nf.syllables.front().letter == Letter::Y;
      const bool mk = nf.syllables.back().letter == Letter::X;
      // Syllables alternate, so their count is the Garside length.
      REQUIRE(garside_length(nf) == static_cast<long>(nf.syllables.size()));
      const long k = (static_cast<long>(nf.syllables.size()) - n1 - mk) / 2 + 1;
      REQUIRE(q_length(nf) == (k - 1) + n1);
    }
  }
}
