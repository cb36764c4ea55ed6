#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace torus {

enum class Letter : char { X = 'X', Y = 'Y', D = 'D' };

struct Syllable {
  Letter letter;
  long exp;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A positive word over X, Y and D = X^m = Y^n. Exponents are >= 1.
struct MonoidWord {
  int n = 2;
  int m = 2;
  std::vector<Syllable> syllables;
  friend bool operator==(const MonoidWord&, const MonoidWord&) = default;
};

/// D^delta times an alternating word in X and Y with every X-exponent in
/// [1, m-1] and every Y-exponent in [1, n-1]. A leading X means n1 = 0 and a
/// trailing Y means mk = 0.
struct NormalForm {
  int n = 2;
  int m = 2;
  long delta = 0;
  std::vector<Syllable> syllables;

  bool is_identity() const { return delta == 0 && syllables.empty(); }
  /// The word D^delta followed by the syllables.
  MonoidWord word() const;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// word := empty | term (space* term)*, term := (X|Y|D) ("^" positive-int)?
/// Surrounding whitespace is ignored. Adjacent equal letters are merged.
MonoidWord parse_word(std::string_view text, int n, int m);

/// "X^3 Y^2 X"; the identity prints as the empty string.
std::string to_string(const MonoidWord& w);
std::string to_string(const NormalForm& nf);

NormalForm normalize(const MonoidWord& w);

/// n * #X + m * #Y + nm * delta.
long weighted_length(const NormalForm& nf);
/// 2(k-1) + [n1 != 0] + [mk != 0]; throws DeltaDivisible when delta > 0.
long garside_length(const NormalForm& nf);
/// (k-1) + [n1 != 0]; throws DeltaDivisible when delta > 0.
long q_length(const NormalForm& nf);

struct Lengths {
  long garside;
  long weighted;
  long n_q;
};
Lengths lengths(const NormalForm& nf);

struct Boundary {
  Letter left;
  Letter right;
};
/// First and last letters of the Delta-free part; throws EmptyWord.
Boundary boundary_letters(const NormalForm& nf);

/// Seeded word with weighted length at most `max_weighted` before
/// `delta_insertions` copies of D are spliced in at random positions.
/// Exponents range up to the full period, so D also arises from runs.
MonoidWord random_word(int n, int m, long max_weighted, int delta_insertions, std::uint64_t seed);

}  // namespace torus
