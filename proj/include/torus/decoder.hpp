#pragma once

#include "torus/reps.hpp"

namespace torus {

/// First and last letter of a monoid element read off its matrix.
struct Situation {
  int id;  // 1: (Y,Y), 2: (Y,X), 3: (X,Y), 4: (X,X)
  Letter left;
  Letter right;
};

/// Whether `mask` is admissible for situation `id`.
bool mask_allowed(int id, std::uint8_t mask);

/// L = Y iff the top q-degree sits only in row 2; R = X iff it reaches
/// column 2. Throws PatternInvalid when the mask fits no situation.
Situation classify(const Mat2& m);

/// Recovers the normal form of the monoid element whose image is `m`.
/// Throws PatternInvalid, DeltaResidue or NonTermination on matrices that
/// are not images of monoid elements.
NormalForm decode(const Generators& gens, const Mat2& m);
NormalForm decode(const Rep& rep, const Mat2& m, bool specialized);

struct ReadLengths {
  long garside;
  long n_q;
};

/// Garside length and top q-degree of a Delta-free, non-identity image.
ReadLengths read_lengths(const Generators& gens, const Mat2& m);

}  // namespace torus
