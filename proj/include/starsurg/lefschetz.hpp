#pragma once

#include <vector>

#include "starsurg/integer.hpp"
#include "starsurg/mcg.hpp"

namespace starsurg {

struct FillingInvariants {
  long euler = 0;
  int b1 = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, each dividing the next
};

// (1 - n) + number of twists. Rejects words with negative twists.
long euler_char(const Factorization& f);

// H_1 of the total space: Z^n modulo the hole-incidence vectors of the twists.
FillingInvariants homology(const Factorization& f);

// Invariant factors (nonzero diagonal of the Smith normal form).
std::vector<Integer> invariant_factors(std::vector<std::vector<Integer>> m);

// Same total monodromy, hence the same boundary open book.
bool boundary_open_book_equal(const Factorization& f, const Factorization& g, const ActOptions& options = {});

}  // namespace starsurg
