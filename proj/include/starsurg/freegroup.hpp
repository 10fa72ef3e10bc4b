#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace starsurg {

// Words in a free group: generator i (1-based) is the letter +i, its inverse
// is -i. Stored freely reduced by every operation here.
using FreeWord = std::vector<int>;

// Appends `letter` with cancellation against the end of `w`.
inline void push_reduced(FreeWord& w, int letter) {
  if (!w.empty() && w.back() == -letter)
    w.pop_back();
  else
    w.push_back(letter);
}

FreeWord free_reduce(const FreeWord& w);
FreeWord free_inverse(const FreeWord& w);
FreeWord free_concat(const FreeWord& a, const FreeWord& b);

// "x1 x2 X1" style rendering; capital letter = inverse. Generators above 26
// render as x27 / X27.
std::string format_word(const FreeWord& w);

}  // namespace starsurg
