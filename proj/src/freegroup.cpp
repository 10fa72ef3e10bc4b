#include "starsurg/freegroup.hpp"

#include <algorithm>

namespace starsurg {

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (int x : w) push_reduced(out, x);
  return out;
}

FreeWord free_inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

FreeWord free_concat(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  for (int x : b) push_reduced(out, x);
  return out;
}

std::string format_word(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i] > 0 ? 'x' : 'X';
    out += std::to_string(w[i] > 0 ? w[i] : -w[i]);
  }
  return out;
}

}  // namespace starsurg
