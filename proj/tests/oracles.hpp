#pragma once
// Independent reference values for the tests: exact integer arithmetic, no library code.

#include <cstdint>

namespace oracle {

// generalized binomial coefficient binom(i, j) = i(i-1)...(i-j+1)/j!, exact; 0 for j < 0
inline int64_t binom(int64_t i, int64_t j) {
  if (j < 0) return 0;
  int64_t c = 1;
  for (int64_t k = 0; k < j; ++k) c = c * (i - k) / (k + 1);  // each partial product is an exact binomial
  return c;
}

inline int binom_mod(int64_t i, int64_t j, int64_t p) {
  int64_t r = binom(i, j) % p;
  return int(r < 0 ? r + p : r);
}

}  // namespace oracle
