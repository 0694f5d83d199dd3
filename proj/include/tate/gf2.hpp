#pragma once
// Bit-packed GF(2) helpers for the chain engines.

#include <bit>
#include <cstdint>
#include <vector>

#include "tate/fp.hpp"

namespace tate::gf2 {

using Word = uint64_t;
inline int words_for(int bits) { return (bits + 63) / 64; }
inline bool get(const Word* v, size_t i) { return (v[i >> 6] >> (i & 63)) & 1; }
inline void flip(Word* v, size_t i) { v[i >> 6] ^= Word(1) << (i & 63); }
inline void set1(Word* v, size_t i) { v[i >> 6] |= Word(1) << (i & 63); }
inline void xor_into(Word* dst, const Word* src, size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}
inline bool any(const Word* v, size_t n) {
  for (size_t i = 0; i < n; ++i)
    if (v[i]) return true;
  return false;
}
inline int parity_and(const Word* a, const Word* b, size_t n) {
  Word acc = 0;
  for (size_t i = 0; i < n; ++i) acc ^= a[i] & b[i];
  return std::popcount(acc) & 1;
}
template <class F>
inline void for_each_bit(const Word* v, size_t nwords, F&& f) {
  for (size_t w = 0; w < nwords; ++w) {
    Word x = v[w];
    while (x) {
      int b = std::countr_zero(x);
      f(w * 64 + size_t(b));
      x &= x - 1;
    }
  }
}

// rows of fixed word width
struct Block {
  int rows = 0;
  size_t wpr = 0;
  std::vector<Word> data;
  Block() = default;
  Block(int r, size_t w) : rows(r), wpr(w), data(size_t(r) * w, 0) {}
  Word* row(int i) { return data.data() + size_t(i) * wpr; }
  const Word* row(int i) const { return data.data() + size_t(i) * wpr; }
  bool is_zero() const { return !any(data.data(), data.size()); }
};

Block from_mat(const Mat& m);  // row i = bits of m row i
Mat to_mat(const Block& b, int cols);

// solves x * A = z for many right-hand sides
class Solver {
 public:
  Solver() = default;
  explicit Solver(const Mat& A);
  // z has A.cols() bits, x receives A.rows() bits; false if inconsistent
  bool solve(const Word* z, Word* x) const;
  int unknowns() const { return nx_; }
  int equations() const { return nz_; }

 private:
  int nx_ = 0, nz_ = 0, rank_ = 0;
  std::vector<int> pivots_;
  Block T_;
};

}  // namespace tate::gf2
