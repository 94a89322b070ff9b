#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace backbone {

using Word = std::uint64_t;

inline constexpr int kWordBits = 64;

inline int words_for(int n) { return (n + kWordBits - 1) / kWordBits; }

// Raw word-span helpers shared by the graph and the search kernels. All spans
// passed to one call have the same length.
namespace bits {

inline bool test(std::span<const Word> s, int i) {
  return (s[i / kWordBits] >> (i % kWordBits)) & 1u;
}
inline void set(std::span<Word> s, int i) { s[i / kWordBits] |= Word{1} << (i % kWordBits); }
inline void reset(std::span<Word> s, int i) { s[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

inline int count(std::span<const Word> s) {
  int c = 0;
  for (Word w : s) c += std::popcount(w);
  return c;
}

inline bool any(std::span<const Word> s) {
  for (Word w : s)
    if (w) return true;
  return false;
}

// Lowest set index, or -1.
inline int first(std::span<const Word> s) {
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s[k]) return static_cast<int>(k) * kWordBits + std::countr_zero(s[k]);
  return -1;
}

inline int count_and(std::span<const Word> a, std::span<const Word> b) {
  int c = 0;
  for (std::size_t k = 0; k < a.size(); ++k) c += std::popcount(a[k] & b[k]);
  return c;
}

template <typename F>
void for_each(std::span<const Word> s, F&& f) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    Word w = s[k];
    while (w) {
      const int b = std::countr_zero(w);
      f(static_cast<int>(k) * kWordBits + b);
      w &= w - 1;
    }
  }
}

inline std::vector<int> to_list(std::span<const Word> s) {
  std::vector<int> out;
  for_each(s, [&](int v) { out.push_back(v); });
  return out;
}

}  // namespace bits
}  // namespace backbone
