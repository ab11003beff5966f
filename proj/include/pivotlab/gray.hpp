#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pivotlab/exact.hpp"

namespace pivotlab {

/// Fixed-length bit string. bits[0] is b1, the most significant position
/// for Gray-code ranking.
struct BitString {
  std::vector<uint8_t> bits;

  BitString() = default;
  explicit BitString(int d) : bits(static_cast<size_t>(d), 0) {}

  int size() const { return static_cast<int>(bits.size()); }
  bool all_zero() const;

  /// 1-based access, matching coordinate indexing b1..bd.
  uint8_t bit(int i) const { return bits[static_cast<size_t>(i - 1)]; }
  void set_bit(int i, uint8_t v) { bits[static_cast<size_t>(i - 1)] = v; }

  std::string to_string() const;
  static BitString from_string(const std::string& s);

  friend bool operator==(const BitString& a, const BitString& b) { return a.bits == b.bits; }
  friend bool operator!=(const BitString& a, const BitString& b) { return !(a == b); }
  friend bool operator<(const BitString& a, const BitString& b) { return a.bits < b.bits; }
};

/// Concatenation; used for the counter/word split of 2n-dimensional states.
BitString concat(const BitString& a, const BitString& b);

/// 0^d and the top-of-order string 1 0^{d-1}.
BitString all_zero_string(int d);
BitString top_of_code(int d);

/// Position of the Gray code G_d: ranks 0 .. 2^d - 1. Requires d <= 62.
uint64_t gray_rank(const BitString& x);
BitString gray_unrank(int d, uint64_t k);

/// Successor / predecessor in G_d, computed directly from the bits in O(d)
/// operations. gray_succ is undefined at 1 0^{d-1} and gray_pred at 0^d;
/// both throw END_OF_CODE there. `ops`, when given, counts elementary bit
/// visits so tests can pin the linear step bound.
BitString gray_succ(const BitString& x, size_t* ops = nullptr);
BitString gray_pred(const BitString& x, size_t* ops = nullptr);

/// Index of the unique differing bit (1-based); requires Hamming distance 1.
int single_flip_index(const BitString& a, const BitString& b);

}  // namespace pivotlab
