#include "pivotlab/gray.hpp"

#include <stdexcept>

namespace pivotlab {

bool BitString::all_zero() const {
  for (uint8_t b : bits)
    if (b) return false;
  return true;
}

std::string BitString::to_string() const {
  std::string s;
  s.reserve(bits.size());
  for (uint8_t b : bits) s.push_back(b ? '1' : '0');
  return s;
}

BitString BitString::from_string(const std::string& s) {
  BitString x(static_cast<int>(s.size()));
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '0')
      x.bits[i] = 0;
    else if (s[i] == '1')
      x.bits[i] = 1;
    else
      throw Error(ErrorCode::BadInput, "bit string must be over {0,1}: '" + s + "'");
  }
  if (s.empty()) throw Error(ErrorCode::BadInput, "empty bit string");
  return x;
}

BitString concat(const BitString& a, const BitString& b) {
  BitString out(a.size() + b.size());
  for (int i = 0; i < a.size(); ++i) out.bits[static_cast<size_t>(i)] = a.bits[static_cast<size_t>(i)];
  for (int i = 0; i < b.size(); ++i)
    out.bits[static_cast<size_t>(a.size() + i)] = b.bits[static_cast<size_t>(i)];
  return out;
}

BitString all_zero_string(int d) { return BitString(d); }

BitString top_of_code(int d) {
  BitString x(d);
  x.set_bit(1, 1);
  return x;
}

uint64_t gray_rank(const BitString& x) {
  const int d = x.size();
  if (d < 1 || d > 62) throw Error(ErrorCode::Range, "gray_rank supports 1 <= d <= 62");
  // The binary expansion of the rank is the prefix-xor of the code word.
  uint64_t rank = 0;
  uint8_t acc = 0;
  for (int i = 0; i < d; ++i) {
    acc ^= x.bits[static_cast<size_t>(i)];
    rank = (rank << 1) | acc;
  }
  return rank;
}

BitString gray_unrank(int d, uint64_t k) {
  if (d < 1 || d > 62) throw Error(ErrorCode::Range, "gray_unrank supports 1 <= d <= 62");
  if (k >= (uint64_t{1} << d)) throw Error(ErrorCode::Range, "rank out of range");
  const uint64_t g = k ^ (k >> 1);
  BitString x(d);
  for (int i = 0; i < d; ++i)
    x.bits[static_cast<size_t>(i)] = static_cast<uint8_t>((g >> (d - 1 - i)) & 1u);
  return x;
}

namespace {

inline void count(size_t* ops) {
  if (ops) ++*ops;
}

}  // namespace

BitString gray_succ(const BitString& x, size_t* ops) {
  const int d = x.size();
  int parity = 0;
  for (int i = 0; i < d; ++i) {
    parity ^= x.bits[static_cast<size_t>(i)];
    count(ops);
  }
  BitString y = x;
  if (parity == 0) {
    y.bits[static_cast<size_t>(d - 1)] ^= 1;  // even weight: flip the last bit
    count(ops);
    return y;
  }
  int rightmost_one = -1;
  for (int i = d - 1; i >= 0; --i) {
    count(ops);
    if (x.bits[static_cast<size_t>(i)]) {
      rightmost_one = i;
      break;
    }
  }
  if (rightmost_one == 0)
    throw Error(ErrorCode::EndOfCode, "successor undefined at 1 0^{d-1}");
  y.bits[static_cast<size_t>(rightmost_one - 1)] ^= 1;
  count(ops);
  return y;
}

BitString gray_pred(const BitString& x, size_t* ops) {
  const int d = x.size();
  int parity = 0;
  bool any_one = false;
  for (int i = 0; i < d; ++i) {
    parity ^= x.bits[static_cast<size_t>(i)];
    any_one = any_one || x.bits[static_cast<size_t>(i)];
    count(ops);
  }
  if (!any_one) throw Error(ErrorCode::EndOfCode, "predecessor undefined at 0^d");
  BitString y = x;
  if (parity == 1) {
    y.bits[static_cast<size_t>(d - 1)] ^= 1;  // odd weight: flip the last bit
    count(ops);
    return y;
  }
  int rightmost_one = -1;
  for (int i = d - 1; i >= 0; --i) {
    count(ops);
    if (x.bits[static_cast<size_t>(i)]) {
      rightmost_one = i;
      break;
    }
  }
  // even weight implies at least two ones, so a left neighbour exists
  y.bits[static_cast<size_t>(rightmost_one - 1)] ^= 1;
  count(ops);
  return y;
}

int single_flip_index(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::WidthMismatch, "lengths differ");
  int idx = 0, flips = 0;
  for (int i = 1; i <= a.size(); ++i) {
    if (a.bit(i) != b.bit(i)) {
      idx = i;
      ++flips;
    }
  }
  if (flips != 1) throw std::invalid_argument("strings do not differ in exactly one bit");
  return idx;
}

}  // namespace pivotlab
