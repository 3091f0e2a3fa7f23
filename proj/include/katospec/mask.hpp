#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "katospec/errors.hpp"

namespace katospec {

inline constexpr int kMaxCarrier = 64;

// Subset of a carrier {0, ..., width-1} packed into one machine word.
// Canonical order on masks of equal width is the numeric order of `bits`.
struct Mask {
  std::uint64_t bits = 0;
  int width = 0;

  Mask() = default;
  Mask(std::uint64_t bits, int width) : bits(bits), width(width) {
    assert(width >= 0 && width <= kMaxCarrier);
    assert((bits & ~full_bits(width)) == 0);
  }

  static std::uint64_t full_bits(int width) {
    return width == kMaxCarrier ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  }
  static Mask empty(int width) { return Mask(0, width); }
  static Mask full(int width) { return Mask(full_bits(width), width); }
  static Mask singleton(int i, int width) { return Mask(std::uint64_t{1} << i, width); }

  bool test(int i) const { return (bits >> i) & 1; }
  void set(int i) { bits |= std::uint64_t{1} << i; }
  void reset(int i) { bits &= ~(std::uint64_t{1} << i); }
  int count() const { return __builtin_popcountll(bits); }
  bool empty_set() const { return bits == 0; }
  bool is_full() const { return bits == full_bits(width); }

  bool subset_of(const Mask& other) const {
    assert(width == other.width);
    return (bits & ~other.bits) == 0;
  }

  Mask operator&(const Mask& o) const { return Mask(bits & o.bits, width); }
  Mask operator|(const Mask& o) const { return Mask(bits | o.bits, width); }
  Mask operator-(const Mask& o) const { return Mask(bits & ~o.bits, width); }
  Mask complement() const { return Mask(full_bits(width) & ~bits, width); }

  bool operator==(const Mask& o) const { return bits == o.bits && width == o.width; }
  bool operator!=(const Mask& o) const { return !(*this == o); }
  bool operator<(const Mask& o) const { return bits < o.bits; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < width; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < width; ++i) {
      if (!test(i)) continue;
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }
};

inline Mask mask_from_members(const std::vector<int>& members, int width) {
  Mask m = Mask::empty(width);
  for (int i : members) {
    if (i < 0 || i >= width)
      throw Error(ErrorCode::EntryOutOfRange, "set member " + std::to_string(i) +
                      " outside carrier of size " + std::to_string(width), i);
    m.set(i);
  }
  return m;
}

// Visits every subset of `of`, including the empty set and `of` itself.
template <typename Fn>
void for_each_subset(const Mask& of, Fn&& fn) {
  std::uint64_t sub = of.bits;
  while (true) {
    fn(Mask(sub, of.width));
    if (sub == 0) break;
    sub = (sub - 1) & of.bits;
  }
}

}  // namespace katospec
