#pragma once

#include <compare>
#include <cstdint>

#include "omega/bigint.hpp"

namespace omega {

/// Nonnegative dyadic rational numerator / 2^exponent, kept canonical
/// (numerator odd, or zero with exponent 0) so that equality is value
/// equality.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(BigInt numerator, unsigned exponent);

  static DyadicRational zero() { return {}; }
  static DyadicRational one() { return {1, 0}; }
  /// 2^-e
  static DyadicRational unit(unsigned e) { return {1, e}; }

  const BigInt& numerator() const noexcept { return num_; }
  unsigned exponent() const noexcept { return exp_; }

  DyadicRational& operator+=(const DyadicRational& other);
  friend DyadicRational operator+(DyadicRational a, const DyadicRational& b) {
    a += b;
    return a;
  }
  /// Requires *this >= other.
  DyadicRational& operator-=(const DyadicRational& other);
  friend DyadicRational operator-(DyadicRational a, const DyadicRational& b) {
    a -= b;
    return a;
  }
  /// Multiplies by a nonnegative integer.
  DyadicRational scaled(const BigInt& factor) const;

  /// floor(value * base^k)
  BigInt floor_scaled(unsigned base, unsigned k) const;
  /// Whether value * base^k is an integer.
  bool is_integral_scaled(unsigned base, unsigned k) const;

  /// Three-way comparison of value against numerator / base^k.
  std::strong_ordering compare_fraction(const BigInt& numerator, unsigned base,
                                        unsigned k) const;

  /// Bit k after the binary point, k >= 1.
  bool bit(unsigned k) const;

  double to_double() const;

  friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
  friend std::strong_ordering operator<=>(const DyadicRational& a,
                                          const DyadicRational& b);

 private:
  void normalize();

  BigInt num_ = 0;
  unsigned exp_ = 0;
};

struct DyadicInterval {
  DyadicRational lower;
  DyadicRational upper;

  DyadicRational width() const { return upper - lower; }
  bool contains(const DyadicRational& x) const {
    return lower <= x && x <= upper;
  }
  bool contains(const DyadicInterval& inner) const {
    return lower <= inner.lower && inner.upper <= upper;
  }
  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
};

}  // namespace omega
