#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "omega/bigint.hpp"

namespace omega {

/// Finite bit sequence, leftmost (most significant) bit first.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<std::uint8_t> bits);

  /// Parses a string over {0,1}; anything else raises ErrorKind::InvalidBit.
  static BitString parse(std::string_view text);

  /// k-digit binary expansion of v, zero padded on the left. Requires v < 2^k.
  static BitString from_integer(const BigInt& v, std::size_t k);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }

  void push_back(bool b) { bits_.push_back(b ? 1 : 0); }
  void append(const BitString& other);

  BitString prefix(std::size_t n) const;
  bool is_prefix_of(const BitString& other) const;

  /// Reads the bits as an unsigned binary integer.
  BigInt to_integer() const;

  std::string str() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  /// Shortlex: shorter strings first, then lexicographic with 0 < 1.
  friend bool shortlex_less(const BitString& a, const BitString& b);

 private:
  std::vector<std::uint8_t> bits_;
};

bool shortlex_less(const BitString& a, const BitString& b);

}  // namespace omega
