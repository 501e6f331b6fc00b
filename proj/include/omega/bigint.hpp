#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

namespace omega {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// 2^e as a BigInt.
inline BigInt pow2(unsigned e) {
  BigInt v = 1;
  v <<= e;
  return v;
}

inline BigInt ipow(const BigInt& base, unsigned e) {
  return boost::multiprecision::pow(base, e);
}

inline std::strong_ordering compare(const BigInt& a, const BigInt& b) {
  const int c = a.compare(b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace omega
