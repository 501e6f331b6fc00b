#include "omega/bits.hpp"

#include <algorithm>

#include "omega/error.hpp"

namespace omega {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::TruncatedPayload: return "TruncatedPayload";
    case ErrorKind::TrailingBits: return "TrailingBits";
    case ErrorKind::InvalidBit: return "InvalidBit";
    case ErrorKind::ResourceGuard: return "ResourceGuard";
    case ErrorKind::Unresolved: return "Unresolved";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::UndeclaredIdentifier: return "UndeclaredIdentifier";
  }
  return "Unknown";
}

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b = b ? 1 : 0;
}

BitString BitString::parse(std::string_view text) {
  BitString out;
  out.bits_.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::InvalidBit, "expected '0' or '1' at offset " +
                                             std::to_string(i));
    }
    out.bits_.push_back(c == '1' ? 1 : 0);
  }
  return out;
}

BitString BitString::from_integer(const BigInt& v, std::size_t k) {
  if (v < 0 || (v != 0 && boost::multiprecision::msb(v) + 1 > k)) {
    throw Error(ErrorKind::RangeError,
                to_decimal(v) + " does not fit in " + std::to_string(k) +
                    " bits");
  }
  BitString out;
  out.bits_.resize(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    out.bits_[k - 1 - i] = boost::multiprecision::bit_test(v, i) ? 1 : 0;
  }
  return out;
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitString BitString::prefix(std::size_t n) const {
  n = std::min(n, bits_.size());
  return BitString(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + n));
}

bool BitString::is_prefix_of(const BitString& other) const {
  return bits_.size() <= other.bits_.size() &&
         std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

BigInt BitString::to_integer() const {
  BigInt v = 0;
  for (auto b : bits_) {
    v <<= 1;
    v += b;
  }
  return v;
}

std::string BitString::str() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

bool shortlex_less(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits_ < b.bits_;
}

}  // namespace omega
