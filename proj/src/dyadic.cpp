#include "omega/dyadic.hpp"

#include <algorithm>
#include <cmath>

#include "omega/error.hpp"

namespace omega {

namespace mp = boost::multiprecision;

DyadicRational::DyadicRational(BigInt numerator, unsigned exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  if (num_ < 0) {
    throw Error(ErrorKind::RangeError, "dyadic rationals here are nonnegative");
  }
  normalize();
}

void DyadicRational::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  const unsigned shift = std::min<unsigned>(mp::lsb(num_), exp_);
  num_ >>= shift;
  exp_ -= shift;
}

DyadicRational& DyadicRational::operator+=(const DyadicRational& other) {
  if (other.exp_ > exp_) {
    num_ <<= (other.exp_ - exp_);
    exp_ = other.exp_;
    num_ += other.num_;
  } else {
    num_ += other.num_ << (exp_ - other.exp_);
  }
  normalize();
  return *this;
}

DyadicRational& DyadicRational::operator-=(const DyadicRational& other) {
  if (other > *this) {
    throw Error(ErrorKind::RangeError, "dyadic subtraction would go negative");
  }
  if (other.exp_ > exp_) {
    num_ <<= (other.exp_ - exp_);
    exp_ = other.exp_;
    num_ -= other.num_;
  } else {
    num_ -= other.num_ << (exp_ - other.exp_);
  }
  normalize();
  return *this;
}

DyadicRational DyadicRational::scaled(const BigInt& factor) const {
  return {num_ * factor, exp_};
}

BigInt DyadicRational::floor_scaled(unsigned base, unsigned k) const {
  return (num_ * ipow(BigInt(base), k)) >> exp_;
}

bool DyadicRational::is_integral_scaled(unsigned base, unsigned k) const {
  const BigInt scaled = num_ * ipow(BigInt(base), k);
  return scaled == ((scaled >> exp_) << exp_);
}

std::strong_ordering DyadicRational::compare_fraction(const BigInt& numerator,
                                                      unsigned base,
                                                      unsigned k) const {
  // num / 2^exp  vs  numerator / base^k
  const BigInt lhs = num_ * ipow(BigInt(base), k);
  const BigInt rhs = numerator << exp_;
  return compare(lhs, rhs);
}

bool DyadicRational::bit(unsigned k) const {
  return mp::bit_test(floor_scaled(2, k), 0);
}

double DyadicRational::to_double() const {
  // Keep the top 64 bits; exact enough for display.
  if (num_ == 0) return 0.0;
  const unsigned width = mp::msb(num_) + 1;
  const unsigned drop = width > 64 ? width - 64 : 0;
  const double mantissa = static_cast<double>(
      static_cast<unsigned long long>(BigInt(num_ >> drop)));
  return std::ldexp(mantissa, static_cast<int>(drop) - static_cast<int>(exp_));
}

std::strong_ordering operator<=>(const DyadicRational& a,
                                 const DyadicRational& b) {
  const unsigned e = std::max(a.exp_, b.exp_);
  const BigInt lhs = a.num_ << (e - a.exp_);
  const BigInt rhs = b.num_ << (e - b.exp_);
  return compare(lhs, rhs);
}

}  // namespace omega
