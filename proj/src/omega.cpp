#include "omega/omega.hpp"

#include <algorithm>
#include <string>

namespace omega {

namespace {

unsigned payload_bound_for_length(std::uint64_t i, const Limits& limits) {
  // Programs with |p| = 2n + 1 <= i.
  const std::uint64_t m = (i - 1) / 2;
  const std::uint64_t cap =
      std::max<std::uint64_t>(limits.max_count_payload, limits.max_enum_payload);
  if (m > cap) {
    throw Error(ErrorKind::ResourceGuard,
                "program length bound " + std::to_string(i) +
                    " exceeds the payload cap");
  }
  return static_cast<unsigned>(m);
}

}  // namespace

OmegaEngine::OmegaEngine(const Limits& limits, CensusRoute route)
    : limits_(limits), route_(route), census_(limits), lower_{} {}

BigInt OmegaEngine::level_halting(unsigned payload_len) {
  if (route_ == CensusRoute::Counting) {
    return census_.halting_programs(payload_len);
  }
  return enumerate_halting_programs(payload_len, limits_);
}

const DyadicRational& OmegaEngine::lower_prefix(unsigned n0) {
  while (lower_.size() <= n0) {
    const auto n = static_cast<unsigned>(lower_.size());
    DyadicRational level(level_halting(n), 2 * n + 1);
    lower_.push_back(lower_.empty() ? level : lower_.back() + level);
  }
  return lower_[n0];
}

DyadicRational OmegaEngine::omega_approx(std::uint64_t i) {
  if (i == 0) return DyadicRational::zero();
  const unsigned m = payload_bound_for_length(i, limits_);
  std::lock_guard lock(mutex_);
  if (route_ == CensusRoute::Counting) {
    // A halting program halts in its first pass, after at most floor(n/2)
    // steps, and floor(n/2) < 2n + 1 <= i: the step bound never excludes
    // a program that the length bound admits.
    return lower_prefix(m);
  }
  DyadicRational sum;
  for (unsigned n = 0; n <= m; ++n) {
    sum += DyadicRational(enumerate_halting_within(n, i, limits_), 2 * n + 1);
  }
  return sum;
}

DyadicInterval OmegaEngine::omega_enclosure(unsigned n0) {
  std::lock_guard lock(mutex_);
  DyadicRational lower = lower_prefix(n0);
  DyadicRational upper = lower + DyadicRational::unit(n0 + 1);
  return {std::move(lower), std::move(upper)};
}

OmegaBits OmegaEngine::certified_bits(unsigned k, unsigned n0_max) {
  if (k == 0) {
    throw Error(ErrorKind::InvalidArgument, "bit positions start at 1");
  }
  OmegaBits out;
  out.k = k;
  for (unsigned n0 = 0; n0 <= n0_max; ++n0) {
    DyadicInterval enc = omega_enclosure(n0);
    const BigInt lo = enc.lower.floor_scaled(2, k);
    const BigInt hi = enc.upper.floor_scaled(2, k);
    // The upper end is only a non-strict bound, so it must not sit on the
    // grid point that closes the candidate cell.
    if (lo == hi && !enc.upper.is_integral_scaled(2, k)) {
      out.bits = BitString::from_integer(lo, k);
      out.certified = true;
      out.n0 = n0;
      out.enclosure = std::move(enc);
      return out;
    }
    if (n0 == n0_max) {
      out.bits = BitString::from_integer(lo, k);
      out.n0 = n0;
      out.enclosure = std::move(enc);
    }
  }
  return out;
}

bool OmegaEngine::bit_of_approx(unsigned k, std::uint64_t n) {
  if (k == 0) {
    throw Error(ErrorKind::InvalidArgument, "bit positions start at 1");
  }
  return omega_approx(n).bit(k);
}

FlipCensus OmegaEngine::flip_census(unsigned k, std::uint64_t n_max,
                                    std::optional<unsigned> n0_max) {
  if (k == 0) {
    throw Error(ErrorKind::InvalidArgument, "bit positions start at 1");
  }
  FlipCensus out;
  bool prev = bit_of_approx(k, 0);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const bool cur = bit_of_approx(k, n);
    if (cur != prev) ++out.flips;
    prev = cur;
  }
  out.final_bit = prev;

  // Every later approximation lies in [omega_approx(n_max), upper]. If upper
  // stays strictly below the next multiple of 2^-k, floor(x * 2^k) and hence
  // bit k are frozen.
  const BigInt cell = omega_approx(n_max).floor_scaled(2, k);
  unsigned n0 = n0_max.value_or(limits_.default_n0_max);
  if (n_max >= 1) n0 = std::max(n0, payload_bound_for_length(n_max, limits_));
  const DyadicInterval enc = omega_enclosure(n0);
  out.settled = enc.upper.compare_fraction(cell + 1, 2, k) < 0;
  return out;
}

}  // namespace omega
