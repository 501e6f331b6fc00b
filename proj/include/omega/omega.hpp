#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

#include "omega/bits.hpp"
#include "omega/census.hpp"
#include "omega/dyadic.hpp"
#include "omega/error.hpp"
#include "omega/limits.hpp"

namespace omega {

/// Raised when an enclosure never separates from a threshold within the
/// refinement budget. Carries the last enclosure examined.
class UnresolvedError : public Error {
 public:
  UnresolvedError(const std::string& message, unsigned n0_max,
                  DyadicInterval witness)
      : Error(ErrorKind::Unresolved, message),
        n0_max_(n0_max),
        witness_(std::move(witness)) {}

  unsigned n0_max() const noexcept { return n0_max_; }
  const DyadicInterval& witness() const noexcept { return witness_; }

 private:
  unsigned n0_max_;
  DyadicInterval witness_;
};

struct OmegaBits {
  unsigned k = 0;
  BitString bits;
  bool certified = false;
  // Refinement level at which the bits settled (or n0_max when they did not).
  unsigned n0 = 0;
  DyadicInterval enclosure;
};

struct FlipCensus {
  std::uint64_t flips = 0;
  bool final_bit = false;
  bool settled = false;
};

/// Owns the halting census and the enclosure cache. All members are safe to
/// call concurrently; refinement is serialized internally.
class OmegaEngine {
 public:
  explicit OmegaEngine(const Limits& limits = default_limits(),
                       CensusRoute route = CensusRoute::Counting);

  const Limits& limits() const noexcept { return limits_; }
  CensusRoute route() const noexcept { return route_; }

  /// Sum of 2^-|p| over programs with |p| <= i that halt within i steps.
  DyadicRational omega_approx(std::uint64_t i);

  /// [halting mass of payloads <= n0, that plus the Kraft tail 2^-(n0+1)].
  DyadicInterval omega_enclosure(unsigned n0);

  /// First k bits of Omega, refining up to n0_max.
  OmegaBits certified_bits(unsigned k, unsigned n0_max);

  /// Bit k (after the binary point) of omega_approx(n).
  bool bit_of_approx(unsigned k, std::uint64_t n);

  /// Changes of bit k of omega_approx over n = 1..n_max. Settlement is
  /// checked against the enclosure at max(n0_max, payload bound of n_max).
  FlipCensus flip_census(unsigned k, std::uint64_t n_max,
                         std::optional<unsigned> n0_max = std::nullopt);

 private:
  // Both require mutex_ held.
  const DyadicRational& lower_prefix(unsigned n0);
  BigInt level_halting(unsigned payload_len);

  Limits limits_;
  CensusRoute route_;
  std::mutex mutex_;
  HaltingCensus census_;
  // lower_[n0]: halting mass of payloads <= n0
  std::vector<DyadicRational> lower_;
};

}  // namespace omega
