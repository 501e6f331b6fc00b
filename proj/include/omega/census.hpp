#pragma once

// Per-payload-length halting counts.
//
// Two independent routes produce the same numbers:
//   * enumeration: decode every program of the level and ask the analyzer
//     (or run it under a step budget);
//   * counting: a dynamic program over instruction prefixes that relies on
//     first_pass_halts() and never materializes a program.
// The counting route is polynomial in the payload length; the enumeration
// route is exponential and exists as ground truth.

#include <cstdint>
#include <optional>
#include <vector>

#include "omega/bigint.hpp"
#include "omega/limits.hpp"

namespace omega {

enum class CensusRoute { Counting, Enumeration };

/// Counting route. Caches the number of instruction prefixes of each length
/// whose first pass is still running, so level queries are linear after the
/// first call.
class HaltingCensus {
 public:
  explicit HaltingCensus(const Limits& limits = default_limits());

  /// Programs with this payload length that halt.
  BigInt halting_programs(unsigned payload_len);

  /// Programs with this payload length that halt within budget steps.
  BigInt halting_within(unsigned payload_len, std::uint64_t budget);

 private:
  BigInt sequences_halting(std::size_t instructions,
                           std::optional<std::uint64_t> budget);
  void extend_to(std::size_t length);

  Limits limits_;
  // running_[j]: instruction sequences of length j whose first pass has
  // neither halted nor branched back.
  std::vector<BigInt> running_;
  // frontier_[r]: those prefixes (of the longest computed length) by
  // register value.
  std::vector<BigInt> frontier_;
};

/// Enumeration route, via decide_halting.
BigInt enumerate_halting_programs(unsigned payload_len,
                                  const Limits& limits = default_limits());

/// Enumeration route, via run(p, budget).
BigInt enumerate_halting_within(unsigned payload_len, std::uint64_t budget,
                                const Limits& limits = default_limits());

}  // namespace omega
