#pragma once

#include <cstdint>

namespace omega {

/// Resource caps. Everything that enumerates or scans checks one of these
/// before starting work and raises ErrorKind::ResourceGuard when exceeded.
struct Limits {
  // Explicit enumeration of programs (enumerate_programs, tau_bits, the
  // enumeration census).
  unsigned max_enum_payload = 24;
  std::uint64_t max_enum_programs = std::uint64_t{1} << 25;

  // Payload lengths reachable by the counting census. The counting route is
  // quadratic in payload length, so this can be far larger than the
  // enumeration cap.
  unsigned max_count_payload = 4096;

  // Default refinement budget for enclosure-based certification.
  unsigned default_n0_max = 24;

  // linear_scan issues 2^k - 1 queries.
  unsigned max_linear_k = 24;

  // Diophantine box scans.
  std::uint64_t max_box_points = std::uint64_t{1} << 24;
  std::uint64_t max_exponent = 4096;
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

}  // namespace omega
