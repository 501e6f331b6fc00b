#pragma once

// Reductions from halting answers to bits of Omega.
//
// The threshold oracle answers "N / b^k < Omega?". Its answers over
// N = 1..b^k-1 are true up to some q_k and false afterwards; q_k written in
// base b with k digits is the k-digit prefix of Omega. linear_scan asks every
// question up front (a truth-table reduction); bisect asks adaptively and
// needs at most k questions in base 2.

#include <cstdint>
#include <vector>

#include "omega/bigint.hpp"
#include "omega/bits.hpp"
#include "omega/limits.hpp"
#include "omega/omega.hpp"

namespace omega {

enum class TauMode { Decided, StepBounded };

struct TauBits {
  std::uint64_t n = 0;
  BitString bits;
  TauMode mode = TauMode::Decided;
  std::uint64_t budget = 0;  // StepBounded only
};

/// Bits 1..n of tau: bit i is set iff the i-th shortlex program halts
/// (Decided) or halts within budget steps (StepBounded).
TauBits tau_bits(std::uint64_t n, TauMode mode, std::uint64_t budget = 0,
                 const Limits& limits = default_limits());

struct OracleQuery {
  BigInt n;
  bool answer;
  friend bool operator==(const OracleQuery&, const OracleQuery&) = default;
};

struct OracleLog {
  std::vector<OracleQuery> entries;
  std::size_t count() const noexcept { return entries.size(); }
};

/// Decides N / base^k < Omega by refining enclosures until the threshold
/// falls strictly below the lower end (true) or at/above the upper end
/// (false). Every answered query is appended to the log.
class ThresholdOracle {
 public:
  ThresholdOracle(OmegaEngine& engine, unsigned n0_max);

  bool below_omega(const BigInt& n, unsigned base, unsigned k);

  const OracleLog& log() const noexcept { return log_; }
  OracleLog take_log() { return std::move(log_); }

 private:
  OmegaEngine& engine_;
  unsigned n0_max_;
  OracleLog log_;
};

/// N / 2^k < Omega, for 1 <= N <= 2^k - 1.
bool q_oracle(OmegaEngine& engine, unsigned k, const BigInt& n,
              unsigned n0_max);

struct ReductionResult {
  unsigned k = 0;
  BigInt q;
  BitString bits;
  OracleLog log;
};

ReductionResult linear_scan(OmegaEngine& engine, unsigned k, unsigned n0_max);
ReductionResult bisect(OmegaEngine& engine, unsigned k, unsigned n0_max);

/// k-digit binary expansion of q; RangeError if q >= 2^k.
BitString decode_bits(const BigInt& q, unsigned k);

/// k-digit base-b expansion of q, most significant first; RangeError if
/// q >= b^k.
std::vector<unsigned> decode_digits(const BigInt& q, unsigned base, unsigned k);

struct BaseDigits {
  unsigned k = 0;
  unsigned base = 2;
  BigInt q;
  unsigned digit = 0;  // q mod base, the k-th digit
  std::vector<unsigned> digits;
  OracleLog log;
};

/// Greatest N with N / base^k < Omega, found by bisection over 1..base^k-1.
BaseDigits digits_base_b(OmegaEngine& engine, unsigned k, unsigned base,
                         unsigned n0_max);

}  // namespace omega
