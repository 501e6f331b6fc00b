#pragma once

// Halting decision procedure for the toy machine.
//
// A "pass" is a straight-line scan from instruction 0 that ends at HALT, at
// fall-off, or at a taken BNZ. Every run is a sequence of passes, each fully
// determined by the register value it starts with.
//
// Once the pass-start register exceeds the instruction count L, no DEC can
// reach zero during the pass and the first BNZ is always taken, so the pass
// and its net register delta no longer depend on r. The analyzer tracks
// small pass-start values (r <= L) for repeats and treats the large regime
// in closed form.

#include <cstdint>
#include <span>

#include "omega/bigint.hpp"
#include "omega/machine.hpp"

namespace omega {

struct PassOutcome {
  enum class Kind { HaltInPass, FallOff, BranchBack };
  Kind kind;
  std::uint64_t steps_in_pass;
  BigInt next_r;  // meaningful for BranchBack only

  friend bool operator==(const PassOutcome&, const PassOutcome&) = default;
};

PassOutcome pass_function(std::span<const Opcode> instructions, const BigInt& r);
inline PassOutcome pass_function(const Program& p, const BigInt& r) {
  return pass_function(p.instructions(), r);
}

struct HaltingVerdict {
  enum class Kind { Halts, Diverges };
  enum class Reason { None, CycleDetected, EscapeNonNegativeDelta };

  Kind kind;
  BigInt steps;          // Halts: exact step count
  Reason reason;         // Diverges only
  BigInt witness;        // repeated pass-start r, or the large-regime delta

  bool halts() const noexcept { return kind == Kind::Halts; }

  static HaltingVerdict halts_after(BigInt steps) {
    return {Kind::Halts, std::move(steps), Reason::None, 0};
  }
  static HaltingVerdict cycle(BigInt repeated_r) {
    return {Kind::Diverges, 0, Reason::CycleDetected, std::move(repeated_r)};
  }
  static HaltingVerdict escape(BigInt delta) {
    return {Kind::Diverges, 0, Reason::EscapeNonNegativeDelta,
            std::move(delta)};
  }
  friend bool operator==(const HaltingVerdict&, const HaltingVerdict&) = default;
};

/// Always terminates. Halts.steps is the exact step count of the full run.
HaltingVerdict decide_halting(std::span<const Opcode> instructions);
inline HaltingVerdict decide_halting(const Program& p) {
  return decide_halting(p.instructions());
}

/// Whether the first pass from r = 0 ends in HALT or fall-off.
///
/// For this instruction set that is equivalent to halting. Let g be the
/// register map of the INC/DEC block before the first BNZ; it has the form
/// r -> max(r + a, c) and is nondecreasing. If g(0) > 0 then g(r) > 0 for
/// all r, so every pass branches back at that BNZ. If g(0) = 0 the first
/// pass continues past it with r = 0, and every later pass that gets past it
/// also does so with r = 0, replaying the first pass's tail exactly. Either
/// way, a run whose first pass branches back never halts.
bool first_pass_halts(std::span<const Opcode> instructions);

}  // namespace omega
