#pragma once

// The toy self-delimiting language.
//
// A program is a unary header 1^n 0 followed by n payload bits, so |p| = 2n+1
// and no program is a proper prefix of another. The payload is read two bits
// at a time as opcodes:
//
//   00 INC   r <- r + 1
//   01 DEC   r <- max(r - 1, 0)
//   10 BNZ   jump to instruction 0 if r != 0, else fall through
//   11 HALT
//
// An odd payload leaves one dangling bit that decodes to nothing. Running
// past the last instruction halts without costing a step.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "omega/bits.hpp"
#include "omega/limits.hpp"

namespace omega {

enum class Opcode : std::uint8_t { Inc = 0, Dec = 1, Bnz = 2, Halt = 3 };

std::string_view opcode_name(Opcode op);

class Program {
 public:
  /// Builds the program with the given payload.
  static Program from_payload(const BitString& payload);

  /// Builds a program whose payload encodes exactly these instructions (no
  /// dangling bit).
  static Program from_instructions(std::span<const Opcode> instructions);

  const BitString& raw() const noexcept { return raw_; }
  const BitString& payload() const noexcept { return payload_; }
  std::size_t payload_len() const noexcept { return payload_.size(); }
  std::size_t length() const noexcept { return raw_.size(); }
  const std::vector<Opcode>& instructions() const noexcept {
    return instructions_;
  }

  friend bool operator==(const Program& a, const Program& b) {
    return a.raw_ == b.raw_;
  }

 private:
  BitString raw_;
  BitString payload_;
  std::vector<Opcode> instructions_;
};

/// Decodes exactly one program. Throws MalformedHeader, TruncatedPayload or
/// TrailingBits.
Program decode_program(const BitString& bits);
Program decode_program(std::string_view text);

/// Every program with payload_len <= max_payload, in shortlex order of raw.
std::vector<Program> enumerate_programs(unsigned max_payload,
                                        const Limits& limits = default_limits());

/// The index-th program in shortlex order, 1-based: index 1 is "0".
Program program_at_index(std::uint64_t index);

struct RunOutcome {
  enum class Kind { Halted, OutOfBudget };
  Kind kind;
  // Steps taken when halted; the budget when out of budget.
  std::uint64_t steps;

  bool halted() const noexcept { return kind == Kind::Halted; }

  static RunOutcome halted_after(std::uint64_t s) { return {Kind::Halted, s}; }
  static RunOutcome out_of_budget(std::uint64_t b) {
    return {Kind::OutOfBudget, b};
  }
  friend bool operator==(const RunOutcome&, const RunOutcome&) = default;
};

/// Runs p from r = 0 for at most budget steps. The register never exceeds
/// the step count, so a 64-bit register is exact for any 64-bit budget.
RunOutcome run(std::span<const Opcode> instructions, std::uint64_t budget);
inline RunOutcome run(const Program& p, std::uint64_t budget) {
  return run(p.instructions(), budget);
}

}  // namespace omega
