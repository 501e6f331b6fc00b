#include "omega/halting.hpp"

#include <vector>

namespace omega {

PassOutcome pass_function(std::span<const Opcode> instructions, const BigInt& r) {
  BigInt reg = r;
  std::uint64_t steps = 0;
  for (const Opcode op : instructions) {
    ++steps;
    switch (op) {
      case Opcode::Inc:
        ++reg;
        break;
      case Opcode::Dec:
        if (reg > 0) --reg;
        break;
      case Opcode::Bnz:
        if (reg != 0) {
          return {PassOutcome::Kind::BranchBack, steps, std::move(reg)};
        }
        break;
      case Opcode::Halt:
        return {PassOutcome::Kind::HaltInPass, steps, 0};
    }
  }
  return {PassOutcome::Kind::FallOff, steps, 0};
}

HaltingVerdict decide_halting(std::span<const Opcode> instructions) {
  const std::size_t len = instructions.size();
  const BigInt bound = len;
  std::vector<bool> seen(len + 1, false);

  BigInt r = 0;
  BigInt steps = 0;
  for (;;) {
    PassOutcome pass = pass_function(instructions, r);
    if (pass.kind != PassOutcome::Kind::BranchBack) {
      return HaltingVerdict::halts_after(steps + pass.steps_in_pass);
    }

    if (r <= bound) {
      const auto slot = r.convert_to<std::size_t>();
      if (seen[slot]) return HaltingVerdict::cycle(r);
      seen[slot] = true;
      steps += pass.steps_in_pass;
      r = std::move(pass.next_r);
      continue;
    }

    // Large regime: this pass repeats unchanged while r stays above len.
    BigInt delta = pass.next_r - r;
    if (delta >= 0) return HaltingVerdict::escape(std::move(delta));
    const BigInt drop = -delta;
    const BigInt repeats = (r - bound + drop - 1) / drop;
    steps += repeats * pass.steps_in_pass;
    r += repeats * delta;
  }
}

bool first_pass_halts(std::span<const Opcode> instructions) {
  std::uint64_t r = 0;
  for (const Opcode op : instructions) {
    switch (op) {
      case Opcode::Inc:
        ++r;
        break;
      case Opcode::Dec:
        if (r > 0) --r;
        break;
      case Opcode::Bnz:
        if (r != 0) return false;
        break;
      case Opcode::Halt:
        return true;
    }
  }
  return true;
}

}  // namespace omega
