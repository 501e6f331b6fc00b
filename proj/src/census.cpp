#include "omega/census.hpp"

#include <string>

#include "omega/error.hpp"
#include "omega/halting.hpp"
#include "omega/machine.hpp"

namespace omega {

namespace {

void check_counting_cap(unsigned payload_len, const Limits& limits) {
  if (payload_len > limits.max_count_payload) {
    throw Error(ErrorKind::ResourceGuard,
                "payload length " + std::to_string(payload_len) +
                    " exceeds the counting cap of " +
                    std::to_string(limits.max_count_payload));
  }
}

void check_enumeration_cap(unsigned payload_len, const Limits& limits) {
  if (payload_len > limits.max_enum_payload || payload_len >= 63 ||
      (std::uint64_t{1} << payload_len) > limits.max_enum_programs) {
    throw Error(ErrorKind::ResourceGuard,
                "enumerating payload length " + std::to_string(payload_len) +
                    " exceeds the enumeration cap");
  }
}

// Visits every instruction sequence of the given length, in payload order.
template <typename Fn>
void for_each_sequence(std::size_t length, Fn&& fn) {
  std::vector<Opcode> seq(length, Opcode::Inc);
  for (;;) {
    fn(std::span<const Opcode>(seq));
    std::size_t i = length;
    while (i > 0) {
      --i;
      if (seq[i] != Opcode::Halt) {
        seq[i] = static_cast<Opcode>(static_cast<unsigned>(seq[i]) + 1);
        break;
      }
      seq[i] = Opcode::Inc;
      if (i == 0) return;
    }
    if (length == 0) return;
  }
}

}  // namespace

HaltingCensus::HaltingCensus(const Limits& limits)
    : limits_(limits), running_{1}, frontier_{1} {}

void HaltingCensus::extend_to(std::size_t length) {
  while (running_.size() <= length) {
    std::vector<BigInt> next(frontier_.size() + 1);
    for (std::size_t r = 0; r < frontier_.size(); ++r) {
      const BigInt& c = frontier_[r];
      if (c == 0) continue;
      next[r + 1] += c;               // INC
      next[r == 0 ? 0 : r - 1] += c;  // DEC
      if (r == 0) next[0] += c;       // BNZ not taken
      // BNZ taken and HALT both end the first pass.
    }
    BigInt total = 0;
    for (const auto& c : next) total += c;
    frontier_ = std::move(next);
    running_.push_back(std::move(total));
  }
}

BigInt HaltingCensus::sequences_halting(std::size_t instructions,
                                        std::optional<std::uint64_t> budget) {
  extend_to(instructions);
  BigInt count = 0;
  // HALT at position j ends the run after j + 1 steps; the remaining
  // positions are free.
  for (std::size_t j = 0; j < instructions; ++j) {
    if (budget && j + 1 > *budget) break;
    count += running_[j] << (2 * (instructions - 1 - j));
  }
  // Falling off the end takes one step per instruction.
  if (!budget || instructions <= *budget) count += running_[instructions];
  return count;
}

BigInt HaltingCensus::halting_programs(unsigned payload_len) {
  check_counting_cap(payload_len, limits_);
  BigInt c = sequences_halting(payload_len / 2, std::nullopt);
  return (payload_len % 2) ? BigInt(c << 1) : c;
}

BigInt HaltingCensus::halting_within(unsigned payload_len,
                                     std::uint64_t budget) {
  check_counting_cap(payload_len, limits_);
  BigInt c = sequences_halting(payload_len / 2, budget);
  return (payload_len % 2) ? BigInt(c << 1) : c;
}

BigInt enumerate_halting_programs(unsigned payload_len, const Limits& limits) {
  check_enumeration_cap(payload_len, limits);
  std::uint64_t count = 0;
  for_each_sequence(payload_len / 2, [&](std::span<const Opcode> seq) {
    if (decide_halting(seq).halts()) ++count;
  });
  return BigInt(count) << (payload_len % 2);
}

BigInt enumerate_halting_within(unsigned payload_len, std::uint64_t budget,
                                const Limits& limits) {
  check_enumeration_cap(payload_len, limits);
  std::uint64_t count = 0;
  for_each_sequence(payload_len / 2, [&](std::span<const Opcode> seq) {
    if (run(seq, budget).halted()) ++count;
  });
  return BigInt(count) << (payload_len % 2);
}

}  // namespace omega
