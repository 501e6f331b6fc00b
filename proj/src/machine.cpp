#include "omega/machine.hpp"

#include <bit>
#include <string>

#include "omega/error.hpp"

namespace omega {

std::string_view opcode_name(Opcode op) {
  switch (op) {
    case Opcode::Inc: return "INC";
    case Opcode::Dec: return "DEC";
    case Opcode::Bnz: return "BNZ";
    case Opcode::Halt: return "HALT";
  }
  return "?";
}

Program Program::from_payload(const BitString& payload) {
  Program p;
  const std::size_t n = payload.size();
  std::vector<std::uint8_t> raw(2 * n + 1, 1);
  raw[n] = 0;
  for (std::size_t i = 0; i < n; ++i) raw[n + 1 + i] = payload[i] ? 1 : 0;
  p.raw_ = BitString(std::move(raw));
  p.payload_ = payload;
  p.instructions_.reserve(n / 2);
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    const unsigned code = (payload[i] ? 2u : 0u) | (payload[i + 1] ? 1u : 0u);
    p.instructions_.push_back(static_cast<Opcode>(code));
  }
  return p;
}

Program Program::from_instructions(std::span<const Opcode> instructions) {
  std::vector<std::uint8_t> payload;
  payload.reserve(2 * instructions.size());
  for (Opcode op : instructions) {
    const auto code = static_cast<unsigned>(op);
    payload.push_back((code >> 1) & 1);
    payload.push_back(code & 1);
  }
  return from_payload(BitString(std::move(payload)));
}

Program decode_program(const BitString& bits) {
  std::size_t n = 0;
  while (n < bits.size() && bits[n]) ++n;
  if (n == bits.size()) {
    throw Error(ErrorKind::MalformedHeader,
                "header has no terminating 0 in '" + bits.str() + "'");
  }
  const std::size_t available = bits.size() - n - 1;
  if (available < n) {
    throw Error(ErrorKind::TruncatedPayload,
                "header declares " + std::to_string(n) + " payload bits, " +
                    std::to_string(available) + " present");
  }
  if (available > n) {
    throw Error(ErrorKind::TrailingBits,
                std::to_string(available - n) +
                    " bits follow the end of the program");
  }
  BitString payload;
  for (std::size_t i = n + 1; i < bits.size(); ++i) payload.push_back(bits[i]);
  return Program::from_payload(payload);
}

Program decode_program(std::string_view text) {
  return decode_program(BitString::parse(text));
}

std::vector<Program> enumerate_programs(unsigned max_payload,
                                        const Limits& limits) {
  if (max_payload > limits.max_enum_payload ||
      max_payload + 1 >= 64 ||
      (std::uint64_t{1} << (max_payload + 1)) > limits.max_enum_programs) {
    throw Error(ErrorKind::ResourceGuard,
                "enumerating payloads up to " + std::to_string(max_payload) +
                    " bits exceeds the enumeration cap");
  }
  std::vector<Program> out;
  out.reserve((std::size_t{1} << (max_payload + 1)) - 1);
  // Raw length grows with payload length, and within a level the header is
  // shared, so shortlex order is payload length then payload value.
  for (unsigned n = 0; n <= max_payload; ++n) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      out.push_back(Program::from_payload(BitString::from_integer(v, n)));
    }
  }
  return out;
}

Program program_at_index(std::uint64_t index) {
  if (index == 0) {
    throw Error(ErrorKind::RangeError, "program indices start at 1");
  }
  // Level n holds indices 2^n .. 2^(n+1) - 1.
  const unsigned n = static_cast<unsigned>(std::bit_width(index) - 1);
  const std::uint64_t offset = index - (std::uint64_t{1} << n);
  return Program::from_payload(BitString::from_integer(offset, n));
}

RunOutcome run(std::span<const Opcode> instructions, std::uint64_t budget) {
  const std::size_t len = instructions.size();
  std::uint64_t r = 0;
  std::uint64_t steps = 0;
  std::size_t ip = 0;
  for (;;) {
    if (ip >= len) return RunOutcome::halted_after(steps);
    if (steps == budget) return RunOutcome::out_of_budget(budget);
    ++steps;
    switch (instructions[ip]) {
      case Opcode::Inc:
        ++r;
        ++ip;
        break;
      case Opcode::Dec:
        if (r > 0) --r;
        ++ip;
        break;
      case Opcode::Bnz:
        ip = (r != 0) ? 0 : ip + 1;
        break;
      case Opcode::Halt:
        return RunOutcome::halted_after(steps);
    }
  }
}

}  // namespace omega
