#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "omega/bigint.hpp"
#include "omega/dio/expr.hpp"
#include "omega/limits.hpp"

namespace omega::dio {

/// Flattened postfix form of an expression with variables resolved to slot
/// indices. Evaluation is exact.
class CompiledExpr {
 public:
  CompiledExpr(const Expr& e, const std::vector<std::string>& slot_names,
               const Limits& limits = default_limits());

  BigInt evaluate(std::span<const BigInt> slots) const;
  /// Reuses the caller's stack to avoid reallocating in tight loops.
  BigInt evaluate(std::span<const BigInt> slots,
                  std::vector<BigInt>& stack) const;

 private:
  enum class Op : std::uint8_t { Push, Load, Neg, Add, Sub, Mul, Pow };
  struct Instr {
    Op op;
    std::uint32_t slot = 0;
    BigInt constant;
  };

  std::vector<Instr> code_;
  std::uint64_t max_exponent_;
};

}  // namespace omega::dio
