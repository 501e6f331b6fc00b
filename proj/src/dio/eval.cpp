#include "omega/dio/eval.hpp"

#include <algorithm>

#include "omega/error.hpp"

namespace omega::dio {

namespace {

template <typename Emit>
void emit_postfix(const Expr& e, Emit&& emit) {
  if (e.lhs) emit_postfix(*e.lhs, emit);
  if (e.rhs) emit_postfix(*e.rhs, emit);
  emit(e);
}

}  // namespace

CompiledExpr::CompiledExpr(const Expr& e,
                           const std::vector<std::string>& slot_names,
                           const Limits& limits)
    : max_exponent_(limits.max_exponent) {
  emit_postfix(e, [&](const Expr& node) {
    switch (node.kind) {
      case Expr::Kind::Literal:
        code_.push_back({Op::Push, 0, node.value});
        break;
      case Expr::Kind::Variable: {
        const auto it =
            std::find(slot_names.begin(), slot_names.end(), node.name);
        if (it == slot_names.end()) {
          throw ParseError(ErrorKind::UndeclaredIdentifier,
                           "identifier '" + node.name + "' has no slot",
                           node.pos);
        }
        code_.push_back(
            {Op::Load, static_cast<std::uint32_t>(it - slot_names.begin()), 0});
        break;
      }
      case Expr::Kind::Neg: code_.push_back({Op::Neg, 0, 0}); break;
      case Expr::Kind::Add: code_.push_back({Op::Add, 0, 0}); break;
      case Expr::Kind::Sub: code_.push_back({Op::Sub, 0, 0}); break;
      case Expr::Kind::Mul: code_.push_back({Op::Mul, 0, 0}); break;
      case Expr::Kind::Pow: code_.push_back({Op::Pow, 0, 0}); break;
    }
  });
}

BigInt CompiledExpr::evaluate(std::span<const BigInt> slots) const {
  std::vector<BigInt> stack;
  return evaluate(slots, stack);
}

BigInt CompiledExpr::evaluate(std::span<const BigInt> slots,
                              std::vector<BigInt>& stack) const {
  stack.clear();
  for (const Instr& in : code_) {
    switch (in.op) {
      case Op::Push:
        stack.push_back(in.constant);
        break;
      case Op::Load:
        stack.push_back(slots[in.slot]);
        break;
      case Op::Neg:
        stack.back() = -stack.back();
        break;
      case Op::Add:
      case Op::Sub:
      case Op::Mul:
      case Op::Pow: {
        BigInt rhs = std::move(stack.back());
        stack.pop_back();
        BigInt& lhs = stack.back();
        if (in.op == Op::Add) {
          lhs += rhs;
        } else if (in.op == Op::Sub) {
          lhs -= rhs;
        } else if (in.op == Op::Mul) {
          lhs *= rhs;
        } else {
          if (rhs < 0) {
            throw Error(ErrorKind::NegativeExponent,
                        "exponent evaluated to " + to_decimal(rhs));
          }
          if (rhs > max_exponent_ && lhs != 0 && lhs != 1 && lhs != -1) {
            throw Error(ErrorKind::ResourceGuard,
                        "exponent " + to_decimal(rhs) + " exceeds the cap");
          }
          if (lhs == 0 || lhs == 1) {
            if (rhs == 0) lhs = 1;
          } else if (lhs == -1) {
            if (!boost::multiprecision::bit_test(rhs, 0)) lhs = 1;
          } else {
            lhs = ipow(lhs, rhs.convert_to<unsigned>());
          }
        }
        break;
      }
    }
  }
  return std::move(stack.back());
}

}  // namespace omega::dio
