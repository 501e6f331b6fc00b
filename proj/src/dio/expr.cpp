#include "omega/dio/expr.hpp"

#include <algorithm>

namespace omega::dio {

namespace {

ExprPtr make(Expr::Kind kind, ExprPtr a, ExprPtr b, std::size_t pos) {
  return std::make_shared<const Expr>(
      Expr{kind, 0, {}, std::move(a), std::move(b), pos});
}

// Binding strength used by the printer. Higher binds tighter.
int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    case Expr::Kind::Literal:
    case Expr::Kind::Variable: return 5;
  }
  return 0;
}

void print(const Expr& e, std::string& out);

void print_wrapped(const Expr& e, bool wrap, std::string& out) {
  if (wrap) out += '(';
  print(e, out);
  if (wrap) out += ')';
}

void print(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      out += to_decimal(e.value);
      return;
    case Expr::Kind::Variable:
      out += e.name;
      return;
    case Expr::Kind::Neg:
      out += '-';
      print_wrapped(*e.lhs, precedence(*e.lhs) < 3, out);
      return;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      print_wrapped(*e.lhs, false, out);
      out += e.kind == Expr::Kind::Add ? " + " : " - ";
      print_wrapped(*e.rhs, precedence(*e.rhs) <= 1, out);
      return;
    case Expr::Kind::Mul:
      print_wrapped(*e.lhs, precedence(*e.lhs) < 2, out);
      out += '*';
      print_wrapped(*e.rhs, precedence(*e.rhs) <= 2, out);
      return;
    case Expr::Kind::Pow:
      print_wrapped(*e.lhs, precedence(*e.lhs) <= 4, out);
      out += '^';
      print_wrapped(*e.rhs, precedence(*e.rhs) < 3, out);
      return;
  }
}

void collect(const Expr& e, std::vector<std::string>& names) {
  if (e.kind == Expr::Kind::Variable) {
    if (std::find(names.begin(), names.end(), e.name) == names.end()) {
      names.push_back(e.name);
    }
    return;
  }
  if (e.lhs) collect(*e.lhs, names);
  if (e.rhs) collect(*e.rhs, names);
}

}  // namespace

ExprPtr literal(BigInt value, std::size_t pos) {
  return std::make_shared<const Expr>(
      Expr{Expr::Kind::Literal, std::move(value), {}, nullptr, nullptr, pos});
}

ExprPtr variable(std::string name, std::size_t pos) {
  return std::make_shared<const Expr>(
      Expr{Expr::Kind::Variable, 0, std::move(name), nullptr, nullptr, pos});
}

ExprPtr neg(ExprPtr operand, std::size_t pos) {
  return make(Expr::Kind::Neg, std::move(operand), nullptr, pos);
}
ExprPtr add(ExprPtr a, ExprPtr b, std::size_t pos) {
  return make(Expr::Kind::Add, std::move(a), std::move(b), pos);
}
ExprPtr sub(ExprPtr a, ExprPtr b, std::size_t pos) {
  return make(Expr::Kind::Sub, std::move(a), std::move(b), pos);
}
ExprPtr mul(ExprPtr a, ExprPtr b, std::size_t pos) {
  return make(Expr::Kind::Mul, std::move(a), std::move(b), pos);
}
ExprPtr pow(ExprPtr base, ExprPtr exponent, std::size_t pos) {
  return make(Expr::Kind::Pow, std::move(base), std::move(exponent), pos);
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Literal: return a.value == b.value;
    case Expr::Kind::Variable: return a.name == b.name;
    case Expr::Kind::Neg: return structurally_equal(*a.lhs, *b.lhs);
    default:
      return structurally_equal(*a.lhs, *b.lhs) &&
             structurally_equal(*a.rhs, *b.rhs);
  }
}

std::string to_string(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

std::vector<std::string> identifiers(const Expr& e) {
  std::vector<std::string> names;
  collect(e, names);
  return names;
}

bool is_constant(const Expr& e) {
  if (e.kind == Expr::Kind::Variable) return false;
  if (e.lhs && !is_constant(*e.lhs)) return false;
  if (e.rhs && !is_constant(*e.rhs)) return false;
  return true;
}

ExprPtr rename(const ExprPtr& e, const std::string& from,
               const std::string& to) {
  switch (e->kind) {
    case Expr::Kind::Literal: return e;
    case Expr::Kind::Variable:
      return e->name == from ? variable(to, e->pos) : e;
    case Expr::Kind::Neg: return neg(rename(e->lhs, from, to), e->pos);
    default:
      return make(e->kind, rename(e->lhs, from, to), rename(e->rhs, from, to),
                  e->pos);
  }
}

}  // namespace omega::dio
