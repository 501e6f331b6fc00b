#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "omega/dio/family.hpp"
#include "omega/error.hpp"
#include "omega/limits.hpp"

namespace omega::dio {

namespace {

// Recursive descent over
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?
//   primary := integer | identifier | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ErrorKind::SyntaxError, what, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = add(lhs, term(), at);
      } else if (accept('-')) {
        lhs = sub(lhs, term(), at);
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (!accept('*')) return lhs;
      lhs = mul(lhs, unary(), at);
    }
  }

  ExprPtr unary() {
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) return neg(unary(), at);
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    skip_space();
    const std::size_t at = pos_;
    if (accept('^')) return pow(base, unary(), at);
    return base;
  }

  ExprPtr primary() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      return literal(BigInt(std::string(text_.substr(at, pos_ - at))), at);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
      }
      return variable(std::string(text_.substr(at, pos_ - at)), at);
    }
    if (accept('(')) {
      ExprPtr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Constant folding for exponent checks only.
BigInt fold(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Literal: return e.value;
    case Expr::Kind::Neg: return -fold(*e.lhs);
    case Expr::Kind::Add: return fold(*e.lhs) + fold(*e.rhs);
    case Expr::Kind::Sub: return fold(*e.lhs) - fold(*e.rhs);
    case Expr::Kind::Mul: return fold(*e.lhs) * fold(*e.rhs);
    case Expr::Kind::Pow: {
      const BigInt x = fold(*e.rhs);
      if (x < 0) {
        throw ParseError(ErrorKind::NegativeExponent,
                         "exponent evaluates to " + to_decimal(x), e.rhs->pos);
      }
      if (x > default_limits().max_exponent) {
        throw Error(ErrorKind::ResourceGuard, "constant exponent too large");
      }
      return ipow(fold(*e.lhs), x.convert_to<unsigned>());
    }
    case Expr::Kind::Variable: break;
  }
  return 0;
}

const Expr* find_subtraction(const Expr& e) {
  if (e.kind == Expr::Kind::Neg || e.kind == Expr::Kind::Sub) return &e;
  if (e.lhs)
    if (const Expr* hit = find_subtraction(*e.lhs)) return hit;
  if (e.rhs)
    if (const Expr* hit = find_subtraction(*e.rhs)) return hit;
  return nullptr;
}

void check_exponents(const Expr& e) {
  if (e.lhs) check_exponents(*e.lhs);
  if (e.rhs) check_exponents(*e.rhs);
  if (e.kind != Expr::Kind::Pow) return;
  const Expr& exponent = *e.rhs;
  if (is_constant(exponent)) {
    const BigInt x = fold(exponent);
    if (x < 0) {
      throw ParseError(ErrorKind::NegativeExponent,
                       "exponent evaluates to " + to_decimal(x), exponent.pos);
    }
    return;
  }
  if (const Expr* hit = find_subtraction(exponent)) {
    throw ParseError(ErrorKind::NegativeExponent,
                     "negative constants are not allowed in exponents",
                     hit->pos);
  }
}

bool exponent_mentions_variable(const Expr& e) {
  if (e.kind == Expr::Kind::Pow && !is_constant(*e.rhs)) return true;
  if (e.lhs && exponent_mentions_variable(*e.lhs)) return true;
  if (e.rhs && exponent_mentions_variable(*e.rhs)) return true;
  return false;
}

bool is_indexed_unknown(std::string_view name) {
  return name.size() >= 2 && name[0] == 'x' &&
         std::all_of(name.begin() + 1, name.end(), [](char c) {
           return std::isdigit(static_cast<unsigned char>(c));
         });
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_names(std::string_view list) {
  std::vector<std::string> out;
  std::string current;
  std::istringstream in{std::string(list)};
  while (std::getline(in, current, ',')) {
    std::string name = trim(current);
    if (!name.empty()) out.push_back(std::move(name));
  }
  return out;
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  return out;
}

}  // namespace

bool Family::exponential() const { return exponent_mentions_variable(*expr); }

bool Family::has_param(std::string_view name) const {
  return std::find(params.begin(), params.end(), name) != params.end();
}

bool Family::has_unknown(std::string_view name) const {
  return std::find(unknowns.begin(), unknowns.end(), name) != unknowns.end();
}

std::string Family::to_text() const {
  return "params: " + join(params) + "\nunknowns: " + join(unknowns) + "\n" +
         to_string(*expr) + "\n";
}

ExprPtr parse_expression(std::string_view text) {
  ExprPtr e = Parser(text).parse();
  check_exponents(*e);
  return e;
}

Family parse_family(std::string_view text) {
  std::optional<std::vector<std::string>> params;
  std::optional<std::vector<std::string>> unknowns;
  std::string body;

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (body.empty() && t.rfind("params:", 0) == 0) {
      params = split_names(std::string_view(t).substr(7));
    } else if (body.empty() && t.rfind("unknowns:", 0) == 0) {
      unknowns = split_names(std::string_view(t).substr(9));
    } else {
      if (!body.empty()) body += ' ';
      body += t;
    }
  }

  Family family;
  family.expr = parse_expression(body);
  const std::vector<std::string> used = identifiers(*family.expr);

  if (!params && !unknowns) {
    for (const auto& name : used) {
      (is_indexed_unknown(name) ? family.unknowns : family.params)
          .push_back(name);
    }
    std::sort(family.unknowns.begin(), family.unknowns.end(),
              [](const std::string& a, const std::string& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a < b;
              });
    return family;
  }

  family.params = params.value_or(std::vector<std::string>{});
  family.unknowns = unknowns.value_or(std::vector<std::string>{});
  std::vector<std::string> declared = family.params;
  declared.insert(declared.end(), family.unknowns.begin(),
                  family.unknowns.end());
  std::vector<std::string> sorted = declared;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::InvalidArgument, "identifier declared twice");
  }
  for (const auto& name : used) {
    if (std::find(declared.begin(), declared.end(), name) == declared.end()) {
      throw Error(ErrorKind::UndeclaredIdentifier,
                  "identifier '" + name + "' is not declared");
    }
  }
  return family;
}

Family load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::InvalidArgument, "cannot open family file " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_family(buffer.str());
}

}  // namespace omega::dio
