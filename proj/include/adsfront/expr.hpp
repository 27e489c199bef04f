#pragma once

// Closed-form expressions in the variables s and t: parser, evaluator,
// exact symbolic differentiation, printer, and a flat tape for fast
// repeated evaluation.
//
// Grammar (authoritative):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | power
//   power  := atom ('^' number)?
//   atom   := number | 's' | 't' | ident '(' expr ')' | '(' expr ')'
// Numbers are decimal literals with an optional exponent part. '^' takes a
// literal exponent only. No implicit multiplication.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "adsfront/errors.hpp"

namespace adsfront::expr {

class SyntaxError : public Error {
public:
  SyntaxError(const std::string& msg, std::size_t offset)
      : Error(msg + " (at byte " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

class UnknownFunctionError : public SyntaxError {
public:
  UnknownFunctionError(const std::string& name, std::size_t offset)
      : SyntaxError("unknown function '" + name + "'", offset) {}
};

class UnknownVariableError : public SyntaxError {
public:
  UnknownVariableError(const std::string& name, std::size_t offset)
      : SyntaxError("unknown variable '" + name + "' (only s and t)",
                    offset) {}
};

class DomainError : public Error {
public:
  DomainError(const std::string& msg) : Error(msg) {}
};

enum class Var : std::uint8_t { S, T };
enum class BinOp : std::uint8_t { Add, Sub, Mul, Div };
enum class Func : std::uint8_t {
  Sin, Cos, Tan, Sinh, Cosh, Tanh, Exp, Log, Sqrt
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable AST node.
struct Expr {
  enum class Kind : std::uint8_t {
    Constant, Variable, Neg, Binary, Pow, Call
  };
  Kind kind;
  double constant = 0.0;   // Constant value, or Pow exponent
  Var var = Var::S;        // Variable
  BinOp op = BinOp::Add;   // Binary
  Func func = Func::Sin;   // Call
  ExprPtr a, b;            // children (Neg/Pow/Call use a only)
};

ExprPtr parse(const std::string& text);
double eval(const ExprPtr& e, double s, double t);
ExprPtr differentiate(const ExprPtr& e, Var v);
std::string to_string(const ExprPtr& e);

// Simplifying constructors (constant folding, 0/1 identities).
ExprPtr make_constant(double v);
ExprPtr make_variable(Var v);
ExprPtr make_neg(ExprPtr a);
ExprPtr make_binary(BinOp op, ExprPtr a, ExprPtr b);
ExprPtr make_pow(ExprPtr a, double exponent);
ExprPtr make_call(Func f, ExprPtr a);

// Flat postfix program compiled from an AST. Evaluation is a tight stack
// loop with no pointer chasing; domain violations surface as NaN rather
// than exceptions (callers check finiteness).
class Tape {
public:
  Tape() = default;
  explicit Tape(const ExprPtr& e);

  double eval(double s, double t) const;
  std::size_t size() const { return code_.size(); }

private:
  struct Instr {
    std::uint8_t op;
    double imm;
  };
  std::vector<Instr> code_;
  std::size_t stack_need_ = 0;
};

}  // namespace adsfront::expr
