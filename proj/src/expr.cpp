#include "adsfront/expr.hpp"

#include <cassert>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>

namespace adsfront::expr {

namespace {

bool is_const(const ExprPtr& e, double v) {
  return e->kind == Expr::Kind::Constant && e->constant == v;
}

}  // namespace

ExprPtr make_constant(double v) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Constant;
  e->constant = v;
  return e;
}

ExprPtr make_variable(Var v) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Variable;
  e->var = v;
  return e;
}

ExprPtr make_neg(ExprPtr a) {
  if (a->kind == Expr::Kind::Constant) return make_constant(-a->constant);
  if (a->kind == Expr::Kind::Neg) return a->a;
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Neg;
  e->a = std::move(a);
  return e;
}

ExprPtr make_binary(BinOp op, ExprPtr a, ExprPtr b) {
  if (a->kind == Expr::Kind::Constant && b->kind == Expr::Kind::Constant) {
    switch (op) {
      case BinOp::Add: return make_constant(a->constant + b->constant);
      case BinOp::Sub: return make_constant(a->constant - b->constant);
      case BinOp::Mul: return make_constant(a->constant * b->constant);
      case BinOp::Div:
        if (b->constant != 0.0)
          return make_constant(a->constant / b->constant);
        break;
    }
  }
  switch (op) {
    case BinOp::Add:
      if (is_const(a, 0.0)) return b;
      if (is_const(b, 0.0)) return a;
      break;
    case BinOp::Sub:
      if (is_const(b, 0.0)) return a;
      if (is_const(a, 0.0)) return make_neg(b);
      break;
    case BinOp::Mul:
      if (is_const(a, 0.0) || is_const(b, 0.0)) return make_constant(0.0);
      if (is_const(a, 1.0)) return b;
      if (is_const(b, 1.0)) return a;
      if (is_const(a, -1.0)) return make_neg(b);
      if (is_const(b, -1.0)) return make_neg(a);
      break;
    case BinOp::Div:
      if (is_const(a, 0.0)) return make_constant(0.0);
      if (is_const(b, 1.0)) return a;
      break;
  }
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Binary;
  e->op = op;
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}

ExprPtr make_pow(ExprPtr a, double exponent) {
  if (exponent == 0.0) return make_constant(1.0);
  if (exponent == 1.0) return a;
  if (a->kind == Expr::Kind::Constant)
    return make_constant(std::pow(a->constant, exponent));
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Pow;
  e->constant = exponent;
  e->a = std::move(a);
  return e;
}

ExprPtr make_call(Func f, ExprPtr a) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Call;
  e->func = f;
  e->a = std::move(a);
  return e;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Lexer {
  enum class Tok : std::uint8_t {
    Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End
  };

  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  Tok tok = Tok::End;
  double number = 0.0;
  std::string ident;
  std::size_t tok_offset = 0;

  void advance() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      ++pos_;
    tok_offset = pos_;
    if (pos_ >= text_.size()) {
      tok = Tok::End;
      return;
    }
    const char ch = text_[pos_];
    switch (ch) {
      case '+': tok = Tok::Plus; ++pos_; return;
      case '-': tok = Tok::Minus; ++pos_; return;
      case '*': tok = Tok::Star; ++pos_; return;
      case '/': tok = Tok::Slash; ++pos_; return;
      case '^': tok = Tok::Caret; ++pos_; return;
      case '(': tok = Tok::LParen; ++pos_; return;
      case ')': tok = Tok::RParen; ++pos_; return;
      default: break;
    }
    if ((ch >= '0' && ch <= '9') || ch == '.') {
      lex_number();
      return;
    }
    if ((ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
              (text_[pos_] >= 'A' && text_[pos_] <= 'Z') ||
              (text_[pos_] >= '0' && text_[pos_] <= '9') ||
              text_[pos_] == '_'))
        ++pos_;
      ident = text_.substr(start, pos_ - start);
      tok = Tok::Ident;
      return;
    }
    throw SyntaxError(std::string("unexpected character '") + ch + "'", pos_);
  }

private:
  void lex_number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
      ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
        ++pos_;
    }
    if (pos_ == start + (text_[start] == '.' ? 1u : 0u) && text_[start] == '.')
      throw SyntaxError("malformed number", start);
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t exp_pos = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-'))
        ++pos_;
      if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9')
        throw SyntaxError("malformed exponent in number", exp_pos);
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
        ++pos_;
    }
    const std::string slice = text_.substr(start, pos_ - start);
    char* end = nullptr;
    number = std::strtod(slice.c_str(), &end);
    if (end != slice.c_str() + slice.size())
      throw SyntaxError("malformed number", start);
    tok = Tok::Number;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

struct Parser {
  explicit Parser(const std::string& text) : lex_(text) {}

  ExprPtr parse_all() {
    ExprPtr e = parse_expr();
    if (lex_.tok != Lexer::Tok::End)
      throw SyntaxError("expected operator or end of input", lex_.tok_offset);
    return e;
  }

private:
  using Tok = Lexer::Tok;

  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    while (lex_.tok == Tok::Plus || lex_.tok == Tok::Minus) {
      const BinOp op = lex_.tok == Tok::Plus ? BinOp::Add : BinOp::Sub;
      lex_.advance();
      e = make_binary(op, e, parse_term());
    }
    return e;
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_factor();
    while (lex_.tok == Tok::Star || lex_.tok == Tok::Slash) {
      const BinOp op = lex_.tok == Tok::Star ? BinOp::Mul : BinOp::Div;
      lex_.advance();
      e = make_binary(op, e, parse_factor());
    }
    return e;
  }

  ExprPtr parse_factor() {
    if (lex_.tok == Tok::Minus) {
      lex_.advance();
      return make_neg(parse_factor());
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    if (lex_.tok == Tok::Caret) {
      lex_.advance();
      if (lex_.tok != Tok::Number)
        throw SyntaxError("expected a literal exponent after '^'",
                          lex_.tok_offset);
      const double exponent = lex_.number;
      lex_.advance();
      return make_pow(base, exponent);
    }
    return base;
  }

  ExprPtr parse_atom() {
    switch (lex_.tok) {
      case Tok::Number: {
        const double v = lex_.number;
        lex_.advance();
        return make_constant(v);
      }
      case Tok::Ident: {
        const std::string name = lex_.ident;
        const std::size_t off = lex_.tok_offset;
        lex_.advance();
        if (lex_.tok == Tok::LParen) {
          const Func f = lookup_function(name, off);
          lex_.advance();
          ExprPtr arg = parse_expr();
          expect(Tok::RParen, "expected ')'");
          return make_call(f, std::move(arg));
        }
        if (name == "s") return make_variable(Var::S);
        if (name == "t") return make_variable(Var::T);
        throw UnknownVariableError(name, off);
      }
      case Tok::LParen: {
        lex_.advance();
        ExprPtr e = parse_expr();
        expect(Tok::RParen, "expected ')'");
        return e;
      }
      default:
        throw SyntaxError("expected a number, variable, function or '('",
                          lex_.tok_offset);
    }
  }

  static Func lookup_function(const std::string& name, std::size_t off) {
    if (name == "sin") return Func::Sin;
    if (name == "cos") return Func::Cos;
    if (name == "tan") return Func::Tan;
    if (name == "sinh") return Func::Sinh;
    if (name == "cosh") return Func::Cosh;
    if (name == "tanh") return Func::Tanh;
    if (name == "exp") return Func::Exp;
    if (name == "log") return Func::Log;
    if (name == "sqrt") return Func::Sqrt;
    throw UnknownFunctionError(name, off);
  }

  void expect(Tok t, const char* what) {
    if (lex_.tok != t) throw SyntaxError(what, lex_.tok_offset);
    lex_.advance();
  }

  Lexer lex_;
};

}  // namespace

ExprPtr parse(const std::string& text) {
  if (text.empty()) throw SyntaxError("empty expression", 0);
  return Parser(text).parse_all();
}

// ---------------------------------------------------------------------------
// Evaluation

double eval(const ExprPtr& e, double s, double t) {
  switch (e->kind) {
    case Expr::Kind::Constant:
      return e->constant;
    case Expr::Kind::Variable:
      return e->var == Var::S ? s : t;
    case Expr::Kind::Neg:
      return -eval(e->a, s, t);
    case Expr::Kind::Binary: {
      const double a = eval(e->a, s, t);
      const double b = eval(e->b, s, t);
      switch (e->op) {
        case BinOp::Add: return a + b;
        case BinOp::Sub: return a - b;
        case BinOp::Mul: return a * b;
        case BinOp::Div:
          if (b == 0.0)
            throw DomainError("division by zero in " + to_string(e));
          return a / b;
      }
      break;
    }
    case Expr::Kind::Pow: {
      const double a = eval(e->a, s, t);
      const double r = std::pow(a, e->constant);
      if (!std::isfinite(r))
        throw DomainError("pow out of domain in " + to_string(e));
      return r;
    }
    case Expr::Kind::Call: {
      const double a = eval(e->a, s, t);
      switch (e->func) {
        case Func::Sin: return std::sin(a);
        case Func::Cos: return std::cos(a);
        case Func::Tan: return std::tan(a);
        case Func::Sinh: return std::sinh(a);
        case Func::Cosh: return std::cosh(a);
        case Func::Tanh: return std::tanh(a);
        case Func::Exp: return std::exp(a);
        case Func::Log:
          if (a <= 0.0)
            throw DomainError("log of non-positive value in " + to_string(e));
          return std::log(a);
        case Func::Sqrt:
          if (a < 0.0)
            throw DomainError("sqrt of negative value in " + to_string(e));
          return std::sqrt(a);
      }
      break;
    }
  }
  throw EvaluationError("corrupt expression node");
}

// ---------------------------------------------------------------------------
// Differentiation

ExprPtr differentiate(const ExprPtr& e, Var v) {
  switch (e->kind) {
    case Expr::Kind::Constant:
      return make_constant(0.0);
    case Expr::Kind::Variable:
      return make_constant(e->var == v ? 1.0 : 0.0);
    case Expr::Kind::Neg:
      return make_neg(differentiate(e->a, v));
    case Expr::Kind::Binary: {
      ExprPtr da = differentiate(e->a, v);
      ExprPtr db = differentiate(e->b, v);
      switch (e->op) {
        case BinOp::Add: return make_binary(BinOp::Add, da, db);
        case BinOp::Sub: return make_binary(BinOp::Sub, da, db);
        case BinOp::Mul:
          return make_binary(BinOp::Add, make_binary(BinOp::Mul, da, e->b),
                             make_binary(BinOp::Mul, e->a, db));
        case BinOp::Div:
          // (a'b - ab') / b^2
          return make_binary(
              BinOp::Div,
              make_binary(BinOp::Sub, make_binary(BinOp::Mul, da, e->b),
                          make_binary(BinOp::Mul, e->a, db)),
              make_pow(e->b, 2.0));
      }
      break;
    }
    case Expr::Kind::Pow: {
      // c * a^(c-1) * a'
      ExprPtr da = differentiate(e->a, v);
      return make_binary(
          BinOp::Mul, make_constant(e->constant),
          make_binary(BinOp::Mul, make_pow(e->a, e->constant - 1.0), da));
    }
    case Expr::Kind::Call: {
      ExprPtr da = differentiate(e->a, v);
      ExprPtr outer;
      switch (e->func) {
        case Func::Sin: outer = make_call(Func::Cos, e->a); break;
        case Func::Cos: outer = make_neg(make_call(Func::Sin, e->a)); break;
        case Func::Tan:
          outer = make_binary(
              BinOp::Add, make_constant(1.0),
              make_pow(make_call(Func::Tan, e->a), 2.0));
          break;
        case Func::Sinh: outer = make_call(Func::Cosh, e->a); break;
        case Func::Cosh: outer = make_call(Func::Sinh, e->a); break;
        case Func::Tanh:
          outer = make_binary(
              BinOp::Sub, make_constant(1.0),
              make_pow(make_call(Func::Tanh, e->a), 2.0));
          break;
        case Func::Exp: outer = make_call(Func::Exp, e->a); break;
        case Func::Log:
          return make_binary(BinOp::Div, da, e->a);
        case Func::Sqrt:
          return make_binary(
              BinOp::Div, da,
              make_binary(BinOp::Mul, make_constant(2.0),
                          make_call(Func::Sqrt, e->a)));
      }
      return make_binary(BinOp::Mul, outer, da);
    }
  }
  throw EvaluationError("corrupt expression node");
}

// ---------------------------------------------------------------------------
// Printing

namespace {

const char* func_name(Func f) {
  switch (f) {
    case Func::Sin: return "sin";
    case Func::Cos: return "cos";
    case Func::Tan: return "tan";
    case Func::Sinh: return "sinh";
    case Func::Cosh: return "cosh";
    case Func::Tanh: return "tanh";
    case Func::Exp: return "exp";
    case Func::Log: return "log";
    case Func::Sqrt: return "sqrt";
  }
  return "?";
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Precedence levels: 0 add/sub, 1 mul/div, 2 unary minus, 3 pow, 4 atoms.
int precedence(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Binary:
      return (e->op == BinOp::Add || e->op == BinOp::Sub) ? 0 : 1;
    case Expr::Kind::Neg: return 2;
    case Expr::Kind::Pow: return 3;
    default: return 4;
  }
}

void print_rec(const ExprPtr& e, int parent_prec, std::string& out) {
  const int prec = precedence(e);
  const bool parens = prec < parent_prec;
  if (parens) out += '(';
  switch (e->kind) {
    case Expr::Kind::Constant: {
      if (e->constant < 0.0) {
        // print as a negation so the result re-lexes
        out += '-';
        out += format_number(-e->constant);
      } else {
        out += format_number(e->constant);
      }
      break;
    }
    case Expr::Kind::Variable:
      out += (e->var == Var::S ? 's' : 't');
      break;
    case Expr::Kind::Neg:
      out += '-';
      print_rec(e->a, 3, out);
      break;
    case Expr::Kind::Binary: {
      const char* sym = nullptr;
      int lp = prec, rp = prec + 1;  // left associative
      switch (e->op) {
        case BinOp::Add: sym = " + "; rp = prec; break;
        case BinOp::Sub: sym = " - "; break;
        case BinOp::Mul: sym = "*"; break;
        case BinOp::Div: sym = "/"; break;
      }
      print_rec(e->a, lp, out);
      out += sym;
      print_rec(e->b, rp, out);
      break;
    }
    case Expr::Kind::Pow:
      print_rec(e->a, 4, out);
      out += '^';
      out += format_number(e->constant);
      break;
    case Expr::Kind::Call:
      out += func_name(e->func);
      out += '(';
      print_rec(e->a, 0, out);
      out += ')';
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const ExprPtr& e) {
  std::string out;
  print_rec(e, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Tape

namespace {

enum TapeOp : std::uint8_t {
  OP_CONST, OP_S, OP_T, OP_ADD, OP_SUB, OP_MUL, OP_DIV, OP_NEG, OP_POW,
  OP_SQ, OP_CUBE, OP_SQRT, OP_SIN, OP_COS, OP_TAN, OP_SINH, OP_COSH,
  OP_TANH, OP_EXP, OP_LOG
};

}  // namespace

Tape::Tape(const ExprPtr& e) {
  // Post-order emission; track stack depth to size the scratch buffer.
  struct Emit {
    std::vector<Instr>& code;
    void rec(const ExprPtr& n) {
      switch (n->kind) {
        case Expr::Kind::Constant:
          code.push_back({OP_CONST, n->constant});
          return;
        case Expr::Kind::Variable:
          code.push_back({n->var == Var::S ? std::uint8_t(OP_S)
                                           : std::uint8_t(OP_T), 0.0});
          return;
        case Expr::Kind::Neg:
          rec(n->a);
          code.push_back({OP_NEG, 0.0});
          return;
        case Expr::Kind::Binary:
          rec(n->a);
          rec(n->b);
          switch (n->op) {
            case BinOp::Add: code.push_back({OP_ADD, 0.0}); return;
            case BinOp::Sub: code.push_back({OP_SUB, 0.0}); return;
            case BinOp::Mul: code.push_back({OP_MUL, 0.0}); return;
            case BinOp::Div: code.push_back({OP_DIV, 0.0}); return;
          }
          return;
        case Expr::Kind::Pow:
          rec(n->a);
          if (n->constant == 2.0)
            code.push_back({OP_SQ, 0.0});
          else if (n->constant == 3.0)
            code.push_back({OP_CUBE, 0.0});
          else if (n->constant == 0.5)
            code.push_back({OP_SQRT, 0.0});
          else
            code.push_back({OP_POW, n->constant});
          return;
        case Expr::Kind::Call: {
          rec(n->a);
          std::uint8_t op = OP_SIN;
          switch (n->func) {
            case Func::Sin: op = OP_SIN; break;
            case Func::Cos: op = OP_COS; break;
            case Func::Tan: op = OP_TAN; break;
            case Func::Sinh: op = OP_SINH; break;
            case Func::Cosh: op = OP_COSH; break;
            case Func::Tanh: op = OP_TANH; break;
            case Func::Exp: op = OP_EXP; break;
            case Func::Log: op = OP_LOG; break;
            case Func::Sqrt: op = OP_SQRT; break;
          }
          code.push_back({op, 0.0});
          return;
        }
      }
    }
  };
  Emit{code_}.rec(e);
  std::size_t depth = 0, peak = 0;
  for (const Instr& ins : code_) {
    if (ins.op <= OP_T)
      ++depth;
    else if (ins.op >= OP_ADD && ins.op <= OP_DIV)
      --depth;
    peak = depth > peak ? depth : peak;
  }
  stack_need_ = peak;
}

double Tape::eval(double s, double t) const {
  double stack[64];
  double* sp = stack;
  assert(stack_need_ < 64);
  for (const Instr& ins : code_) {
    switch (ins.op) {
      case OP_CONST: *sp++ = ins.imm; break;
      case OP_S: *sp++ = s; break;
      case OP_T: *sp++ = t; break;
      case OP_ADD: sp[-2] += sp[-1]; --sp; break;
      case OP_SUB: sp[-2] -= sp[-1]; --sp; break;
      case OP_MUL: sp[-2] *= sp[-1]; --sp; break;
      case OP_DIV: sp[-2] /= sp[-1]; --sp; break;
      case OP_NEG: sp[-1] = -sp[-1]; break;
      case OP_POW: sp[-1] = std::pow(sp[-1], ins.imm); break;
      case OP_SQ: sp[-1] *= sp[-1]; break;
      case OP_CUBE: sp[-1] = sp[-1] * sp[-1] * sp[-1]; break;
      case OP_SQRT: sp[-1] = std::sqrt(sp[-1]); break;
      case OP_SIN: sp[-1] = std::sin(sp[-1]); break;
      case OP_COS: sp[-1] = std::cos(sp[-1]); break;
      case OP_TAN: sp[-1] = std::tan(sp[-1]); break;
      case OP_SINH: sp[-1] = std::sinh(sp[-1]); break;
      case OP_COSH: sp[-1] = std::cosh(sp[-1]); break;
      case OP_TANH: sp[-1] = std::tanh(sp[-1]); break;
      case OP_EXP: sp[-1] = std::exp(sp[-1]); break;
      case OP_LOG: sp[-1] = std::log(sp[-1]); break;
      default: return std::nan("");
    }
  }
  return sp[-1];
}

}  // namespace adsfront::expr
