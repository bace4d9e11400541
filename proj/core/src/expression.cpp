#include "swaf/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "swaf/errors.hpp"

namespace swaf {

namespace {

enum class Op {
  push_const,
  push_var,
  add,
  sub,
  mul,
  div,
  pow,
  neg,
  sin,
  cos,
  tan,
  asin,
  acos,
  atan,
  exp,
  log,
  sqrt,
  abs,
  min,
  max,
};

struct Instruction {
  Op op;
  double value = 0.0;
  std::size_t index = 0;
};

struct Program {
  std::vector<Instruction> code;
  std::size_t max_depth = 0;

  double run(std::span<const double> x) const {
    std::vector<double> stack;
    stack.reserve(max_depth);
    auto pop = [&stack] {
      const double v = stack.back();
      stack.pop_back();
      return v;
    };
    for (const auto& ins : code) {
      switch (ins.op) {
        case Op::push_const: stack.push_back(ins.value); break;
        case Op::push_var: stack.push_back(x[ins.index]); break;
        case Op::neg: stack.back() = -stack.back(); break;
        case Op::sin: stack.back() = std::sin(stack.back()); break;
        case Op::cos: stack.back() = std::cos(stack.back()); break;
        case Op::tan: stack.back() = std::tan(stack.back()); break;
        case Op::asin: stack.back() = std::asin(stack.back()); break;
        case Op::acos: stack.back() = std::acos(stack.back()); break;
        case Op::atan: stack.back() = std::atan(stack.back()); break;
        case Op::exp: stack.back() = std::exp(stack.back()); break;
        case Op::log: stack.back() = std::log(stack.back()); break;
        case Op::sqrt: stack.back() = std::sqrt(stack.back()); break;
        case Op::abs: stack.back() = std::abs(stack.back()); break;
        default: {
          const double rhs = pop();
          double& lhs = stack.back();
          switch (ins.op) {
            case Op::add: lhs += rhs; break;
            case Op::sub: lhs -= rhs; break;
            case Op::mul: lhs *= rhs; break;
            case Op::div: lhs /= rhs; break;
            case Op::pow: lhs = std::pow(lhs, rhs); break;
            case Op::min: lhs = std::fmin(lhs, rhs); break;
            case Op::max: lhs = std::fmax(lhs, rhs); break;
            default: break;
          }
        }
      }
    }
    return stack.back();
  }
};

struct FunctionInfo {
  std::string_view name;
  Op op;
  int arity;
};

constexpr FunctionInfo kFunctions[] = {
    {"sin", Op::sin, 1},   {"cos", Op::cos, 1},   {"tan", Op::tan, 1},
    {"asin", Op::asin, 1}, {"acos", Op::acos, 1}, {"atan", Op::atan, 1},
    {"exp", Op::exp, 1},   {"log", Op::log, 1},   {"sqrt", Op::sqrt, 1},
    {"abs", Op::abs, 1},   {"pow", Op::pow, 2},   {"min", Op::min, 2},
    {"max", Op::max, 2},
};

class Parser {
 public:
  Parser(std::string_view src, std::size_t dimension) : src_(src), dimension_(dimension) {}

  Program parse() {
    expression();
    skip_space();
    if (pos_ != src_.size()) {
      fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    }
    if (prog_.code.empty()) {
      fail("empty expression");
    }
    return std::move(prog_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("expression column " + std::to_string(pos_ + 1) + ": " + what + " in '" +
                      std::string(src_) + "'");
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'");
    }
  }

  void emit(Op op, int stack_delta, double value = 0.0, std::size_t index = 0) {
    prog_.code.push_back({op, value, index});
    depth_ += stack_delta;
    prog_.max_depth = std::max(prog_.max_depth, static_cast<std::size_t>(depth_));
  }

  void expression() {
    term();
    for (;;) {
      if (accept('+')) {
        term();
        emit(Op::add, -1);
      } else if (accept('-')) {
        term();
        emit(Op::sub, -1);
      } else {
        return;
      }
    }
  }

  void term() {
    unary();
    for (;;) {
      if (accept('*')) {
        unary();
        emit(Op::mul, -1);
      } else if (accept('/')) {
        unary();
        emit(Op::div, -1);
      } else {
        return;
      }
    }
  }

  void unary() {
    if (accept('-')) {
      unary();
      emit(Op::neg, 0);
    } else if (accept('+')) {
      unary();
    } else {
      power();
    }
  }

  void power() {
    primary();
    if (accept('^')) {
      unary();
      emit(Op::pow, -1);
    }
  }

  void primary() {
    skip_space();
    if (pos_ >= src_.size()) {
      fail("unexpected end of input");
    }
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      expression();
      expect(')');
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      number();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      identifier();
      return;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  void number() {
    double value = 0.0;
    const char* first = src_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, src_.data() + src_.size(), value);
    if (ec != std::errc()) {
      fail("malformed number");
    }
    pos_ += static_cast<std::size_t>(ptr - first);
    emit(Op::push_const, +1, value);
  }

  void identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = src_.substr(start, pos_ - start);

    if (name == "pi") {
      emit(Op::push_const, +1, std::numbers::pi);
      return;
    }
    if (name == "e") {
      emit(Op::push_const, +1, std::numbers::e);
      return;
    }
    if (name.size() > 1 && name[0] == 'x') {
      std::size_t index = 0;
      const auto digits = name.substr(1);
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
      if (ec == std::errc() && ptr == digits.data() + digits.size()) {
        if (index < 1 || index > dimension_) {
          pos_ = start;
          fail("variable '" + std::string(name) + "' outside x1..x" + std::to_string(dimension_));
        }
        emit(Op::push_var, +1, 0.0, index - 1);
        return;
      }
    }
    for (const auto& fn : kFunctions) {
      if (fn.name == name) {
        expect('(');
        expression();
        for (int a = 1; a < fn.arity; ++a) {
          expect(',');
          expression();
        }
        expect(')');
        emit(fn.op, 1 - fn.arity);
        return;
      }
    }
    pos_ = start;
    fail("unknown identifier '" + std::string(name) + "'");
  }

  std::string_view src_;
  std::size_t dimension_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  Program prog_;
};

}  // namespace

ScalarField compile_expression(std::string_view source, std::size_t dimension) {
  auto program = std::make_shared<const Program>(Parser(source, dimension).parse());
  return [program](std::span<const double> x) { return program->run(x); };
}

}  // namespace swaf
