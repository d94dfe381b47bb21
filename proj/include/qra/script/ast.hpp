#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qra/script/diagnostics.hpp"

namespace gascript {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  enum class Kind { kNumber, kIdentifier, kNegate, kBinary };

  Kind kind;
  SourcePos pos;
  double number = 0.0;   // kNumber
  std::string name;      // kIdentifier
  char op = 0;           // kBinary: '+', '-', '*', '^'
  ExprPtr lhs;           // kNegate operand / kBinary left
  ExprPtr rhs;           // kBinary right

  static ExprPtr make_number(double v, SourcePos pos);
  static ExprPtr make_identifier(std::string name, SourcePos pos);
  static ExprPtr make_negate(ExprPtr operand, SourcePos pos);
  static ExprPtr make_binary(char op, ExprPtr lhs, ExprPtr rhs, SourcePos pos);
};

struct Statement {
  bool output = false;  // '?' prefix
  std::string target;
  ExprPtr value;
  SourcePos pos;
};

struct Script {
  std::vector<Statement> statements;
};

}  // namespace gascript
