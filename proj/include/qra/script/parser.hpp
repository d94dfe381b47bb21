#pragma once

#include <string_view>

#include "qra/script/ast.hpp"

namespace gascript {

// Grammar:
//   script    := statement*
//   statement := '?'? identifier '=' expr ';'
//   expr      := mul (('+' | '-') mul)*
//   mul       := unary (('*' | '^') unary)*
//   unary     := '-' unary | primary
//   primary   := number | identifier | '(' expr ')'
// Throws ScriptError with the offending position.
Script parse_script(std::string_view source);

}  // namespace gascript
