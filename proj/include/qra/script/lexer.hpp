#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qra/script/diagnostics.hpp"

namespace gascript {

enum class TokenKind {
  kIdentifier,
  kNumber,
  kAssign,    // =
  kQuestion,  // ?
  kPlus,
  kMinus,
  kStar,
  kWedge,  // ^
  kLParen,
  kRParen,
  kSemicolon,
  kEnd,
};

struct Token {
  TokenKind kind;
  std::string text;
  SourcePos pos;
};

// Splits source into tokens; "//" comments run to end of line. Numbers are
// plain decimals with an optional fraction, identifiers are
// [A-Za-z][A-Za-z0-9_]*. Ends with a kEnd token.
std::vector<Token> tokenize(std::string_view source);

const char* token_kind_name(TokenKind kind);

}  // namespace gascript
