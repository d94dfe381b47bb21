#include "qra/script/lexer.hpp"

#include <cctype>

namespace gascript {
namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

}  // namespace

const char* token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdentifier: return "identifier";
    case TokenKind::kNumber: return "number";
    case TokenKind::kAssign: return "'='";
    case TokenKind::kQuestion: return "'?'";
    case TokenKind::kPlus: return "'+'";
    case TokenKind::kMinus: return "'-'";
    case TokenKind::kStar: return "'*'";
    case TokenKind::kWedge: return "'^'";
    case TokenKind::kLParen: return "'('";
    case TokenKind::kRParen: return "')'";
    case TokenKind::kSemicolon: return "';'";
    case TokenKind::kEnd: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  SourcePos pos;

  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
      if (source[i] == '\n') {
        ++pos.line;
        pos.col = 1;
      } else {
        ++pos.col;
      }
      ++i;
    }
  };

  while (i < source.size()) {
    const char c = source[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < source.size() && source[i + 1] == '/') {
      while (i < source.size() && source[i] != '\n') advance(1);
      continue;
    }

    const SourcePos start = pos;
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < source.size() && is_ident_char(source[j])) ++j;
      tokens.push_back({TokenKind::kIdentifier, std::string(source.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (is_digit(c)) {
      std::size_t j = i;
      while (j < source.size() && is_digit(source[j])) ++j;
      if (j < source.size() && source[j] == '.') {
        if (j + 1 >= source.size() || !is_digit(source[j + 1])) {
          throw ScriptError(start, "malformed number: digit expected after '.'");
        }
        ++j;
        while (j < source.size() && is_digit(source[j])) ++j;
      }
      tokens.push_back({TokenKind::kNumber, std::string(source.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }

    TokenKind kind;
    switch (c) {
      case '=': kind = TokenKind::kAssign; break;
      case '?': kind = TokenKind::kQuestion; break;
      case '+': kind = TokenKind::kPlus; break;
      case '-': kind = TokenKind::kMinus; break;
      case '*': kind = TokenKind::kStar; break;
      case '^': kind = TokenKind::kWedge; break;
      case '(': kind = TokenKind::kLParen; break;
      case ')': kind = TokenKind::kRParen; break;
      case ';': kind = TokenKind::kSemicolon; break;
      default:
        throw ScriptError(start, std::string("unexpected character '") + c + "'");
    }
    tokens.push_back({kind, std::string(1, c), start});
    advance(1);
  }

  tokens.push_back({TokenKind::kEnd, "", pos});
  return tokens;
}

}  // namespace gascript
