#include "qra/script/parser.hpp"

#include <charconv>

#include "qra/script/lexer.hpp"

namespace gascript {

ExprPtr Expr::make_number(double v, SourcePos pos) {
  auto e = std::make_unique<Expr>();
  e->kind = Kind::kNumber;
  e->pos = pos;
  e->number = v;
  return e;
}

ExprPtr Expr::make_identifier(std::string name, SourcePos pos) {
  auto e = std::make_unique<Expr>();
  e->kind = Kind::kIdentifier;
  e->pos = pos;
  e->name = std::move(name);
  return e;
}

ExprPtr Expr::make_negate(ExprPtr operand, SourcePos pos) {
  auto e = std::make_unique<Expr>();
  e->kind = Kind::kNegate;
  e->pos = pos;
  e->lhs = std::move(operand);
  return e;
}

ExprPtr Expr::make_binary(char op, ExprPtr lhs, ExprPtr rhs, SourcePos pos) {
  auto e = std::make_unique<Expr>();
  e->kind = Kind::kBinary;
  e->pos = pos;
  e->op = op;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

namespace {

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Script parse() {
    Script script;
    while (!at(TokenKind::kEnd)) {
      script.statements.push_back(parse_statement());
    }
    return script;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at(TokenKind k) const { return peek().kind == k; }

  Token take() { return tokens_[pos_++]; }

  Token expect(TokenKind k) {
    if (!at(k)) {
      throw ScriptError(peek().pos, std::string("expected ") + token_kind_name(k) +
                                        ", found " + token_kind_name(peek().kind));
    }
    return take();
  }

  Statement parse_statement() {
    Statement st;
    st.pos = peek().pos;
    if (at(TokenKind::kQuestion)) {
      take();
      st.output = true;
    }
    st.target = expect(TokenKind::kIdentifier).text;
    expect(TokenKind::kAssign);
    st.value = parse_expr();
    expect(TokenKind::kSemicolon);
    return st;
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_mul();
    while (at(TokenKind::kPlus) || at(TokenKind::kMinus)) {
      const Token op = take();
      ExprPtr rhs = parse_mul();
      lhs = Expr::make_binary(op.kind == TokenKind::kPlus ? '+' : '-',
                              std::move(lhs), std::move(rhs), op.pos);
    }
    return lhs;
  }

  ExprPtr parse_mul() {
    ExprPtr lhs = parse_unary();
    while (at(TokenKind::kStar) || at(TokenKind::kWedge)) {
      const Token op = take();
      ExprPtr rhs = parse_unary();
      lhs = Expr::make_binary(op.kind == TokenKind::kStar ? '*' : '^',
                              std::move(lhs), std::move(rhs), op.pos);
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (at(TokenKind::kMinus)) {
      const Token op = take();
      return Expr::make_negate(parse_unary(), op.pos);
    }
    return parse_primary();
  }

  ExprPtr parse_primary() {
    if (at(TokenKind::kNumber)) {
      const Token tok = take();
      double value = 0.0;
      const char* begin = tok.text.data();
      const char* end = begin + tok.text.size();
      auto [ptr, ec] = std::from_chars(begin, end, value);
      if (ec != std::errc{} || ptr != end) {
        throw ScriptError(tok.pos, "malformed number: " + tok.text);
      }
      return Expr::make_number(value, tok.pos);
    }
    if (at(TokenKind::kIdentifier)) {
      const Token tok = take();
      return Expr::make_identifier(tok.text, tok.pos);
    }
    if (at(TokenKind::kLParen)) {
      take();
      ExprPtr inner = parse_expr();
      expect(TokenKind::kRParen);
      return inner;
    }
    throw ScriptError(peek().pos, std::string("expected an expression, found ") +
                                      token_kind_name(peek().kind));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Script parse_script(std::string_view source) {
  return Parser(tokenize(source)).parse();
}

}  // namespace gascript
