// Lexer for .psc sources. Produces a token vector with 1-based spans.
// Identifiers keep their text; string literals are decoded (escape handling
// for "..." forms, verbatim for triple-quoted """...""" forms).
#pragma once

#include <map>
#include <string>
#include <vector>

#include "pscv/token.hpp"

namespace pscv {

namespace detail {
inline const std::map<std::string, Tok>& keyword_table() {
  static const std::map<std::string, Tok> table = {
      {"sealed", Tok::KwSealed},     {"abstract", Tok::KwAbstract},
      {"class", Tok::KwClass},       {"case", Tok::KwCase},
      {"def", Tok::KwDef},           {"extends", Tok::KwExtends},
      {"match", Tok::KwMatch},       {"if", Tok::KwIf},
      {"else", Tok::KwElse},         {"val", Tok::KwVal},
      {"true", Tok::KwTrue},         {"false", Tok::KwFalse},
      {"require", Tok::KwRequire},   {"ensuring", Tok::KwEnsuring},
  };
  return table;
}
}  // namespace detail

class Lexer {
 public:
  Lexer(std::string source, std::string file)
      : src_(std::move(source)), file_(std::move(file)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      if (eof()) {
        out.push_back(Token{Tok::Eof, "", here(1)});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  std::string src_;
  std::string file_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;

  bool eof() const { return pos_ >= src_.size(); }
  char peek(size_t k = 0) const {
    return pos_ + k < src_.size() ? src_[pos_ + k] : '\0';
  }
  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  SourceSpan here(int len) const { return SourceSpan{file_, line_, col_, len}; }

  [[noreturn]] void fail(const std::string& msg, SourceSpan span) const {
    throw CompileError("lex", msg, std::move(span));
  }

  void skip_trivia() {
    for (;;) {
      if (eof()) return;
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (!eof() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        SourceSpan start = here(2);
        advance();
        advance();
        for (;;) {
          if (eof()) fail("unterminated block comment", start);
          if (peek() == '*' && peek(1) == '/') {
            advance();
            advance();
            break;
          }
          advance();
        }
      } else {
        return;
      }
    }
  }

  static bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static bool ident_char(char c) {
    return ident_start(c) || (c >= '0' && c <= '9');
  }

  Token next() {
    SourceSpan start = here(1);
    char c = peek();

    if (ident_start(c)) {
      std::string text;
      while (!eof() && ident_char(peek())) text += advance();
      start.length = static_cast<int>(text.size());
      auto it = detail::keyword_table().find(text);
      if (it != detail::keyword_table().end())
        return Token{it->second, text, start};
      return Token{Tok::Ident, text, start};
    }

    if (c >= '0' && c <= '9') {
      std::string digits;
      while (!eof() && peek() >= '0' && peek() <= '9') digits += advance();
      start.length = static_cast<int>(digits.size());
      return Token{Tok::IntLit, digits, start};
    }

    if (c == '"') return lex_string(start);

    advance();
    auto two = [&](char second, Tok yes, Tok no) {
      if (peek() == second) {
        advance();
        start.length = 2;
        return Token{yes, "", start};
      }
      return Token{no, "", start};
    };

    switch (c) {
      case '(': return Token{Tok::LParen, "", start};
      case ')': return Token{Tok::RParen, "", start};
      case '[': return Token{Tok::LBracket, "", start};
      case ']': return Token{Tok::RBracket, "", start};
      case '{': return Token{Tok::LBrace, "", start};
      case '}': return Token{Tok::RBrace, "", start};
      case ',': return Token{Tok::Comma, "", start};
      case ':': return Token{Tok::Colon, "", start};
      case ';': return Token{Tok::Semi, "", start};
      case '.': return Token{Tok::Dot, "", start};
      case '@': return Token{Tok::At, "", start};
      case '+': return Token{Tok::Plus, "", start};
      case '-': return Token{Tok::Minus, "", start};
      case '*': return Token{Tok::Star, "", start};
      case '!': return Token{Tok::Bang, "", start};
      case '=':
        if (peek() == '=') {
          advance();
          start.length = 2;
          return Token{Tok::EqEq, "", start};
        }
        if (peek() == '>') {
          advance();
          start.length = 2;
          return Token{Tok::Arrow, "", start};
        }
        return Token{Tok::Assign, "", start};
      case '<': return two('=', Tok::Le, Tok::Lt);
      case '>': return two('=', Tok::Ge, Tok::Gt);
      case '&':
        if (peek() == '&') {
          advance();
          start.length = 2;
          return Token{Tok::AndAnd, "", start};
        }
        fail("illegal character '&' (did you mean '&&'?)", start);
      case '|':
        if (peek() == '|') {
          advance();
          start.length = 2;
          return Token{Tok::OrOr, "", start};
        }
        fail("illegal character '|' (did you mean '||'?)", start);
      default:
        fail(std::string("illegal character '") + c + "'", start);
    }
  }

  Token lex_string(SourceSpan start) {
    // Triple-quoted raw string?
    if (peek(1) == '"' && peek(2) == '"') {
      advance();
      advance();
      advance();
      std::string text;
      for (;;) {
        if (eof()) fail("unterminated string literal", start);
        if (peek() == '"' && peek(1) == '"' && peek(2) == '"') {
          advance();
          advance();
          advance();
          break;
        }
        text += advance();
      }
      return Token{Tok::StringLit, text, start};
    }
    advance();  // opening quote
    std::string text;
    for (;;) {
      if (eof() || peek() == '\n') fail("unterminated string literal", start);
      char c = advance();
      if (c == '"') break;
      if (c == '\\') {
        if (eof()) fail("unterminated string literal", start);
        char e = advance();
        switch (e) {
          case 'n': text += '\n'; break;
          case 't': text += '\t'; break;
          case '\\': text += '\\'; break;
          case '"': text += '"'; break;
          default: fail(std::string("unknown escape '\\") + e + "'", start);
        }
      } else {
        text += c;
      }
    }
    return Token{Tok::StringLit, text, start};
  }
};

inline std::vector<Token> tokenize(const std::string& source,
                                   const std::string& file = "<input>") {
  return Lexer(source, file).run();
}

}  // namespace pscv
