#pragma once

#include <string>
#include <vector>

#include "pscv/basics.hpp"

namespace pscv {

enum class Tok {
  Ident,
  IntLit,
  StringLit,
  // keywords
  KwSealed, KwAbstract, KwClass, KwCase, KwDef, KwExtends, KwMatch,
  KwIf, KwElse, KwVal, KwTrue, KwFalse, KwRequire, KwEnsuring,
  // punctuation / operators
  LParen, RParen, LBracket, RBracket, LBrace, RBrace,
  Comma, Colon, Semi, Dot, At, Arrow, Assign,
  EqEq, Le, Lt, Ge, Gt, Plus, Minus, Star, AndAnd, OrOr, Bang,
  Eof,
};

inline const char* tok_str(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::IntLit: return "integer literal";
    case Tok::StringLit: return "string literal";
    case Tok::KwSealed: return "'sealed'";
    case Tok::KwAbstract: return "'abstract'";
    case Tok::KwClass: return "'class'";
    case Tok::KwCase: return "'case'";
    case Tok::KwDef: return "'def'";
    case Tok::KwExtends: return "'extends'";
    case Tok::KwMatch: return "'match'";
    case Tok::KwIf: return "'if'";
    case Tok::KwElse: return "'else'";
    case Tok::KwVal: return "'val'";
    case Tok::KwTrue: return "'true'";
    case Tok::KwFalse: return "'false'";
    case Tok::KwRequire: return "'require'";
    case Tok::KwEnsuring: return "'ensuring'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Semi: return "';'";
    case Tok::Dot: return "'.'";
    case Tok::At: return "'@'";
    case Tok::Arrow: return "'=>'";
    case Tok::Assign: return "'='";
    case Tok::EqEq: return "'=='";
    case Tok::Le: return "'<='";
    case Tok::Lt: return "'<'";
    case Tok::Ge: return "'>='";
    case Tok::Gt: return "'>'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::AndAnd: return "'&&'";
    case Tok::OrOr: return "'||'";
    case Tok::Bang: return "'!'";
    case Tok::Eof: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind = Tok::Eof;
  std::string text;  // identifier text, literal digits, or decoded string payload
  SourceSpan span;
};

}  // namespace pscv
