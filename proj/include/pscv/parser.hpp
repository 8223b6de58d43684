// Recursive-descent parser for .psc sources. The accepted grammar is the
// fixed subset documented in docs/grammar.md: sealed-class datatypes,
// first-order defs with optional require/ensuring/.holds contracts,
// match/if/val expressions, lambdas, tuples, and '_' argument sections.
#pragma once

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pscv/lexer.hpp"
#include "pscv/surface.hpp"

namespace pscv {

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string file)
      : toks_(std::move(tokens)), file_(std::move(file)) {}

  SurfaceProgram parse_program() {
    SurfaceProgram prog;
    prog.file = file_;
    while (!at(Tok::Eof)) {
      if (at(Tok::KwSealed)) {
        parse_datatype(prog);
      } else if (at(Tok::KwCase)) {
        parse_case_class(prog);
      } else if (at(Tok::At) || at(Tok::KwDef)) {
        prog.functions.push_back(parse_fun());
        prog.order.emplace_back(true, prog.functions.size() - 1);
      } else {
        fail("expected 'sealed', 'case class', '@proof', '@library' or 'def'");
      }
    }
    return prog;
  }

 private:
  std::vector<Token> toks_;
  std::string file_;
  size_t pos_ = 0;
  int section_counter_ = 0;

  const Token& peek(size_t k = 0) const {
    size_t i = pos_ + k;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at(Tok t, size_t k = 0) const { return peek(k).kind == t; }
  Token advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok t) {
    if (at(t)) {
      advance();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw CompileError("parse", msg + " (found " + tok_str(peek().kind) + ")",
                       peek().span);
  }
  [[noreturn]] void fail_expected(std::initializer_list<Tok> expected) const {
    std::string msg = "expected ";
    size_t i = 0;
    for (Tok t : expected) {
      if (i++) msg += " or ";
      msg += tok_str(t);
    }
    fail(msg);
  }
  Token expect(Tok t) {
    if (!at(t)) fail_expected({t});
    return advance();
  }

  static bool upper_start(const std::string& s) {
    return !s.empty() && s[0] >= 'A' && s[0] <= 'Z';
  }

  // ----- types ------------------------------------------------------------

  STypePtr parse_type() {
    STypePtr head = parse_simple_type();
    if (accept(Tok::Arrow)) {
      auto fun = mk_stype(STypeK::Fun, head->span);
      if (head->k == STypeK::Tuple) {
        fun->args = head->args;  // (A, B) => R is a 2-ary function type
      } else {
        fun->args.push_back(head);
      }
      fun->args.push_back(parse_type());
      return fun;
    }
    return head;
  }

  STypePtr parse_simple_type() {
    if (at(Tok::LParen)) {
      SourceSpan span = peek().span;
      advance();
      std::vector<STypePtr> elems;
      elems.push_back(parse_type());
      while (accept(Tok::Comma)) elems.push_back(parse_type());
      expect(Tok::RParen);
      if (elems.size() == 1) return elems[0];
      auto t = mk_stype(STypeK::Tuple, span);
      t->args = std::move(elems);
      return t;
    }
    Token id = expect(Tok::Ident);
    auto t = mk_stype(STypeK::Named, id.span);
    t->head = id.text;
    if (accept(Tok::LBracket)) {
      t->args.push_back(parse_type());
      while (accept(Tok::Comma)) t->args.push_back(parse_type());
      expect(Tok::RBracket);
    }
    return t;
  }

  // ----- patterns ----------------------------------------------------------

  SPatternPtr parse_pattern() {
    auto p = std::make_shared<SPattern>();
    p->span = peek().span;
    if (at(Tok::IntLit) || (at(Tok::Minus) && at(Tok::IntLit, 1))) {
      bool neg = accept(Tok::Minus);
      Token lit = expect(Tok::IntLit);
      p->k = SPatK::IntLit;
      p->int_val = BigInt(lit.text);
      if (neg) p->int_val = -p->int_val;
      return p;
    }
    if (accept(Tok::KwTrue)) {
      p->k = SPatK::BoolLit;
      p->bool_val = true;
      return p;
    }
    if (accept(Tok::KwFalse)) {
      p->k = SPatK::BoolLit;
      p->bool_val = false;
      return p;
    }
    if (at(Tok::LParen)) {
      advance();
      std::vector<SPatternPtr> elems;
      elems.push_back(parse_pattern());
      while (accept(Tok::Comma)) elems.push_back(parse_pattern());
      expect(Tok::RParen);
      if (elems.size() == 1) return elems[0];
      p->k = SPatK::Tuple;
      p->args = std::move(elems);
      return p;
    }
    Token id = expect(Tok::Ident);
    if (id.text == "_") {
      p->k = SPatK::Wild;
      return p;
    }
    if (upper_start(id.text)) {
      p->k = SPatK::Ctor;
      p->text = id.text;
      if (accept(Tok::LParen)) {
        p->ctor_has_parens = true;
        if (!at(Tok::RParen)) {
          p->args.push_back(parse_pattern());
          while (accept(Tok::Comma)) p->args.push_back(parse_pattern());
        }
        expect(Tok::RParen);
      }
      return p;
    }
    p->k = SPatK::Var;
    p->text = id.text;
    return p;
  }

  // ----- expressions -------------------------------------------------------

  // Grammar guards (`case p if c =>`) are rejected: the equation splitter is
  // defined for pure constructor patterns only.
  std::vector<SMatchClause> parse_match_block() {
    expect(Tok::LBrace);
    std::vector<SMatchClause> clauses;
    if (!at(Tok::KwCase)) fail("a match expression needs at least one 'case' clause");
    while (accept(Tok::KwCase)) {
      SMatchClause c;
      c.span = peek().span;
      c.pattern = parse_pattern();
      if (at(Tok::KwIf)) fail("pattern guards are not supported");
      expect(Tok::Arrow);
      c.body = parse_expr();
      clauses.push_back(std::move(c));
      accept(Tok::Semi);
    }
    expect(Tok::RBrace);
    return clauses;
  }

  SExprPtr parse_expr() {
    SExprPtr e = parse_or();
    while (at(Tok::KwMatch)) {
      SourceSpan span = advance().span;
      auto m = mk_sexpr(SExprK::Match, span);
      m->args.push_back(e);
      m->clauses = parse_match_block();
      e = m;
    }
    return e;
  }

  SExprPtr parse_or() {
    SExprPtr e = parse_and();
    while (at(Tok::OrOr)) {
      SourceSpan span = advance().span;
      auto b = mk_sexpr(SExprK::Binop, span);
      b->bop = SBinOp::Or;
      b->args = {e, parse_and()};
      e = b;
    }
    return e;
  }

  SExprPtr parse_and() {
    SExprPtr e = parse_cmp();
    while (at(Tok::AndAnd)) {
      SourceSpan span = advance().span;
      auto b = mk_sexpr(SExprK::Binop, span);
      b->bop = SBinOp::And;
      b->args = {e, parse_cmp()};
      e = b;
    }
    return e;
  }

  SExprPtr parse_cmp() {
    SExprPtr e = parse_add();
    for (;;) {
      SBinOp op;
      if (at(Tok::EqEq)) op = SBinOp::Eq;
      else if (at(Tok::Le)) op = SBinOp::Le;
      else if (at(Tok::Lt)) op = SBinOp::Lt;
      else if (at(Tok::Ge)) op = SBinOp::Ge;
      else if (at(Tok::Gt)) op = SBinOp::Gt;
      else return e;
      SourceSpan span = advance().span;
      auto b = mk_sexpr(SExprK::Binop, span);
      b->bop = op;
      b->args = {e, parse_add()};
      e = b;
    }
  }

  SExprPtr parse_add() {
    SExprPtr e = parse_mul();
    for (;;) {
      SBinOp op;
      if (at(Tok::Plus)) op = SBinOp::Add;
      else if (at(Tok::Minus)) op = SBinOp::Sub;
      else return e;
      SourceSpan span = advance().span;
      auto b = mk_sexpr(SExprK::Binop, span);
      b->bop = op;
      b->args = {e, parse_mul()};
      e = b;
    }
  }

  SExprPtr parse_mul() {
    SExprPtr e = parse_unary();
    while (at(Tok::Star)) {
      SourceSpan span = advance().span;
      auto b = mk_sexpr(SExprK::Binop, span);
      b->bop = SBinOp::Mul;
      b->args = {e, parse_unary()};
      e = b;
    }
    return e;
  }

  SExprPtr parse_unary() {
    if (at(Tok::Bang)) {
      SourceSpan span = advance().span;
      auto u = mk_sexpr(SExprK::Unop, span);
      u->uop = SUnOp::Not;
      u->args = {parse_unary()};
      return u;
    }
    if (at(Tok::Minus)) {
      SourceSpan span = advance().span;
      if (at(Tok::IntLit)) {
        Token lit = advance();
        auto e = mk_sexpr(SExprK::IntLit, span);
        e->int_val = -BigInt(lit.text);
        return e;
      }
      auto u = mk_sexpr(SExprK::Unop, span);
      u->uop = SUnOp::Neg;
      u->args = {parse_unary()};
      return u;
    }
    return parse_postfix();
  }

  SExprPtr parse_postfix() {
    SExprPtr e = parse_primary();
    for (;;) {
      if (at(Tok::LParen)) {
        if (e->k == SExprK::Var || e->k == SExprK::Ctor) {
          if (!e->args.empty()) fail("cannot apply an application");
          std::vector<SExprPtr> args = parse_call_args();
          if (e->k == SExprK::Var && e->text == "BigInt") {
            e = fold_bigint_call(e->span, args);
            continue;
          }
          auto call = mk_sexpr(
              e->k == SExprK::Ctor || upper_start(e->text) ? SExprK::Ctor
                                                           : SExprK::Call,
              e->span);
          call->text = e->text;
          call->args = std::move(args);
          e = call;
          continue;
        }
        fail("only named functions and constructors can be applied");
      }
      if (at(Tok::Dot)) {
        advance();
        Token id = expect(Tok::Ident);
        if (id.text.size() >= 2 && id.text[0] == '_' &&
            id.text.find_first_not_of("0123456789", 1) == std::string::npos) {
          auto proj = mk_sexpr(SExprK::Proj, id.span);
          proj->proj_index = std::stoi(id.text.substr(1));
          if (proj->proj_index < 1) fail("tuple projections start at ._1");
          proj->args = {e};
          e = proj;
          continue;
        }
        if (id.text == "holds") {
          auto h = mk_sexpr(SExprK::Holds, id.span);
          h->args = {e};
          e = h;
          continue;
        }
        // Method sugar: e.f(args) == f(e, args), e.f == f(e).
        auto call = mk_sexpr(SExprK::Call, id.span);
        call->text = id.text;
        call->args = {e};
        if (at(Tok::LParen)) {
          for (SExprPtr& a : parse_call_args()) call->args.push_back(std::move(a));
        }
        e = call;
        continue;
      }
      return e;
    }
  }

  std::vector<SExprPtr> parse_call_args() {
    expect(Tok::LParen);
    std::vector<SExprPtr> args;
    if (!at(Tok::RParen)) {
      args.push_back(close_section(parse_expr()));
      while (accept(Tok::Comma)) args.push_back(close_section(parse_expr()));
    }
    expect(Tok::RParen);
    return args;
  }

  SExprPtr fold_bigint_call(SourceSpan span, std::vector<SExprPtr>& args) {
    if (args.size() != 1 || args[0]->k != SExprK::IntLit)
      fail("BigInt(...) expects a single integer literal");
    auto e = mk_sexpr(SExprK::IntLit, span);
    e->int_val = args[0]->int_val;
    return e;
  }

  // Try to parse a parenthesized lambda head; rolls back when the tokens
  // turn out to be a tuple or grouping.
  SExprPtr try_paren_lambda() {
    size_t save = pos_;
    SourceSpan span = peek().span;
    advance();  // (
    std::vector<SLambdaParam> params;
    for (;;) {
      if (!at(Tok::Ident)) break;
      SLambdaParam p;
      p.span = peek().span;
      p.text = advance().text;
      if (upper_start(p.text)) break;
      if (accept(Tok::Colon)) p.type = parse_type();
      params.push_back(std::move(p));
      if (accept(Tok::Comma)) continue;
      if (at(Tok::RParen) && at(Tok::Arrow, 1)) {
        advance();
        advance();
        auto lam = mk_sexpr(SExprK::Lambda, span);
        lam->lparams = std::move(params);
        lam->args = {parse_expr()};
        return lam;
      }
      break;
    }
    pos_ = save;
    return nullptr;
  }

  SExprPtr parse_primary() {
    SourceSpan span = peek().span;
    if (at(Tok::IntLit)) {
      auto e = mk_sexpr(SExprK::IntLit, span);
      e->int_val = BigInt(advance().text);
      return e;
    }
    if (at(Tok::KwTrue) || at(Tok::KwFalse)) {
      auto e = mk_sexpr(SExprK::BoolLit, span);
      e->bool_val = at(Tok::KwTrue);
      advance();
      return e;
    }
    if (at(Tok::KwIf)) {
      advance();
      expect(Tok::LParen);
      SExprPtr cond = parse_expr();
      expect(Tok::RParen);
      SExprPtr then_branch = parse_expr();
      expect(Tok::KwElse);
      SExprPtr else_branch = parse_expr();
      auto e = mk_sexpr(SExprK::If, span);
      e->args = {cond, then_branch, else_branch};
      return e;
    }
    if (at(Tok::LBrace)) return parse_block(false, nullptr);
    if (at(Tok::LParen)) {
      if (SExprPtr lam = try_paren_lambda()) return lam;
      advance();
      std::vector<SExprPtr> elems;
      elems.push_back(parse_expr());
      while (accept(Tok::Comma)) elems.push_back(close_section(parse_expr()));
      expect(Tok::RParen);
      if (elems.size() == 1) return elems[0];
      elems[0] = close_section(elems[0]);
      auto e = mk_sexpr(SExprK::Tuple, span);
      e->args = std::move(elems);
      return e;
    }
    if (at(Tok::Ident)) {
      // Lambda shorthand: x => e  or  _ => e.
      if (at(Tok::Arrow, 1)) {
        Token id = advance();
        advance();  // =>
        auto lam = mk_sexpr(SExprK::Lambda, span);
        SLambdaParam p;
        p.text = id.text;
        p.span = id.span;
        lam->lparams = {std::move(p)};
        lam->args = {parse_expr()};
        return lam;
      }
      Token id = advance();
      if (id.text == "_") return mk_sexpr(SExprK::Placeholder, span);
      auto e = mk_sexpr(upper_start(id.text) ? SExprK::Ctor : SExprK::Var, span);
      e->text = id.text;
      if (e->k == SExprK::Ctor && !at(Tok::LParen))
        fail("constructors used as expressions need parentheses, e.g. " +
             id.text + "()");
      return e;
    }
    fail_expected({Tok::Ident, Tok::IntLit, Tok::LParen, Tok::LBrace, Tok::KwIf,
                   Tok::KwTrue, Tok::KwFalse});
  }

  // { (require(e))? (val x = e)* final }
  SExprPtr parse_block(bool allow_require, SExprPtr* require_out) {
    expect(Tok::LBrace);
    if (at(Tok::KwRequire)) {
      if (!allow_require || require_out == nullptr)
        fail("'require' is only allowed at the start of a function body");
      advance();
      expect(Tok::LParen);
      *require_out = parse_expr();
      expect(Tok::RParen);
      accept(Tok::Semi);
    }
    struct Binding {
      Token name;
      SExprPtr value;
    };
    std::vector<Binding> bindings;
    while (at(Tok::KwVal)) {
      advance();
      Token name = expect(Tok::Ident);
      if (upper_start(name.text)) fail("'val' binders must start lowercase");
      expect(Tok::Assign);
      bindings.push_back({name, parse_expr()});
      accept(Tok::Semi);
    }
    SExprPtr body = parse_expr();
    accept(Tok::Semi);
    expect(Tok::RBrace);
    for (auto it = bindings.rbegin(); it != bindings.rend(); ++it) {
      auto let = mk_sexpr(SExprK::Let, it->name.span);
      let->let_text = it->name.text;
      let->args = {it->value, body};
      body = let;
    }
    return body;
  }

  // ----- '_' argument sections ----------------------------------------------

  static void collect_placeholders(const SExprPtr& e,
                                   std::vector<SExpr*>& out) {
    if (e->k == SExprK::Placeholder) {
      out.push_back(e.get());
      return;
    }
    for (const auto& a : e->args) collect_placeholders(a, out);
    for (const auto& c : e->clauses) collect_placeholders(c.body, out);
  }

  static void collect_var_texts(const SExprPtr& e, std::set<std::string>& out) {
    if (e->k == SExprK::Var) out.insert(e->text);
    for (const auto& a : e->args) collect_var_texts(a, out);
    for (const auto& c : e->clauses) collect_var_texts(c.body, out);
  }

  SExprPtr close_section(SExprPtr e) {
    std::vector<SExpr*> holes;
    collect_placeholders(e, holes);
    if (holes.empty()) return e;
    if (holes.size() > 1)
      throw CompileError("parse", "at most one '_' placeholder per argument",
                         holes[1]->span);
    std::set<std::string> used;
    collect_var_texts(e, used);
    std::string binder = "_w";
    while (used.count(binder)) binder = "_" + binder;
    holes[0]->k = SExprK::Var;
    holes[0]->text = binder;
    auto lam = mk_sexpr(SExprK::Lambda, e->span);
    SLambdaParam p;
    p.text = binder;
    p.span = holes[0]->span;
    lam->lparams = {std::move(p)};
    lam->args = {e};
    ++section_counter_;
    return lam;
  }

  // ----- definitions ---------------------------------------------------------

  void parse_typarams(std::vector<std::string>& out) {
    if (!accept(Tok::LBracket)) return;
    do {
      Token id = expect(Tok::Ident);
      if (!upper_start(id.text))
        fail("type parameters must start with an uppercase letter");
      out.push_back(id.text);
    } while (accept(Tok::Comma));
    expect(Tok::RBracket);
  }

  void parse_datatype(SurfaceProgram& prog) {
    SourceSpan span = peek().span;
    expect(Tok::KwSealed);
    expect(Tok::KwAbstract);
    expect(Tok::KwClass);
    Token name = expect(Tok::Ident);
    if (!upper_start(name.text))
      fail("datatype names must start with an uppercase letter");
    if (name.text == "BigInt" || name.text == "Boolean")
      fail("'" + name.text + "' is a reserved type name");
    SDataDef d;
    d.name = name.text;
    d.span = span;
    parse_typarams(d.typarams);
    prog.datatypes.push_back(std::move(d));
    prog.order.emplace_back(false, prog.datatypes.size() - 1);
  }

  void parse_case_class(SurfaceProgram& prog) {
    SourceSpan span = peek().span;
    expect(Tok::KwCase);
    expect(Tok::KwClass);
    Token name = expect(Tok::Ident);
    if (!upper_start(name.text))
      fail("constructor names must start with an uppercase letter");
    SCtorDef c;
    c.name = name.text;
    c.span = span;
    std::vector<std::string> typarams;
    parse_typarams(typarams);
    expect(Tok::LParen);
    if (!at(Tok::RParen)) {
      do {
        SParam f;
        Token fname = expect(Tok::Ident);
        f.text = fname.text;
        f.span = fname.span;
        expect(Tok::Colon);
        f.type = parse_type();
        c.fields.push_back(std::move(f));
      } while (accept(Tok::Comma));
    }
    expect(Tok::RParen);
    expect(Tok::KwExtends);
    Token parent = expect(Tok::Ident);
    STypePtr parent_args = nullptr;
    if (at(Tok::LBracket)) {
      parent_args = mk_stype(STypeK::Named, parent.span);
      advance();
      parent_args->args.push_back(parse_type());
      while (accept(Tok::Comma)) parent_args->args.push_back(parse_type());
      expect(Tok::RBracket);
    }
    for (auto& d : prog.datatypes) {
      if (d.name != parent.text) continue;
      if (typarams != d.typarams)
        throw CompileError("parse",
                           "case class type parameters must match '" + d.name +
                               "' exactly",
                           span);
      if (parent_args) {
        if (parent_args->args.size() != d.typarams.size())
          throw CompileError("parse", "wrong number of type arguments for '" +
                                          d.name + "'",
                             span);
        for (size_t i = 0; i < d.typarams.size(); ++i) {
          const STypePtr& a = parent_args->args[i];
          if (a->k != STypeK::Named || a->head != d.typarams[i] ||
              !a->args.empty())
            throw CompileError(
                "parse", "extends clause must instantiate '" + d.name +
                             "' with its own type parameters",
                a->span);
        }
      }
      d.ctors.push_back(std::move(c));
      return;
    }
    throw CompileError("parse",
                       "unknown parent class '" + parent.text +
                           "' (declare the sealed abstract class first)",
                       parent.span);
  }

  void parse_annotation(SFunDef& f) {
    expect(Tok::At);
    Token name = expect(Tok::Ident);
    if (name.text == "proof") {
      expect(Tok::LParen);
      Token key = expect(Tok::Ident);
      if (key.text != "method") fail("expected 'method = \"...\"'");
      expect(Tok::Assign);
      Token payload = expect(Tok::StringLit);
      expect(Tok::RParen);
      if (f.has_proof)
        throw CompileError("parse", "duplicate @proof annotation", name.span);
      f.has_proof = true;
      f.proof_method = payload.text;
    } else if (name.text == "library") {
      expect(Tok::LParen);
      Token payload = expect(Tok::StringLit);
      expect(Tok::RParen);
      if (f.has_library)
        throw CompileError("parse", "duplicate @library annotation", name.span);
      f.has_library = true;
      f.library_target = payload.text;
    } else {
      throw CompileError("parse", "unknown annotation '@" + name.text + "'",
                         name.span);
    }
  }

  static void check_no_stray(const SExprPtr& e) {
    if (e->k == SExprK::Placeholder)
      throw CompileError("parse", "unbound '_' placeholder", e->span);
    if (e->k == SExprK::Holds)
      throw CompileError(
          "parse", "'.holds' is only allowed at the top of a function body",
          e->span);
    for (const auto& a : e->args) check_no_stray(a);
    for (const auto& c : e->clauses) check_no_stray(c.body);
  }

  SFunDef parse_fun() {
    SFunDef f;
    while (at(Tok::At)) parse_annotation(f);
    f.span = peek().span;
    expect(Tok::KwDef);
    Token name = expect(Tok::Ident);
    if (upper_start(name.text))
      fail("function names must start with a lowercase letter");
    f.name = name.text;
    parse_typarams(f.typarams);
    expect(Tok::LParen);
    if (!at(Tok::RParen)) {
      do {
        SParam p;
        Token pname = expect(Tok::Ident);
        if (upper_start(pname.text))
          fail("parameter names must start lowercase");
        p.text = pname.text;
        p.span = pname.span;
        expect(Tok::Colon);
        p.type = parse_type();
        f.params.push_back(std::move(p));
      } while (accept(Tok::Comma));
    }
    expect(Tok::RParen);
    if (accept(Tok::Colon)) f.ret = parse_type();
    expect(Tok::Assign);

    if (at(Tok::LBrace)) {
      f.body = parse_block(true, &f.require_expr);
    } else {
      f.body = parse_expr();
    }
    // Unwrap a top-level .holds marker (also allowed as the final expression
    // of a body block).
    if (f.body->k == SExprK::Holds) {
      f.holds = true;
      f.body = f.body->args[0];
    } else if (f.body->k == SExprK::Let) {
      SExpr* tail = f.body.get();
      while (tail->args[1]->k == SExprK::Let) tail = tail->args[1].get();
      if (tail->args[1]->k == SExprK::Holds) {
        f.holds = true;
        tail->args[1] = tail->args[1]->args[0];
      }
    }
    if (at(Tok::KwEnsuring)) {
      advance();
      f.ensuring_lambda = parse_ensuring_payload();
    }
    check_no_stray(f.body);
    if (f.require_expr) check_no_stray(f.require_expr);
    if (f.ensuring_lambda) check_no_stray(f.ensuring_lambda->args[0]);
    return f;
  }

  SExprPtr parse_ensuring_payload() {
    bool brace = at(Tok::LBrace);
    if (!brace && !at(Tok::LParen)) fail_expected({Tok::LParen, Tok::LBrace});
    advance();
    SExprPtr payload = close_section(parse_expr());
    expect(brace ? Tok::RBrace : Tok::RParen);
    if (payload->k != SExprK::Lambda || payload->lparams.size() != 1)
      throw CompileError("parse",
                         "ensuring expects a one-argument predicate "
                         "(a lambda or a '_' section)",
                         payload->span);
    return payload;
  }
};

inline SurfaceProgram parse_program(const std::string& source,
                                    const std::string& file = "<input>") {
  return Parser(tokenize(source, file), file).parse_program();
}

}  // namespace pscv
