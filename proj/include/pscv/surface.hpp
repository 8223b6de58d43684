// Surface AST for .psc programs: a Scala-flavored purely functional fragment
// with sealed-class datatypes, pattern matching, and inline contracts
// (require / ensuring / .holds) plus @proof and @library annotations.
//
// The parser produces string-named nodes; the resolver fills in hygienic
// Names in place. A small printer renders the AST back to source text
// (used by round-trip tests and fuzzers).
#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pscv/basics.hpp"
#include "pscv/name.hpp"

namespace pscv {

// ---------------------------------------------------------------------------
// Types

struct SType;
using STypePtr = std::shared_ptr<SType>;

enum class STypeK { Named, Tuple, Fun };

struct SType {
  STypeK k = STypeK::Named;
  std::string head;      // Named: identifier text (typevar, datatype, BigInt, Boolean)
  Name resolved;         // Named: filled by resolver for typevars/datatypes
  std::vector<STypePtr> args;  // Named: type args; Tuple: elems; Fun: params then result
  SourceSpan span;
};

inline STypePtr mk_stype(STypeK k, SourceSpan span) {
  auto t = std::make_shared<SType>();
  t->k = k;
  t->span = std::move(span);
  return t;
}

// ---------------------------------------------------------------------------
// Patterns

struct SPattern;
using SPatternPtr = std::shared_ptr<SPattern>;

enum class SPatK { Wild, Var, Ctor, Tuple, IntLit, BoolLit };

struct SPattern {
  SPatK k = SPatK::Wild;
  std::string text;   // Var binder text or Ctor name text
  Name resolved;      // binder / constructor name
  bool ctor_has_parens = false;
  std::vector<SPatternPtr> args;
  BigInt int_val;
  bool bool_val = false;
  SourceSpan span;
};

// ---------------------------------------------------------------------------
// Expressions

struct SExpr;
using SExprPtr = std::shared_ptr<SExpr>;

enum class SExprK {
  Var,          // text / resolved (variable or top-level function reference)
  IntLit,
  BoolLit,
  Ctor,         // constructor application C(args)
  Call,         // function application f(args); callee named by text/resolved
  Lambda,       // params => body
  Tuple,        // (a, b, ...)
  Proj,         // e._k   (args[0], proj_index)
  If,           // args[0..2]
  Let,          // val binder = args[0]; args[1]
  Match,        // scrutinee args[0], clauses
  Binop,        // args[0] op args[1]
  Unop,         // op args[0]
  Holds,        // args[0].holds  (only valid at function-body top)
  Placeholder,  // '_' inside an unclosed section; eliminated by the parser
};

enum class SBinOp { Add, Sub, Mul, Eq, Le, Lt, Ge, Gt, And, Or };
enum class SUnOp { Not, Neg };

struct SLambdaParam {
  std::string text;  // "_" allowed (ignored binder)
  Name resolved;
  STypePtr type;  // optional annotation
  SourceSpan span;
};

struct SMatchClause {
  SPatternPtr pattern;
  SExprPtr body;
  SourceSpan span;
};

struct SExpr {
  SExprK k = SExprK::Var;
  std::string text;  // Var / Call / Ctor name text
  Name resolved;
  BigInt int_val;
  bool bool_val = false;
  std::vector<SExprPtr> args;
  std::vector<SLambdaParam> lparams;
  std::vector<SMatchClause> clauses;
  SBinOp bop = SBinOp::Add;
  SUnOp uop = SUnOp::Not;
  int proj_index = 0;  // 1-based, from ._1 ._2 ...
  std::string let_text;
  Name let_resolved;
  SourceSpan span;
};

inline SExprPtr mk_sexpr(SExprK k, SourceSpan span) {
  auto e = std::make_shared<SExpr>();
  e->k = k;
  e->span = std::move(span);
  return e;
}

// ---------------------------------------------------------------------------
// Definitions

struct SParam {
  std::string text;
  Name resolved;
  STypePtr type;
  SourceSpan span;
};

struct SCtorDef {
  std::string name;
  Name resolved;
  std::vector<SParam> fields;
  SourceSpan span;
};

struct SDataDef {
  std::string name;
  Name resolved;
  std::vector<std::string> typarams;
  std::vector<Name> typarams_resolved;
  std::vector<SCtorDef> ctors;
  SourceSpan span;
};

struct SFunDef {
  std::string name;
  Name resolved;
  std::vector<std::string> typarams;
  std::vector<Name> typarams_resolved;
  std::vector<SParam> params;
  STypePtr ret;                // null: inferred from the body
  SExprPtr require_expr;       // optional precondition
  SExprPtr body;
  SExprPtr ensuring_lambda;    // optional postcondition, a unary Lambda
  bool holds = false;
  bool has_proof = false;
  std::string proof_method;    // raw @proof payload, parsed later by vcgen
  bool has_library = false;
  std::string library_target;  // @library payload
  SourceSpan span;
};

// One scope entry for `<var _>` resolution inside @proof payloads.
struct ScopeEntry {
  std::string text;
  Name name;
  bool is_param = false;
};

struct SurfaceProgram {
  std::string file;
  std::vector<SDataDef> datatypes;
  std::vector<SFunDef> functions;
  // Document order of top-level definitions: (is_function, index into vector).
  std::vector<std::pair<bool, size_t>> order;
  // Filled by the resolver.
  std::map<std::string, Name> toplevel;                       // functions & datatypes
  std::map<std::string, std::vector<ScopeEntry>> fun_scopes;  // keyed by function base name
  std::map<std::pair<std::string, NameKind>, int> name_counters;
};

// ---------------------------------------------------------------------------
// Printer (round-trip testing support)

namespace sprint {

inline std::string type_str(const STypePtr& t);

inline std::string type_list(const std::vector<STypePtr>& ts, const char* sep) {
  std::string out;
  for (size_t i = 0; i < ts.size(); ++i) {
    if (i) out += sep;
    out += type_str(ts[i]);
  }
  return out;
}

inline std::string type_str(const STypePtr& t) {
  switch (t->k) {
    case STypeK::Named: {
      std::string out = t->head;
      if (!t->args.empty()) out += "[" + type_list(t->args, ", ") + "]";
      return out;
    }
    case STypeK::Tuple:
      return "(" + type_list(t->args, ", ") + ")";
    case STypeK::Fun: {
      std::vector<STypePtr> params(t->args.begin(), t->args.end() - 1);
      std::string lhs = params.size() == 1 && params[0]->k != STypeK::Fun
                            ? type_str(params[0])
                            : "(" + type_list(params, ", ") + ")";
      return lhs + " => " + type_str(t->args.back());
    }
  }
  return "?";
}

inline std::string pattern_str(const SPatternPtr& p) {
  switch (p->k) {
    case SPatK::Wild: return "_";
    case SPatK::Var: return p->text;
    case SPatK::Ctor: {
      if (p->args.empty() && !p->ctor_has_parens) return p->text;
      std::string out = p->text + "(";
      for (size_t i = 0; i < p->args.size(); ++i) {
        if (i) out += ", ";
        out += pattern_str(p->args[i]);
      }
      return out + ")";
    }
    case SPatK::Tuple: {
      std::string out = "(";
      for (size_t i = 0; i < p->args.size(); ++i) {
        if (i) out += ", ";
        out += pattern_str(p->args[i]);
      }
      return out + ")";
    }
    case SPatK::IntLit: return p->int_val.str();
    case SPatK::BoolLit: return p->bool_val ? "true" : "false";
  }
  return "?";
}

inline std::string expr_str(const SExprPtr& e);

inline std::string binop_str(SBinOp op) {
  switch (op) {
    case SBinOp::Add: return "+";
    case SBinOp::Sub: return "-";
    case SBinOp::Mul: return "*";
    case SBinOp::Eq: return "==";
    case SBinOp::Le: return "<=";
    case SBinOp::Lt: return "<";
    case SBinOp::Ge: return ">=";
    case SBinOp::Gt: return ">";
    case SBinOp::And: return "&&";
    case SBinOp::Or: return "||";
  }
  return "?";
}

inline std::string expr_str(const SExprPtr& e) {
  switch (e->k) {
    case SExprK::Var: return e->text;
    case SExprK::IntLit: return e->int_val.str();
    case SExprK::BoolLit: return e->bool_val ? "true" : "false";
    case SExprK::Ctor:
    case SExprK::Call: {
      std::string out = e->text + "(";
      for (size_t i = 0; i < e->args.size(); ++i) {
        if (i) out += ", ";
        out += expr_str(e->args[i]);
      }
      return out + ")";
    }
    case SExprK::Lambda: {
      std::string ps;
      for (size_t i = 0; i < e->lparams.size(); ++i) {
        if (i) ps += ", ";
        ps += e->lparams[i].text;
        if (e->lparams[i].type) ps += ": " + type_str(e->lparams[i].type);
      }
      std::string head =
          e->lparams.size() == 1 && !e->lparams[0].type ? ps : "(" + ps + ")";
      return "(" + head + " => " + expr_str(e->args[0]) + ")";
    }
    case SExprK::Tuple: {
      std::string out = "(";
      for (size_t i = 0; i < e->args.size(); ++i) {
        if (i) out += ", ";
        out += expr_str(e->args[i]);
      }
      return out + ")";
    }
    case SExprK::Proj:
      return "(" + expr_str(e->args[0]) + ")._" + std::to_string(e->proj_index);
    case SExprK::If:
      return "(if (" + expr_str(e->args[0]) + ") " + expr_str(e->args[1]) +
             " else " + expr_str(e->args[2]) + ")";
    case SExprK::Let:
      return "{ val " + e->let_text + " = " + expr_str(e->args[0]) + "\n" +
             expr_str(e->args[1]) + " }";
    case SExprK::Match: {
      std::string out = "(" + expr_str(e->args[0]) + " match {\n";
      for (const auto& c : e->clauses)
        out += "case " + pattern_str(c.pattern) + " => " + expr_str(c.body) + "\n";
      return out + "})";
    }
    case SExprK::Binop:
      return "(" + expr_str(e->args[0]) + " " + binop_str(e->bop) + " " +
             expr_str(e->args[1]) + ")";
    case SExprK::Unop:
      return std::string("(") + (e->uop == SUnOp::Not ? "!" : "-") +
             expr_str(e->args[0]) + ")";
    case SExprK::Holds:
      return "(" + expr_str(e->args[0]) + ").holds";
    case SExprK::Placeholder:
      return "_";
  }
  return "?";
}

inline std::string quote_annotation(const std::string& payload) {
  // Triple quotes keep embedded quotes verbatim.
  if (payload.find('"') != std::string::npos) return "\"\"\"" + payload + "\"\"\"";
  return "\"" + payload + "\"";
}

inline std::string program_str(const SurfaceProgram& p) {
  std::string out;
  for (const auto& [is_fun, idx] : p.order) {
    if (!is_fun) {
      const SDataDef& d = p.datatypes[idx];
      out += "sealed abstract class " + d.name;
      if (!d.typarams.empty()) {
        out += "[";
        for (size_t i = 0; i < d.typarams.size(); ++i) {
          if (i) out += ", ";
          out += d.typarams[i];
        }
        out += "]";
      }
      out += "\n";
      for (const auto& c : d.ctors) {
        out += "case class " + c.name;
        if (!d.typarams.empty()) {
          out += "[";
          for (size_t i = 0; i < d.typarams.size(); ++i) {
            if (i) out += ", ";
            out += d.typarams[i];
          }
          out += "]";
        }
        out += "(";
        for (size_t i = 0; i < c.fields.size(); ++i) {
          if (i) out += ", ";
          out += c.fields[i].text + ": " + type_str(c.fields[i].type);
        }
        out += ") extends " + d.name;
        if (!d.typarams.empty()) {
          out += "[";
          for (size_t i = 0; i < d.typarams.size(); ++i) {
            if (i) out += ", ";
            out += d.typarams[i];
          }
          out += "]";
        }
        out += "\n";
      }
      out += "\n";
    } else {
      const SFunDef& f = p.functions[idx];
      if (f.has_proof)
        out += "@proof(method = " + quote_annotation(f.proof_method) + ")\n";
      if (f.has_library)
        out += "@library(" + quote_annotation(f.library_target) + ")\n";
      out += "def " + f.name;
      if (!f.typarams.empty()) {
        out += "[";
        for (size_t i = 0; i < f.typarams.size(); ++i) {
          if (i) out += ", ";
          out += f.typarams[i];
        }
        out += "]";
      }
      out += "(";
      for (size_t i = 0; i < f.params.size(); ++i) {
        if (i) out += ", ";
        out += f.params[i].text + ": " + type_str(f.params[i].type);
      }
      out += ")";
      if (f.ret) out += ": " + type_str(f.ret);
      out += " = ";
      std::string body = expr_str(f.body);
      if (f.holds) body = "(" + body + ").holds";
      if (f.require_expr)
        body = "{\nrequire(" + expr_str(f.require_expr) + ")\n" + body + "\n}";
      out += body;
      if (f.ensuring_lambda) {
        const SExpr& lam = *f.ensuring_lambda;
        out += " ensuring(" + lam.lparams[0].text + " => " +
               expr_str(lam.args[0]) + ")";
      }
      out += "\n\n";
    }
  }
  return out;
}

}  // namespace sprint
}  // namespace pscv
