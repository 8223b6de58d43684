// Typed core IR: expressions, patterns, function definitions, programs.
// Expressions are immutable shared trees; substitution is capture-avoiding.
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "pscv/type.hpp"

namespace pscv {

enum class ExprK {
  Var,     // name (a bound variable, or a top-level function used as a value)
  IntLit,
  BoolLit,
  Ctor,    // name + args
  App,     // args[0] = callee (Var or Lambda), args[1..] = actuals
  Lambda,  // lparams + args[0] = body
  Tuple,
  Proj,    // args[0], proj_index (1-based)
  If,      // args[0..2]
  Let,     // let_name : let_type = args[0] in args[1]
  Match,   // args[0] = scrutinee, clauses
  Binop,   // bop, args[0..1]
  Unop,    // uop, args[0]
};

enum class BinOp { Add, Sub, Mul, Eq, Le, Lt, Ge, Gt, And, Or };
enum class UnOp { Not, Neg };

inline const char* binop_sym(BinOp op) {
  switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Eq: return "=";
    case BinOp::Le: return "<=";
    case BinOp::Lt: return "<";
    case BinOp::Ge: return ">=";
    case BinOp::Gt: return ">";
    case BinOp::And: return "&";
    case BinOp::Or: return "|";
  }
  return "?";
}

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class PatK { Wild, Var, Ctor, Tuple, IntLit, BoolLit };

struct Pattern;
using PatternPtr = std::shared_ptr<const Pattern>;

struct Pattern {
  PatK k = PatK::Wild;
  Name name;  // Var binder / Ctor name
  TypePtr type;
  std::vector<PatternPtr> args;
  BigInt int_val;
  bool bool_val = false;
  SourceSpan span;
};

struct MatchClause {
  PatternPtr pattern;
  ExprPtr body;
};

struct Param {
  Name name;
  TypePtr type;
};

struct Expr {
  ExprK k = ExprK::Var;
  TypePtr type;
  SourceSpan span;
  Name name;       // Var / Ctor
  BigInt int_val;
  bool bool_val = false;
  std::vector<ExprPtr> args;
  std::vector<Param> lparams;
  std::vector<MatchClause> clauses;
  BinOp bop = BinOp::Add;
  UnOp uop = UnOp::Not;
  int proj_index = 1;
  Name let_name;
  TypePtr let_type;
};

// ----- constructors ----------------------------------------------------------

inline std::shared_ptr<Expr> mk(ExprK k, TypePtr type) {
  auto e = std::make_shared<Expr>();
  e->k = k;
  e->type = std::move(type);
  return e;
}

inline ExprPtr e_var(Name n, TypePtr t) {
  auto e = mk(ExprK::Var, std::move(t));
  e->name = std::move(n);
  return e;
}
inline ExprPtr e_int(BigInt v) {
  auto e = mk(ExprK::IntLit, t_int());
  e->int_val = std::move(v);
  return e;
}
inline ExprPtr e_bool(bool v) {
  auto e = mk(ExprK::BoolLit, t_bool());
  e->bool_val = v;
  return e;
}
inline ExprPtr e_ctor(Name n, std::vector<ExprPtr> args, TypePtr t) {
  auto e = mk(ExprK::Ctor, std::move(t));
  e->name = std::move(n);
  e->args = std::move(args);
  return e;
}
inline ExprPtr e_app(ExprPtr callee, std::vector<ExprPtr> actuals, TypePtr t) {
  auto e = mk(ExprK::App, std::move(t));
  e->args.push_back(std::move(callee));
  for (auto& a : actuals) e->args.push_back(std::move(a));
  return e;
}
inline ExprPtr e_lambda(std::vector<Param> params, ExprPtr body, TypePtr t) {
  auto e = mk(ExprK::Lambda, std::move(t));
  e->lparams = std::move(params);
  e->args = {std::move(body)};
  return e;
}
inline ExprPtr e_tuple(std::vector<ExprPtr> elems) {
  std::vector<TypePtr> ts;
  for (auto& x : elems) ts.push_back(x->type);
  auto e = mk(ExprK::Tuple, t_tuple(std::move(ts)));
  e->args = std::move(elems);
  return e;
}
inline ExprPtr e_proj(ExprPtr tuple, int index, TypePtr t) {
  auto e = mk(ExprK::Proj, std::move(t));
  e->args = {std::move(tuple)};
  e->proj_index = index;
  return e;
}
inline ExprPtr e_if(ExprPtr c, ExprPtr a, ExprPtr b) {
  auto e = mk(ExprK::If, a->type);
  e->args = {std::move(c), std::move(a), std::move(b)};
  return e;
}
inline ExprPtr e_let(Name n, TypePtr nt, ExprPtr bound, ExprPtr body) {
  auto e = mk(ExprK::Let, body->type);
  e->let_name = std::move(n);
  e->let_type = std::move(nt);
  e->args = {std::move(bound), std::move(body)};
  return e;
}
inline ExprPtr e_match(ExprPtr scrutinee, std::vector<MatchClause> clauses,
                       TypePtr t) {
  auto e = mk(ExprK::Match, std::move(t));
  e->args = {std::move(scrutinee)};
  e->clauses = std::move(clauses);
  return e;
}
inline ExprPtr e_binop(BinOp op, ExprPtr a, ExprPtr b, TypePtr t) {
  auto e = mk(ExprK::Binop, std::move(t));
  e->bop = op;
  e->args = {std::move(a), std::move(b)};
  return e;
}
inline ExprPtr e_unop(UnOp op, ExprPtr a, TypePtr t) {
  auto e = mk(ExprK::Unop, std::move(t));
  e->uop = op;
  e->args = {std::move(a)};
  return e;
}

// ----- equality ---------------------------------------------------------------

inline bool expr_equal(const ExprPtr& a, const ExprPtr& b);

inline bool pattern_equal(const PatternPtr& a, const PatternPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->k != b->k || a->args.size() != b->args.size()) return false;
  switch (a->k) {
    case PatK::Wild: break;
    case PatK::Var:
    case PatK::Ctor:
      if (!(a->name == b->name)) return false;
      break;
    case PatK::IntLit:
      if (a->int_val != b->int_val) return false;
      break;
    case PatK::BoolLit:
      if (a->bool_val != b->bool_val) return false;
      break;
    case PatK::Tuple: break;
  }
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!pattern_equal(a->args[i], b->args[i])) return false;
  return true;
}

inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->k != b->k || a->args.size() != b->args.size()) return false;
  switch (a->k) {
    case ExprK::Var:
      return a->name == b->name;
    case ExprK::IntLit:
      if (a->int_val != b->int_val) return false;
      break;
    case ExprK::BoolLit:
      if (a->bool_val != b->bool_val) return false;
      break;
    case ExprK::Ctor:
      if (!(a->name == b->name)) return false;
      break;
    case ExprK::Binop:
      if (a->bop != b->bop) return false;
      break;
    case ExprK::Unop:
      if (a->uop != b->uop) return false;
      break;
    case ExprK::Proj:
      if (a->proj_index != b->proj_index) return false;
      break;
    case ExprK::Let:
      if (!(a->let_name == b->let_name)) return false;
      break;
    case ExprK::Lambda: {
      if (a->lparams.size() != b->lparams.size()) return false;
      for (size_t i = 0; i < a->lparams.size(); ++i)
        if (!(a->lparams[i].name == b->lparams[i].name)) return false;
      break;
    }
    case ExprK::Match: {
      if (a->clauses.size() != b->clauses.size()) return false;
      for (size_t i = 0; i < a->clauses.size(); ++i) {
        if (!pattern_equal(a->clauses[i].pattern, b->clauses[i].pattern))
          return false;
        if (!expr_equal(a->clauses[i].body, b->clauses[i].body)) return false;
      }
      break;
    }
    default: break;
  }
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!expr_equal(a->args[i], b->args[i])) return false;
  return true;
}

// Alpha-equality: structural equality modulo bound-variable names.
namespace detail {
inline bool alpha_eq(const ExprPtr& a, const ExprPtr& b,
                     std::map<Name, Name>& env);

inline bool alpha_eq_pattern(const PatternPtr& a, const PatternPtr& b,
                             std::map<Name, Name>& env) {
  if (a->k != b->k || a->args.size() != b->args.size()) return false;
  switch (a->k) {
    case PatK::Var:
      env[a->name] = b->name;
      break;
    case PatK::Ctor:
      if (!(a->name == b->name)) return false;
      break;
    case PatK::IntLit:
      if (a->int_val != b->int_val) return false;
      break;
    case PatK::BoolLit:
      if (a->bool_val != b->bool_val) return false;
      break;
    default: break;
  }
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!alpha_eq_pattern(a->args[i], b->args[i], env)) return false;
  return true;
}

inline bool alpha_eq(const ExprPtr& a, const ExprPtr& b,
                     std::map<Name, Name>& env) {
  if (a->k != b->k || a->args.size() != b->args.size()) return false;
  switch (a->k) {
    case ExprK::Var: {
      auto it = env.find(a->name);
      return it != env.end() ? it->second == b->name : a->name == b->name;
    }
    case ExprK::IntLit:
      return a->int_val == b->int_val;
    case ExprK::BoolLit:
      return a->bool_val == b->bool_val;
    case ExprK::Ctor:
      if (!(a->name == b->name)) return false;
      break;
    case ExprK::Binop:
      if (a->bop != b->bop) return false;
      break;
    case ExprK::Unop:
      if (a->uop != b->uop) return false;
      break;
    case ExprK::Proj:
      if (a->proj_index != b->proj_index) return false;
      break;
    case ExprK::Lambda: {
      if (a->lparams.size() != b->lparams.size()) return false;
      std::map<Name, Name> inner = env;
      for (size_t i = 0; i < a->lparams.size(); ++i)
        inner[a->lparams[i].name] = b->lparams[i].name;
      return alpha_eq(a->args[0], b->args[0], inner);
    }
    case ExprK::Let: {
      if (!alpha_eq(a->args[0], b->args[0], env)) return false;
      std::map<Name, Name> inner = env;
      inner[a->let_name] = b->let_name;
      return alpha_eq(a->args[1], b->args[1], inner);
    }
    case ExprK::Match: {
      if (a->clauses.size() != b->clauses.size()) return false;
      if (!alpha_eq(a->args[0], b->args[0], env)) return false;
      for (size_t i = 0; i < a->clauses.size(); ++i) {
        std::map<Name, Name> inner = env;
        if (!alpha_eq_pattern(a->clauses[i].pattern, b->clauses[i].pattern, inner))
          return false;
        if (!alpha_eq(a->clauses[i].body, b->clauses[i].body, inner)) return false;
      }
      return true;
    }
    default: break;
  }
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!alpha_eq(a->args[i], b->args[i], env)) return false;
  return true;
}
}  // namespace detail

inline bool alpha_equal(const ExprPtr& a, const ExprPtr& b) {
  std::map<Name, Name> env;
  return detail::alpha_eq(a, b, env);
}

inline std::string pattern_str(const PatternPtr& p);

// Deterministic total order on expressions (monomial ordering, tie-breaks).
inline int expr_compare(const ExprPtr& a, const ExprPtr& b) {
  auto cmp = [](auto x, auto y) { return x < y ? -1 : (y < x ? 1 : 0); };
  if (int c = cmp(static_cast<int>(a->k), static_cast<int>(b->k))) return c;
  switch (a->k) {
    case ExprK::Var:
    case ExprK::Ctor:
      if (int c = cmp(a->name, b->name)) return c;
      break;
    case ExprK::IntLit:
      if (int c = cmp(a->int_val, b->int_val)) return c;
      break;
    case ExprK::BoolLit:
      if (int c = cmp(a->bool_val, b->bool_val)) return c;
      break;
    case ExprK::Binop:
      if (int c = cmp(static_cast<int>(a->bop), static_cast<int>(b->bop))) return c;
      break;
    case ExprK::Unop:
      if (int c = cmp(static_cast<int>(a->uop), static_cast<int>(b->uop))) return c;
      break;
    case ExprK::Proj:
      if (int c = cmp(a->proj_index, b->proj_index)) return c;
      break;
    case ExprK::Let:
      if (int c = cmp(a->let_name, b->let_name)) return c;
      break;
    default: break;
  }
  if (int c = cmp(a->args.size(), b->args.size())) return c;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (int c = expr_compare(a->args[i], b->args[i])) return c;
  if (a->k == ExprK::Match) {
    if (int c = cmp(a->clauses.size(), b->clauses.size())) return c;
    for (size_t i = 0; i < a->clauses.size(); ++i) {
      if (int c = cmp(pattern_str(a->clauses[i].pattern),
                      pattern_str(b->clauses[i].pattern)))
        return c;
      if (int c = expr_compare(a->clauses[i].body, b->clauses[i].body)) return c;
    }
  }
  if (a->k == ExprK::Lambda) {
    for (size_t i = 0; i < a->lparams.size(); ++i)
      if (int c = cmp(a->lparams[i].name, b->lparams[i].name)) return c;
  }
  return 0;
}

// ----- free variables & size ---------------------------------------------------

inline void pattern_binders(const PatternPtr& p, std::vector<Param>& out) {
  if (p->k == PatK::Var) out.push_back(Param{p->name, p->type});
  for (const auto& a : p->args) pattern_binders(a, out);
}

namespace detail {
inline void free_vars_rec(const ExprPtr& e, std::set<Name>& bound,
                          std::set<Name>& out) {
  switch (e->k) {
    case ExprK::Var:
      if (e->name.kind == NameKind::Variable && !bound.count(e->name))
        out.insert(e->name);
      return;
    case ExprK::Lambda: {
      std::vector<Name> added;
      for (const auto& p : e->lparams)
        if (bound.insert(p.name).second) added.push_back(p.name);
      free_vars_rec(e->args[0], bound, out);
      for (const auto& n : added) bound.erase(n);
      return;
    }
    case ExprK::Let: {
      free_vars_rec(e->args[0], bound, out);
      bool added = bound.insert(e->let_name).second;
      free_vars_rec(e->args[1], bound, out);
      if (added) bound.erase(e->let_name);
      return;
    }
    case ExprK::Match: {
      free_vars_rec(e->args[0], bound, out);
      for (const auto& c : e->clauses) {
        std::vector<Param> binders;
        pattern_binders(c.pattern, binders);
        std::vector<Name> added;
        for (const auto& b : binders)
          if (bound.insert(b.name).second) added.push_back(b.name);
        free_vars_rec(c.body, bound, out);
        for (const auto& n : added) bound.erase(n);
      }
      return;
    }
    default:
      for (const auto& a : e->args) free_vars_rec(a, bound, out);
  }
}
}  // namespace detail

inline std::set<Name> free_vars(const ExprPtr& e) {
  std::set<Name> bound, out;
  detail::free_vars_rec(e, bound, out);
  return out;
}

inline size_t expr_size(const ExprPtr& e) {
  size_t n = 1;
  for (const auto& a : e->args) n += expr_size(a);
  for (const auto& c : e->clauses) n += expr_size(c.body);
  return n;
}

// ----- substitution -------------------------------------------------------------

using Subst = std::map<Name, ExprPtr>;

namespace detail {

inline Name avoid_clashes(const Name& n, const std::set<Name>& avoid) {
  Name out = n;
  int max_suffix = n.suffix;
  for (const auto& a : avoid)
    if (a.base == n.base && a.kind == n.kind && a.universe == n.universe)
      max_suffix = std::max(max_suffix, a.suffix);
  out.suffix = max_suffix + 1;
  return out;
}

inline ExprPtr subst_rec(const ExprPtr& e, const Subst& s,
                         const std::set<Name>& range_fvs);

inline PatternPtr rename_pattern(const PatternPtr& p,
                                 const std::map<Name, Name>& renames) {
  if (p->k == PatK::Var) {
    auto it = renames.find(p->name);
    if (it != renames.end()) {
      auto q = std::make_shared<Pattern>(*p);
      q->name = it->second;
      return q;
    }
    return p;
  }
  if (p->args.empty()) return p;
  auto q = std::make_shared<Pattern>(*p);
  for (auto& a : q->args) a = rename_pattern(a, renames);
  return q;
}

inline ExprPtr subst_rec(const ExprPtr& e, const Subst& s,
                         const std::set<Name>& range_fvs) {
  if (s.empty()) return e;
  switch (e->k) {
    case ExprK::Var: {
      auto it = s.find(e->name);
      return it == s.end() ? e : it->second;
    }
    case ExprK::IntLit:
    case ExprK::BoolLit:
      return e;
    case ExprK::Lambda: {
      Subst inner = s;
      std::set<Name> avoid = range_fvs;
      Subst renames_as_subst;
      std::vector<Param> params = e->lparams;
      for (auto& p : params) {
        inner.erase(p.name);
        if (range_fvs.count(p.name)) {
          std::set<Name> local_avoid = avoid;
          for (const Name& fv : free_vars(e->args[0])) local_avoid.insert(fv);
          Name fresh = avoid_clashes(p.name, local_avoid);
          renames_as_subst[p.name] = e_var(fresh, p.type);
          avoid.insert(fresh);
          p.name = fresh;
        }
      }
      ExprPtr body = e->args[0];
      if (!renames_as_subst.empty()) {
        std::set<Name> rfv;
        for (const auto& [k2, v] : renames_as_subst) rfv.insert(v->name);
        body = subst_rec(body, renames_as_subst, rfv);
      }
      if (inner.empty() && params.size() == e->lparams.size() &&
          renames_as_subst.empty())
        return e;
      std::set<Name> inner_fvs;
      for (const auto& [k2, v] : inner)
        for (const Name& fv : free_vars(v)) inner_fvs.insert(fv);
      auto out = std::make_shared<Expr>(*e);
      out->lparams = params;
      out->args[0] = subst_rec(body, inner, inner_fvs);
      return out;
    }
    case ExprK::Let: {
      ExprPtr bound = subst_rec(e->args[0], s, range_fvs);
      Subst inner = s;
      inner.erase(e->let_name);
      Name binder = e->let_name;
      ExprPtr body = e->args[1];
      if (range_fvs.count(binder)) {
        std::set<Name> avoid = range_fvs;
        for (const Name& fv : free_vars(body)) avoid.insert(fv);
        Name fresh = avoid_clashes(binder, avoid);
        Subst rename{{binder, e_var(fresh, e->let_type)}};
        std::set<Name> rfv{fresh};
        body = subst_rec(body, rename, rfv);
        binder = fresh;
      }
      std::set<Name> inner_fvs;
      for (const auto& [k2, v] : inner)
        for (const Name& fv : free_vars(v)) inner_fvs.insert(fv);
      auto out = std::make_shared<Expr>(*e);
      out->let_name = binder;
      out->args[0] = bound;
      out->args[1] = subst_rec(body, inner, inner_fvs);
      return out;
    }
    case ExprK::Match: {
      auto out = std::make_shared<Expr>(*e);
      out->args[0] = subst_rec(e->args[0], s, range_fvs);
      for (auto& c : out->clauses) {
        std::vector<Param> binders;
        pattern_binders(c.pattern, binders);
        Subst inner = s;
        std::map<Name, Name> renames;
        for (const auto& b : binders) {
          inner.erase(b.name);
          if (range_fvs.count(b.name)) {
            std::set<Name> avoid = range_fvs;
            for (const Name& fv : free_vars(c.body)) avoid.insert(fv);
            for (const auto& [o, n] : renames) avoid.insert(n);
            renames[b.name] = avoid_clashes(b.name, avoid);
          }
        }
        ExprPtr body = c.body;
        if (!renames.empty()) {
          Subst rename_subst;
          std::set<Name> rfv;
          for (const auto& b : binders) {
            auto it = renames.find(b.name);
            if (it != renames.end()) {
              rename_subst[b.name] = e_var(it->second, b.type);
              rfv.insert(it->second);
            }
          }
          body = subst_rec(body, rename_subst, rfv);
          c.pattern = rename_pattern(c.pattern, renames);
        }
        std::set<Name> inner_fvs;
        for (const auto& [k2, v] : inner)
          for (const Name& fv : free_vars(v)) inner_fvs.insert(fv);
        c.body = subst_rec(body, inner, inner_fvs);
      }
      return out;
    }
    default: {
      auto out = std::make_shared<Expr>(*e);
      for (auto& a : out->args) a = subst_rec(a, s, range_fvs);
      return out;
    }
  }
}

}  // namespace detail

// Capture-avoiding simultaneous substitution.
inline ExprPtr substitute(const ExprPtr& e, const Subst& s) {
  if (s.empty()) return e;
  std::set<Name> range_fvs;
  for (const auto& [k, v] : s)
    for (const Name& fv : free_vars(v)) range_fvs.insert(fv);
  return detail::subst_rec(e, s, range_fvs);
}

// ----- definitions ---------------------------------------------------------------

struct FunDef {
  Name name;
  SourceSpan span;
  std::vector<Name> typarams;
  std::vector<Param> params;
  TypePtr ret;
  ExprPtr precondition;  // optional
  ExprPtr body;
  Param post_binder;     // meaningful iff postcondition != null
  ExprPtr postcondition; // optional, Bool-typed under post_binder
  bool holds = false;
  bool has_proof = false;
  std::string proof_method;
  bool has_library = false;
  std::string library_target;
};

struct CoreProgram {
  std::string file;
  std::vector<DataTypeDef> datatypes;
  std::vector<FunDef> functions;
  std::map<std::string, Name> toplevel;
  std::map<std::string, std::vector<ScopeEntry>> fun_scopes;
  // Continuation of the resolver's per-(base, kind) suffix counters, so later
  // phases can mint fresh hygienic names deterministically.
  std::map<std::pair<std::string, NameKind>, int> name_counters;

  const DataTypeDef* find_datatype(const Name& n) const {
    for (const auto& d : datatypes)
      if (d.name == n) return &d;
    return nullptr;
  }
  const FunDef* find_function(const Name& n) const {
    for (const auto& f : functions)
      if (f.name == n) return &f;
    return nullptr;
  }
  // Locates the constructor signature and its owning datatype.
  std::pair<const DataTypeDef*, const CtorSig*> find_ctor(const Name& n) const {
    for (const auto& d : datatypes)
      for (const auto& c : d.ctors)
        if (c.name == n) return {&d, &c};
    return {nullptr, nullptr};
  }
};

// Mints hygienic names that cannot clash with existing ones; shared counter
// map is copied per use site so minting stays deterministic per phase.
class FreshNames {
 public:
  FreshNames() = default;
  explicit FreshNames(std::map<std::pair<std::string, NameKind>, int> counters)
      : counters_(std::move(counters)) {}

  Name fresh(const std::string& base, NameKind kind) {
    int& n = counters_[{base, kind}];
    return Name{base, n++, kind, 0};
  }

 private:
  std::map<std::pair<std::string, NameKind>, int> counters_;
};

// ----- rendering -----------------------------------------------------------------

// Internal, Scala-ish rendering for diagnostics and CLI dumps.
inline std::string expr_str(const ExprPtr& e);

inline std::string pattern_str(const PatternPtr& p) {
  switch (p->k) {
    case PatK::Wild: return "_";
    case PatK::Var: return p->name.str();
    case PatK::Ctor: {
      std::string out = p->name.base;
      if (!p->args.empty()) {
        out += "(";
        for (size_t i = 0; i < p->args.size(); ++i) {
          if (i) out += ", ";
          out += pattern_str(p->args[i]);
        }
        out += ")";
      } else {
        out += "()";
      }
      return out;
    }
    case PatK::Tuple: {
      std::string out = "(";
      for (size_t i = 0; i < p->args.size(); ++i) {
        if (i) out += ", ";
        out += pattern_str(p->args[i]);
      }
      return out + ")";
    }
    case PatK::IntLit: return p->int_val.str();
    case PatK::BoolLit: return p->bool_val ? "true" : "false";
  }
  return "?";
}

inline std::string expr_str(const ExprPtr& e) {
  switch (e->k) {
    case ExprK::Var: return e->name.str();
    case ExprK::IntLit: return e->int_val.str();
    case ExprK::BoolLit: return e->bool_val ? "true" : "false";
    case ExprK::Ctor: {
      std::string out = e->name.base + "(";
      for (size_t i = 0; i < e->args.size(); ++i) {
        if (i) out += ", ";
        out += expr_str(e->args[i]);
      }
      return out + ")";
    }
    case ExprK::App: {
      std::string out = expr_str(e->args[0]) + "(";
      for (size_t i = 1; i < e->args.size(); ++i) {
        if (i > 1) out += ", ";
        out += expr_str(e->args[i]);
      }
      return out + ")";
    }
    case ExprK::Lambda: {
      std::string out = "(\\(";
      for (size_t i = 0; i < e->lparams.size(); ++i) {
        if (i) out += ", ";
        out += e->lparams[i].name.str();
      }
      return out + ") => " + expr_str(e->args[0]) + ")";
    }
    case ExprK::Tuple: {
      std::string out = "(";
      for (size_t i = 0; i < e->args.size(); ++i) {
        if (i) out += ", ";
        out += expr_str(e->args[i]);
      }
      return out + ")";
    }
    case ExprK::Proj:
      return expr_str(e->args[0]) + "._" + std::to_string(e->proj_index);
    case ExprK::If:
      return "(if (" + expr_str(e->args[0]) + ") " + expr_str(e->args[1]) +
             " else " + expr_str(e->args[2]) + ")";
    case ExprK::Let:
      return "{val " + e->let_name.str() + " = " + expr_str(e->args[0]) + "; " +
             expr_str(e->args[1]) + "}";
    case ExprK::Match: {
      std::string out = "(" + expr_str(e->args[0]) + " match {";
      for (const auto& c : e->clauses)
        out += " case " + pattern_str(c.pattern) + " => " + expr_str(c.body) + ";";
      return out + " })";
    }
    case ExprK::Binop: {
      const char* sym = e->bop == BinOp::Eq ? "==" : binop_sym(e->bop);
      if (e->bop == BinOp::And) sym = "&&";
      if (e->bop == BinOp::Or) sym = "||";
      return "(" + expr_str(e->args[0]) + " " + sym + " " + expr_str(e->args[1]) +
             ")";
    }
    case ExprK::Unop:
      return std::string("(") + (e->uop == UnOp::Not ? "!" : "-") +
             expr_str(e->args[0]) + ")";
  }
  return "?";
}

}  // namespace pscv
