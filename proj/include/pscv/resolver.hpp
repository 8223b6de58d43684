// Hygienic renaming: every binder and reference is resolved to a Name with a
// suffix that is unique per (base, kind) in document order. Also records the
// per-function scope tables used later to resolve `<var _>` references in
// @proof annotations.
#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pscv/surface.hpp"

namespace pscv {

class Resolver {
 public:
  explicit Resolver(SurfaceProgram& prog) : prog_(prog) {}

  void run() {
    declare_toplevel();
    for (auto& d : prog_.datatypes) resolve_datatype(d);
    for (auto& f : prog_.functions) resolve_function(f);
    prog_.name_counters = counters_;
  }

 private:
  SurfaceProgram& prog_;
  std::map<std::pair<std::string, NameKind>, int> counters_;
  std::map<std::string, Name> functions_;
  std::map<std::string, Name> datatypes_;
  std::map<std::string, std::pair<Name, size_t>> ctors_;  // name -> (Name, arity)
  // Scope stack while walking one function body.
  std::vector<std::map<std::string, Name>> scopes_;
  std::vector<Name> typaram_scope_;
  std::vector<ScopeEntry>* fun_scope_ = nullptr;

  Name fresh(const std::string& base, NameKind kind) {
    int& n = counters_[{base, kind}];
    return Name{base, n++, kind, 0};
  }

  [[noreturn]] static void fail(const std::string& msg, const SourceSpan& span) {
    throw CompileError("resolve", msg, span);
  }

  void declare_toplevel() {
    for (auto& [is_fun, idx] : prog_.order) {
      if (is_fun) {
        SFunDef& f = prog_.functions[idx];
        if (functions_.count(f.name))
          fail("duplicate definition of function '" + f.name + "'", f.span);
        f.resolved = fresh(f.name, NameKind::Function);
        functions_[f.name] = f.resolved;
        prog_.toplevel[f.name] = f.resolved;
      } else {
        SDataDef& d = prog_.datatypes[idx];
        if (datatypes_.count(d.name))
          fail("duplicate definition of datatype '" + d.name + "'", d.span);
        d.resolved = fresh(d.name, NameKind::Datatype);
        datatypes_[d.name] = d.resolved;
        prog_.toplevel[d.name] = d.resolved;
        for (auto& c : d.ctors) {
          if (ctors_.count(c.name))
            fail("duplicate definition of constructor '" + c.name + "'", c.span);
          c.resolved = fresh(c.name, NameKind::Constructor);
          ctors_[c.name] = {c.resolved, c.fields.size()};
        }
      }
    }
  }

  // ----- types ---------------------------------------------------------------

  void resolve_type(STypePtr& t) {
    switch (t->k) {
      case STypeK::Named: {
        if (t->head == "BigInt" || t->head == "Boolean") {
          if (!t->args.empty()) fail("'" + t->head + "' takes no type arguments", t->span);
          return;
        }
        for (auto it = typaram_scope_.rbegin(); it != typaram_scope_.rend(); ++it) {
          if (it->base == t->head) {
            if (!t->args.empty())
              fail("type parameter '" + t->head + "' takes no arguments", t->span);
            t->resolved = *it;
            return;
          }
        }
        auto dt = datatypes_.find(t->head);
        if (dt == datatypes_.end())
          fail("unknown type '" + t->head + "'", t->span);
        size_t arity = 0;
        for (const auto& d : prog_.datatypes)
          if (d.name == t->head) arity = d.typarams.size();
        if (t->args.size() != arity)
          fail("wrong number of type arguments for '" + t->head + "'", t->span);
        t->resolved = dt->second;
        for (auto& a : t->args) resolve_type(a);
        return;
      }
      case STypeK::Tuple:
      case STypeK::Fun:
        for (auto& a : t->args) resolve_type(a);
        return;
    }
  }

  void resolve_datatype(SDataDef& d) {
    typaram_scope_.clear();
    std::set<std::string> seen;
    for (auto& tp : d.typarams) {
      if (!seen.insert(tp).second)
        fail("duplicate type parameter '" + tp + "'", d.span);
      Name n = fresh(tp, NameKind::TypeVar);
      d.typarams_resolved.push_back(n);
      typaram_scope_.push_back(n);
    }
    for (auto& c : d.ctors) {
      std::set<std::string> fields;
      for (auto& f : c.fields) {
        if (!fields.insert(f.text).second)
          fail("duplicate field '" + f.text + "' in constructor '" + c.name + "'",
               f.span);
        f.resolved = fresh(f.text, NameKind::Variable);
        resolve_type(f.type);
      }
    }
    typaram_scope_.clear();
  }

  // ----- terms ---------------------------------------------------------------

  Name bind(const std::string& text, const SourceSpan& span, bool is_param) {
    (void)span;
    Name n = fresh(text, NameKind::Variable);
    scopes_.back()[text] = n;
    if (fun_scope_) fun_scope_->push_back(ScopeEntry{text, n, is_param});
    return n;
  }

  const Name* lookup_var(const std::string& text) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto found = it->find(text);
      if (found != it->end()) return &found->second;
    }
    return nullptr;
  }

  void resolve_pattern(SPatternPtr& p, std::set<std::string>& bound) {
    switch (p->k) {
      case SPatK::Wild:
      case SPatK::IntLit:
      case SPatK::BoolLit:
        return;
      case SPatK::Var: {
        if (!bound.insert(p->text).second)
          fail("variable '" + p->text + "' bound twice in one pattern", p->span);
        p->resolved = bind(p->text, p->span, false);
        return;
      }
      case SPatK::Ctor: {
        auto it = ctors_.find(p->text);
        if (it == ctors_.end())
          fail("unknown constructor '" + p->text + "' in pattern", p->span);
        p->resolved = it->second.first;
        if (p->args.size() != it->second.second)
          fail("constructor '" + p->text + "' expects " +
                   std::to_string(it->second.second) + " arguments, got " +
                   std::to_string(p->args.size()),
               p->span);
        for (auto& a : p->args) resolve_pattern(a, bound);
        return;
      }
      case SPatK::Tuple:
        for (auto& a : p->args) resolve_pattern(a, bound);
        return;
    }
  }

  void resolve_expr(SExprPtr& e) {
    switch (e->k) {
      case SExprK::IntLit:
      case SExprK::BoolLit:
        return;
      case SExprK::Var: {
        if (const Name* n = lookup_var(e->text)) {
          e->resolved = *n;
          return;
        }
        auto fn = functions_.find(e->text);
        if (fn != functions_.end()) {
          e->resolved = fn->second;
          return;
        }
        fail("unresolved name '" + e->text + "'", e->span);
      }
      case SExprK::Ctor: {
        auto it = ctors_.find(e->text);
        if (it == ctors_.end())
          fail("unknown constructor '" + e->text + "'", e->span);
        e->resolved = it->second.first;
        if (e->args.size() != it->second.second)
          fail("constructor '" + e->text + "' expects " +
                   std::to_string(it->second.second) + " arguments, got " +
                   std::to_string(e->args.size()),
               e->span);
        for (auto& a : e->args) resolve_expr(a);
        return;
      }
      case SExprK::Call: {
        // A call target may be a local variable holding a function value, or
        // a top-level function.
        if (const Name* n = lookup_var(e->text)) {
          e->resolved = *n;
        } else {
          auto fn = functions_.find(e->text);
          if (fn == functions_.end())
            fail("unresolved name '" + e->text + "'", e->span);
          e->resolved = fn->second;
        }
        for (auto& a : e->args) resolve_expr(a);
        return;
      }
      case SExprK::Lambda: {
        scopes_.emplace_back();
        for (auto& p : e->lparams) {
          if (p.type) resolve_type(p.type);
          p.resolved = bind(p.text, p.span, false);
        }
        resolve_expr(e->args[0]);
        scopes_.pop_back();
        return;
      }
      case SExprK::Let: {
        resolve_expr(e->args[0]);
        scopes_.emplace_back();
        e->let_resolved = bind(e->let_text, e->span, false);
        resolve_expr(e->args[1]);
        scopes_.pop_back();
        return;
      }
      case SExprK::Match: {
        resolve_expr(e->args[0]);
        for (auto& c : e->clauses) {
          scopes_.emplace_back();
          std::set<std::string> bound;
          resolve_pattern(c.pattern, bound);
          resolve_expr(c.body);
          scopes_.pop_back();
        }
        return;
      }
      case SExprK::Tuple:
      case SExprK::Proj:
      case SExprK::If:
      case SExprK::Binop:
      case SExprK::Unop:
        for (auto& a : e->args) resolve_expr(a);
        return;
      case SExprK::Holds:
      case SExprK::Placeholder:
        fail("internal: stray marker node survived parsing", e->span);
    }
  }

  void resolve_function(SFunDef& f) {
    typaram_scope_.clear();
    std::set<std::string> seen;
    for (auto& tp : f.typarams) {
      if (!seen.insert(tp).second)
        fail("duplicate type parameter '" + tp + "'", f.span);
      Name n = fresh(tp, NameKind::TypeVar);
      f.typarams_resolved.push_back(n);
      typaram_scope_.push_back(n);
    }
    fun_scope_ = &prog_.fun_scopes[f.name];
    scopes_.clear();
    scopes_.emplace_back();
    std::set<std::string> param_names;
    for (auto& p : f.params) {
      if (!param_names.insert(p.text).second)
        fail("duplicate parameter '" + p.text + "'", p.span);
      resolve_type(p.type);
      p.resolved = bind(p.text, p.span, true);
    }
    if (f.ret) resolve_type(f.ret);
    if (f.require_expr) resolve_expr(f.require_expr);
    resolve_expr(f.body);
    if (f.ensuring_lambda) {
      scopes_.emplace_back();
      auto& lam = *f.ensuring_lambda;
      lam.lparams[0].resolved = bind(lam.lparams[0].text, lam.lparams[0].span, false);
      resolve_expr(lam.args[0]);
      scopes_.pop_back();
    }
    scopes_.clear();
    typaram_scope_.clear();
    fun_scope_ = nullptr;
  }
};

// Resolves in place and returns the same program for pipeline chaining.
inline SurfaceProgram& resolve_names(SurfaceProgram& prog) {
  Resolver(prog).run();
  return prog;
}

}  // namespace pscv
