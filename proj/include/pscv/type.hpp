// Core types: type variables, fully applied datatypes, unbounded Int, Bool,
// tuples, and first-order function types (parameter positions only).
// Meta nodes exist only during elaboration and never escape it.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pscv/basics.hpp"
#include "pscv/name.hpp"

namespace pscv {

enum class TypeK { Var, Data, Int, Bool, Tuple, Fun, Meta };

struct Type;
using TypePtr = std::shared_ptr<const Type>;

struct Type {
  TypeK k = TypeK::Int;
  Name name;                  // Var / Data
  std::vector<TypePtr> args;  // Data args; Tuple elems; Fun params then result
  int meta_id = -1;
};

inline TypePtr t_int() {
  static const TypePtr t = std::make_shared<Type>(Type{TypeK::Int});
  return t;
}
inline TypePtr t_bool() {
  static const TypePtr t = std::make_shared<Type>(Type{TypeK::Bool});
  return t;
}
inline TypePtr t_var(Name n) {
  auto t = std::make_shared<Type>();
  t->k = TypeK::Var;
  t->name = std::move(n);
  return t;
}
inline TypePtr t_data(Name n, std::vector<TypePtr> args) {
  auto t = std::make_shared<Type>();
  t->k = TypeK::Data;
  t->name = std::move(n);
  t->args = std::move(args);
  return t;
}
inline TypePtr t_tuple(std::vector<TypePtr> elems) {
  auto t = std::make_shared<Type>();
  t->k = TypeK::Tuple;
  t->args = std::move(elems);
  return t;
}
inline TypePtr t_fun(std::vector<TypePtr> params, TypePtr result) {
  auto t = std::make_shared<Type>();
  t->k = TypeK::Fun;
  t->args = std::move(params);
  t->args.push_back(std::move(result));
  return t;
}
inline TypePtr t_meta(int id) {
  auto t = std::make_shared<Type>();
  t->k = TypeK::Meta;
  t->meta_id = id;
  return t;
}

inline bool type_equal(const TypePtr& a, const TypePtr& b) {
  if (a.get() == b.get()) return true;
  if (a->k != b->k) return false;
  switch (a->k) {
    case TypeK::Int:
    case TypeK::Bool:
      return true;
    case TypeK::Meta:
      return a->meta_id == b->meta_id;
    case TypeK::Var:
    case TypeK::Data:
      if (!(a->name == b->name)) return false;
      break;
    case TypeK::Tuple:
    case TypeK::Fun:
      break;
  }
  if (a->args.size() != b->args.size()) return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!type_equal(a->args[i], b->args[i])) return false;
  return true;
}

// Substitution of type variables (used to instantiate polymorphic signatures).
inline TypePtr type_subst(const TypePtr& t, const std::map<Name, TypePtr>& s) {
  switch (t->k) {
    case TypeK::Int:
    case TypeK::Bool:
    case TypeK::Meta:
      return t;
    case TypeK::Var: {
      auto it = s.find(t->name);
      return it == s.end() ? t : it->second;
    }
    case TypeK::Data: {
      std::vector<TypePtr> args;
      args.reserve(t->args.size());
      for (const auto& a : t->args) args.push_back(type_subst(a, s));
      return t_data(t->name, std::move(args));
    }
    case TypeK::Tuple:
    case TypeK::Fun: {
      auto out = std::make_shared<Type>();
      out->k = t->k;
      out->args.reserve(t->args.size());
      for (const auto& a : t->args) out->args.push_back(type_subst(a, s));
      return out;
    }
  }
  return t;
}

inline std::string type_str(const TypePtr& t) {
  switch (t->k) {
    case TypeK::Int: return "BigInt";
    case TypeK::Bool: return "Boolean";
    case TypeK::Meta: return "?" + std::to_string(t->meta_id);
    case TypeK::Var: return t->name.base;
    case TypeK::Data: {
      std::string out = t->name.base;
      if (!t->args.empty()) {
        out += "[";
        for (size_t i = 0; i < t->args.size(); ++i) {
          if (i) out += ", ";
          out += type_str(t->args[i]);
        }
        out += "]";
      }
      return out;
    }
    case TypeK::Tuple: {
      std::string out = "(";
      for (size_t i = 0; i < t->args.size(); ++i) {
        if (i) out += ", ";
        out += type_str(t->args[i]);
      }
      return out + ")";
    }
    case TypeK::Fun: {
      std::string out = "(";
      for (size_t i = 0; i + 1 < t->args.size(); ++i) {
        if (i) out += ", ";
        out += type_str(t->args[i]);
      }
      return out + ") => " + type_str(t->args.back());
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------

struct CtorField {
  Name name;
  TypePtr type;
};

struct CtorSig {
  Name name;
  std::vector<CtorField> fields;
  SourceSpan span;
};

struct DataTypeDef {
  Name name;
  std::vector<Name> typarams;
  std::vector<CtorSig> ctors;
  SourceSpan span;
  // Set when the datatype was identified with a base-theory datatype; the
  // program then uses the base names throughout and this def is display-only.
  bool adopted = false;
  Name adopted_as;
};

}  // namespace pscv
