// Hygienic names: every identifier is renamed to (base, suffix, kind),
// unique per program. The internal rendering is base'N; emitted theory text
// uses base_N. Library-universe names render by their display alias.
#pragma once

#include <string>
#include <tuple>

namespace pscv {

enum class NameKind { Datatype, Constructor, Function, Variable, TypeVar };

inline const char* name_kind_str(NameKind k) {
  switch (k) {
    case NameKind::Datatype: return "datatype";
    case NameKind::Constructor: return "constructor";
    case NameKind::Function: return "function";
    case NameKind::Variable: return "variable";
    case NameKind::TypeVar: return "typevar";
  }
  return "?";
}

// universe 0 = the program under analysis, 1 = the built-in base theory.
struct Name {
  std::string base;
  int suffix = -1;  // -1: not yet resolved
  NameKind kind = NameKind::Variable;
  int universe = 0;

  bool resolved() const { return suffix >= 0; }

  friend bool operator==(const Name& a, const Name& b) {
    return a.suffix == b.suffix && a.universe == b.universe &&
           a.kind == b.kind && a.base == b.base;
  }
  friend bool operator!=(const Name& a, const Name& b) { return !(a == b); }
  friend bool operator<(const Name& a, const Name& b) {
    return std::tie(a.universe, a.kind, a.base, a.suffix) <
           std::tie(b.universe, b.kind, b.base, b.suffix);
  }

  // Internal (diagnostic) rendering.
  std::string str() const {
    std::string u = universe == 0 ? "" : "~";
    return u + base + "'" + std::to_string(suffix);
  }
};

}  // namespace pscv
