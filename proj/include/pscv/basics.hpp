// Shared primitives: arbitrary-precision numbers, source locations, errors.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pscv {

// Unbounded integers (surface BigInt) and exact rationals (linarith certificates).
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// 1-based text coordinates into one source file.
struct SourceSpan {
  std::string file;
  int line = 1;
  int column = 1;
  int length = 1;

  std::string str() const {
    return file + ":" + std::to_string(line) + ":" + std::to_string(column);
  }
  bool operator==(const SourceSpan&) const = default;
};

// A diagnostic produced by any pipeline stage. `stage` names the phase that
// raised it (lex, parse, resolve, elaborate, positivity, ...).
struct Diagnostic {
  std::string stage;
  std::string message;
  SourceSpan span;

  std::string str() const { return span.str() + ": " + stage + ": " + message; }
};

// Hard front-end failure: the program cannot be processed further.
class CompileError : public std::runtime_error {
 public:
  CompileError(std::string stage, std::string message, SourceSpan span)
      : std::runtime_error(span.str() + ": " + stage + ": " + message),
        diag{std::move(stage), std::move(message), std::move(span)} {}
  Diagnostic diag;
};

// FNV-1a, used for stable content hashes in reports (diffing, not security).
inline std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace pscv
