#pragma once

#include <stdexcept>
#include <string>

namespace tropbun {

// Malformed or semantically invalid input. CLI maps this to exit code 2.
struct invalid_input : std::runtime_error {
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// A computation would exceed a configured size bound. CLI exit code 3.
struct size_limit_error : std::runtime_error {
  explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check failed. Always a bug, never bad input. CLI exit code 4.
struct internal_error : std::runtime_error {
  explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw invalid_input(what);
}

inline void check_internal(bool cond, const std::string& what) {
  if (!cond) throw internal_error(what);
}

}  // namespace tropbun
