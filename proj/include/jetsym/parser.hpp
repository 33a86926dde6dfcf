#pragma once

// Text format for evolution systems:
//
//   system NAME
//   param alpha
//   vars w z
//   eq w_t = w_xx + 8*w*w_x + (2-4*alpha)*z*z_x
//   eq z_t = ...
//
// Jets are written w, w_x, w_xx, w[k] or w_k; '#' starts a comment.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jetsym/operators.hpp"
#include "jetsym/system.hpp"

namespace jetsym {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, std::string found);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_, column_;
  std::vector<std::string> expected_;
};

class UnknownIdentifier : public std::runtime_error {
 public:
  UnknownIdentifier(std::size_t line, std::size_t column, std::string name);
  const std::string& name() const { return name_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string name_;
  std::size_t line_, column_;
};

class DuplicateEquation : public std::runtime_error {
 public:
  DuplicateEquation(std::size_t line, std::string var);
};

class MissingEquation : public std::runtime_error {
 public:
  explicit MissingEquation(std::string var);
};

EvolutionSystem parse_system(std::string_view src);
/// Text that parse_system maps back to an identical system.
std::string render_system(const EvolutionSystem& s);

/// Reads the rendering of to_string(OpEntry): "(c)*D^k + (c) + (c)*Dinv".
OpEntry parse_operator_entry(std::string_view src, const VarNames& names);

}  // namespace jetsym
