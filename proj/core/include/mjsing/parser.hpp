#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mjsing/error.hpp"
#include "mjsing/groebner.hpp"

namespace mjsing::cli {

/// Parse failure with a 1-based position. what() reads
/// "line L, column C: message".
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_, column_;
  std::string message_;
};

/// Parses one polynomial expression over the declared variables. `line` and
/// `column` locate the first character of `text` for error reporting.
Polynomial parse_poly(std::string_view text, const VarListPtr& vars, int line = 1, int column = 1);

struct InputDocument {
  VarListPtr vars;
  std::vector<Polynomial> generators;
  std::vector<Polynomial> ideal_a;
  std::optional<Rational> t;
  std::optional<int> levels;
  std::optional<int> order;

  IdealPresentation ideal() const { return IdealPresentation(vars, generators); }
  bool has_weight_ideal() const { return !ideal_a.empty(); }
};

/// Reads the line-oriented input format:
///   vars: x, y, z
///   gen: x^2 + y^3 + z^5
///   ideal_a: y        (optional, repeatable)
///   t: 1/2            (optional)
///   levels: 3         (optional)
///   order: 12         (optional)
/// '#' starts a comment.
InputDocument parse_document(std::string_view text);
InputDocument load_document(const std::filesystem::path& path);

}  // namespace mjsing::cli
