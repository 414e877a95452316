#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mero/funcrep.hpp"

namespace mero {

/// Text form of a function input:
///
///     disk <center_re> <center_im> <radius>
///     expr <expression>
///     pole <re> <im> <max_order>      (zero or more)
///     rescaled <note>                  (optional)
///
/// Blank lines and lines starting with '#' are ignored.
struct FunctionFile {
  Disk disk{0.0, 1.0};
  std::string expr;
  std::vector<DeclaredPole> poles;
  /// Set when the expression is a rescaled stand-in for another function.
  std::optional<std::string> rescaled;
};

/// Throws FileFormatError for bad directives; the expression itself is not
/// parsed here.
FunctionFile parse_function_file(std::string_view text);
FunctionFile read_function_file(const std::filesystem::path& path);
std::string format_function_file(const FunctionFile& file);

/// Builds the function: contour extraction when poles are declared,
/// from_expr otherwise. Throws ParseError for a bad expression.
MeroFunction load_function(const FunctionFile& file);

FunctionFile to_function_file(const MeroFunction& f);

}  // namespace mero
