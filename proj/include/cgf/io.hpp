#pragma once

// Function files and JSON exports.

#include <string>
#include <string_view>

#include "cgf/additivity.hpp"
#include "cgf/covering.hpp"
#include "cgf/pwl.hpp"

namespace cgf {

/// Line-numbered parse failure in a function file.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Format:
///   # comment
///   name: kzh
///   f: 4/5
///   special_intervals: 219/800 .. 269/800, 171/800 .. 221/800
///   x | left | value | right
PwlFunction parse_function(std::string_view text);
std::string format_function(const PwlFunction& pi);

PwlFunction read_function_file(const std::string& path);
void write_function_file(const std::string& path, const PwlFunction& pi);

/// Catalog name or path to a function file.
PwlFunction load_function(const std::string& name_or_path);

std::string faces_json(const DeltaComplex& dc, const std::vector<OpenInterval>& special);
std::string additivity_json(const AdditivityReport& report, const std::vector<OpenInterval>& special);
/// Inverse of additivity_json for the face classification.
std::vector<std::pair<Triple, FaceClass>> parse_additivity_json(std::string_view text);
std::string covering_json(const CoveringResult& cov, const ComplexP& P);

}  // namespace cgf
