#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "xel/core.hpp"
#include "xel/error.hpp"
#include "xel/model.hpp"

namespace xel {

/// Malformed XML. Line and column are 1-based.
class XmlSyntaxError : public Error {
 public:
  XmlSyntaxError(const std::string& message, long line, long column)
      : Error("XML_SYNTAX", message + " at line " + std::to_string(line) +
                                ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  long line() const noexcept { return line_; }
  long column() const noexcept { return column_; }

 private:
  long line_;
  long column_;
};

/// Well-formed XML that does not follow the XEL layout. `path` locates the
/// element, e.g. `/xel/meta/process[1]/activity[2]`.
class SchemaError : public Error {
 public:
  SchemaError(std::string code, const std::string& message, std::string path)
      : Error(std::move(code), message + " (at " + path + ")"),
        path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// XES input that cannot be lifted into a XEL log.
class ImportError : public Error {
 public:
  using Error::Error;
};

struct ParseOptions {
  /// Skip unknown elements and attributes with a warning instead of failing.
  bool lenient = false;
};

struct ParsedLog {
  XelLog log;
  /// Validation warnings plus, in lenient mode, skipped-content notices.
  std::vector<Finding> warnings;
};

/// Parses a XEL 1.0 document and validates it. Throws XmlSyntaxError,
/// SchemaError or ValidationFailed.
ParsedLog parse_xel(std::string_view bytes, const ParseOptions& options = {});

/// Serializes a valid log. Output is deterministic: model order, fixed
/// attribute order, two-space indentation, `\n` line ends.
std::string write_xel(const XelLog& log);

/// Lifts an XES log (concept, time and org extensions) into XEL: one
/// synthetic process, one single-step activity per distinct event name,
/// one case per trace and `Resource` objects for `org:resource`.
XelLog import_xes(std::string_view bytes);

/// Flat CSV at activity (`case_id,activity,start,end`) or step
/// (`case_id,activity,step,timestamp,objects`) granularity.
std::string export_csv(const XelLog& log, Granularity granularity);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace xel
