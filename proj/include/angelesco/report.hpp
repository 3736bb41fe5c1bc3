#pragma once

// Serialisation of command results. Numbers are carried as decimal strings;
// output is deterministic (sorted JSON keys, LF line endings).

#include "angelesco/errors.hpp"

#include <string>
#include <vector>

#include <json.hpp>

namespace angelesco {

class IoError : public Error {
 public:
  using Error::Error;
};

enum class ReportFormat { Json, Csv };

ReportFormat parse_format(const std::string& s);

struct Report {
  std::string kind;
  nlohmann::json data = nlohmann::json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool pass = true;  ///< false when a verification inside the command failed
};

std::string render_json(const Report& r);
std::string render_csv(const Report& r);
std::string render(const Report& r, ReportFormat f);
/// Parses render_json output back.
Report report_from_json(const std::string& text);
/// Writes to `path`, or stdout for "" / "-". Throws IoError.
void emit_report(const Report& r, ReportFormat f, const std::string& path);

}  // namespace angelesco
