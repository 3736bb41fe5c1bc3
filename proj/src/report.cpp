#include "angelesco/report.hpp"

#include <fstream>
#include <iostream>

namespace angelesco {

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  throw ValidationError("unknown format '" + s + "' (json or csv)");
}

std::string render_json(const Report& r) {
  nlohmann::json j;
  j["kind"] = r.kind;
  j["pass"] = r.pass;
  j["data"] = r.data;
  j["table"] = {{"columns", r.columns}, {"rows", r.rows}};
  return j.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_csv(const Report& r) {
  std::string out;
  auto line = [&](const std::vector<std::string>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ',';
      out += csv_field(v[i]);
    }
    out += '\n';
  };
  line(r.columns);
  for (const auto& row : r.rows) line(row);
  return out;
}

std::string render(const Report& r, ReportFormat f) { return f == ReportFormat::Json ? render_json(r) : render_csv(r); }

Report report_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Report r;
  r.kind = j.at("kind").get<std::string>();
  r.pass = j.at("pass").get<bool>();
  r.data = j.at("data");
  r.columns = j.at("table").at("columns").get<std::vector<std::string>>();
  r.rows = j.at("table").at("rows").get<std::vector<std::vector<std::string>>>();
  return r;
}

void emit_report(const Report& r, ReportFormat f, const std::string& path) {
  const std::string text = render(r, f);
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    if (!std::cout) throw IoError("cannot write to stdout");
    return;
  }
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  os << text;
  os.close();
  if (!os) throw IoError("write to '" + path + "' failed");
}

}  // namespace angelesco
