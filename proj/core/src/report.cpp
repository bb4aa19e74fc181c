#include "ipdyn/report.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

#include "ipdyn/errors.hpp"

namespace ipdyn {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void append_row(std::string& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    out += csv_field(row[i]);
  }
  out += '\n';
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) fail(ErrorCode::IoError, "write to '" + path.string() + "' failed");
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  append_row(out, table.header);
  for (const auto& row : table.rows) append_row(out, row);
  return out;
}

void emit_report(const Report& report, const std::optional<std::string>& out_dir,
                 std::ostream& csv_out, std::ostream& text_out) {
  const std::string csv = to_csv(report.table);
  if (!out_dir) {
    csv_out << csv;
    text_out << report.text;
    return;
  }
  const std::filesystem::path dir(*out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(ErrorCode::IoError, "cannot create '" + dir.string() + "': " + ec.message());
  write_file(dir / (report.name + ".csv"), csv);
  write_file(dir / (report.name + ".txt"), report.text);
}

}  // namespace ipdyn
