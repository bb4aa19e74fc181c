#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ipdyn {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

/// RFC 4180 style: fields holding a comma, quote or newline are quoted.
/// An empty table still carries its header line.
std::string to_csv(const Table& table);

/// Output of one subcommand: a CSV table and a plain-text summary. A
/// nonzero status is the exit code for a run that produced artifacts but
/// did not reach its goal.
struct Report {
  std::string name;
  Table table;
  std::string text;
  int status = 0;
};

/// With out_dir, writes out_dir/<name>.csv and out_dir/<name>.txt (IoError
/// on failure); otherwise the CSV goes to csv_out and the text to text_out.
void emit_report(const Report& report, const std::optional<std::string>& out_dir,
                 std::ostream& csv_out, std::ostream& text_out);

}  // namespace ipdyn
