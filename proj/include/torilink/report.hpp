#ifndef TORILINK_REPORT_HPP
#define TORILINK_REPORT_HPP

#include <string>
#include <vector>

namespace torilink {

enum class OutputFormat { Human, Csv, Json };

// Accepts "human", "csv" or "json"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& name);

// Rectangular table of preformatted strings with named columns.  All
// renderings are deterministic byte for byte.
class Table {
 public:
  Table(std::string title, std::vector<std::string> columns);

  void add_row(std::vector<std::string> cells);

  const std::string& title() const { return title_; }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

 private:
  std::string title_;
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

// Renders the tables as one document.  Human output aligns columns, csv
// prefixes each table with a "# title" comment line, json produces an
// array of {title, columns, rows} objects in input order.
std::string render_tables(const std::vector<Table>& tables, OutputFormat f);

}  // namespace torilink

#endif
