#include "torilink/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace torilink {

OutputFormat parse_format(const std::string& name) {
  if (name == "human") return OutputFormat::Human;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format: " + name);
}

Table::Table(std::string title, std::vector<std::string> columns)
    : title_(std::move(title)), columns_(std::move(columns)) {}

void Table::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns_.size())
    throw std::invalid_argument("row width does not match column count");
  rows_.push_back(std::move(cells));
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void render_human(const Table& t, std::ostringstream& os) {
  os << "== " << t.title() << " ==\n";
  std::vector<size_t> width(t.columns().size());
  for (size_t c = 0; c < t.columns().size(); ++c)
    width[c] = t.columns()[c].size();
  for (const auto& row : t.rows())
    for (size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());

  const auto line = [&](const std::vector<std::string>& cells) {
    for (size_t c = 0; c < cells.size(); ++c) {
      os << cells[c];
      if (c + 1 < cells.size())
        os << std::string(width[c] - cells[c].size() + 2, ' ');
    }
    os << '\n';
  };
  line(t.columns());
  for (const auto& row : t.rows()) line(row);
}

void render_csv(const Table& t, std::ostringstream& os) {
  os << "# " << t.title() << '\n';
  const auto line = [&](const std::vector<std::string>& cells) {
    for (size_t c = 0; c < cells.size(); ++c) {
      if (c) os << ',';
      os << csv_escape(cells[c]);
    }
    os << '\n';
  };
  line(t.columns());
  for (const auto& row : t.rows()) line(row);
}

}  // namespace

std::string render_tables(const std::vector<Table>& tables, OutputFormat f) {
  if (f == OutputFormat::Json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const Table& t : tables) {
      nlohmann::ordered_json jt;
      jt["title"] = t.title();
      jt["columns"] = t.columns();
      jt["rows"] = t.rows();
      doc.push_back(jt);
    }
    return doc.dump(2) + "\n";
  }

  std::ostringstream os;
  for (size_t i = 0; i < tables.size(); ++i) {
    if (i) os << '\n';
    if (f == OutputFormat::Human) render_human(tables[i], os);
    else render_csv(tables[i], os);
  }
  return os.str();
}

}  // namespace torilink
