#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace fraclangevin {

/// Malformed CSV input; the message carries source name and line number.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal text that parses back to exactly `x`.
std::string format_double(double x);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  std::size_t rows() const noexcept { return columns.empty() ? 0 : columns.front().size(); }
  /// Index of the column named `name`, or -1.
  int find(const std::string& name) const;
};

/// Comma-separated, '.' decimal, one header row.
void write_csv(std::ostream& out, const CsvTable& table);
void write_csv_file(const std::string& path, const CsvTable& table);

/// Reads a numeric CSV. A first row that does not parse as numbers is taken
/// as the header; otherwise columns are named c0, c1, ...
CsvTable read_csv(std::istream& in, const std::string& source);
CsvTable read_csv_file(const std::string& path);

}  // namespace fraclangevin
