#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace fdsec_cli {

/// Shortest round-trip decimal form; "inf", "-inf" and "nan" for non-finite values.
std::string format_number(double x);

/// One CSV cell.
struct Cell {
    std::string text;

    Cell(double x) : text(format_number(x)) {}
    Cell(int x) : text(std::to_string(x)) {}
    Cell(unsigned long long x) : text(std::to_string(x)) {}
    Cell(unsigned long x) : text(std::to_string(x)) {}
    Cell(std::optional<double> x) : text(x ? format_number(*x) : std::string()) {}
    Cell(const char* s) : text(s) {}
    Cell(std::string s) : text(std::move(s)) {}
};

using Row = std::vector<std::pair<std::string, Cell>>;

/// Table with a header fixed by the first row; later rows must repeat its columns in order.
class CsvTable {
public:
    void add(const Row& row);
    bool empty() const noexcept { return rows_.empty(); }
    std::size_t size() const noexcept { return rows_.size(); }
    const std::vector<std::string>& header() const noexcept { return header_; }
    void write(std::ostream& os) const;
    /// Writes to path, throwing IoError on failure.
    void save(const std::string& path) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace fdsec_cli
