#include "csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "errors.hpp"

namespace fdsec_cli {

std::string format_number(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void CsvTable::add(const Row& row) {
    if (header_.empty()) {
        for (const auto& [name, cell] : row) {
            header_.push_back(name);
        }
    } else {
        if (row.size() != header_.size()) {
            throw std::logic_error("csv row width differs from header");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i].first != header_[i]) {
                throw std::logic_error("csv column " + row[i].first + " out of order");
            }
        }
    }
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (const auto& [name, cell] : row) {
        cells.push_back(cell.text);
    }
    rows_.push_back(std::move(cells));
}

void CsvTable::write(std::ostream& os) const {
    auto line = [&os](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) {
                os << ',';
            }
            os << cells[i];
        }
        os << '\n';
    };
    line(header_);
    for (const auto& r : rows_) {
        line(r);
    }
}

void CsvTable::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }
    write(out);
    out.flush();
    if (!out) {
        throw IoError("failed writing " + path);
    }
}

}  // namespace fdsec_cli
