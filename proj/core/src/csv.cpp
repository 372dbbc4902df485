#include "freightstat/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <stdexcept>
#include <string>

namespace freightstat {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

bool parse_number(const std::string& text, double& out) {
    const std::string t = trim(text);
    if (t.empty()) {
        return false;
    }
    // Locale-independent full-string parse; from_chars does not accept a
    // leading '+', so strip one.
    const char* first = t.data();
    const char* last = t.data() + t.size();
    if (*first == '+') {
        ++first;
        if (first == last) {
            return false;
        }
    }
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last && std::isfinite(out);
}

// RFC-4180 record reader: returns false at end of input, otherwise fills
// `fields` with one parsed record (which may span multiple physical lines
// when quoted) and reports the record's starting line in `line_no`.
bool read_record(std::istream& in, char delimiter, std::vector<std::string>& fields,
                 std::size_t& line_counter, std::size_t& line_no) {
    fields.clear();
    std::string field;
    bool in_quotes = false;
    bool any = false;
    int ch;
    line_no = line_counter + 1;
    while ((ch = in.get()) != std::istream::traits_type::eof()) {
        any = true;
        const char c = static_cast<char>(ch);
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    field.push_back('"');
                    in.get();
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line_counter;
                field.push_back(c);
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == delimiter) {
            fields.push_back(field);
            field.clear();
        } else if (c == '\n') {
            ++line_counter;
            if (!field.empty() || !fields.empty()) {
                fields.push_back(field);
                return true;
            }
            // blank line: skip and keep reading
            line_no = line_counter + 1;
            any = false;
        } else if (c != '\r') {
            field.push_back(c);
        }
    }
    if (in_quotes) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": unterminated quoted field");
    }
    if (any) {
        ++line_counter;
        fields.push_back(field);
        return true;
    }
    return false;
}

}  // namespace

std::string to_string(ColumnType type) {
    return type == ColumnType::numeric ? "numeric" : "categorical";
}

Dataset::Dataset(std::vector<std::string> column_names,
                 std::vector<std::vector<std::string>> columns,
                 const CsvOptions& options)
    : names_(std::move(column_names)),
      cells_(std::move(columns)),
      missing_marker_(options.missing_marker) {
    if (cells_.size() != names_.size()) {
        throw std::invalid_argument("column name/data count mismatch");
    }
    {
        std::set<std::string> unique(names_.begin(), names_.end());
        if (unique.size() != names_.size()) {
            throw std::runtime_error("duplicate column names in header");
        }
    }
    rows_ = cells_.empty() ? 0 : cells_.front().size();
    for (const auto& col : cells_) {
        if (col.size() != rows_) {
            throw std::invalid_argument("columns have differing lengths");
        }
    }

    types_.resize(names_.size());
    numeric_.resize(names_.size());
    missing_.resize(names_.size());
    for (std::size_t c = 0; c < names_.size(); ++c) {
        auto& missing = missing_[c];
        missing.resize(rows_);
        std::vector<double> parsed(rows_, 0.0);
        bool all_numeric = true;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (trim(cells_[c][r]) == missing_marker_) {
                missing[r] = true;
                continue;
            }
            if (!parse_number(cells_[c][r], parsed[r])) {
                all_numeric = false;
            }
        }

        const auto forced = options.type_overrides.find(names_[c]);
        if (forced != options.type_overrides.end()) {
            if (forced->second == ColumnType::numeric && !all_numeric) {
                for (std::size_t r = 0; r < rows_; ++r) {
                    double unused = 0;
                    if (!missing[r] && !parse_number(cells_[c][r], unused)) {
                        throw std::runtime_error("column '" + names_[c] + "', row " +
                                                 std::to_string(r + 1) + ": cell '" +
                                                 cells_[c][r] +
                                                 "' cannot be parsed as a number");
                    }
                }
            }
            types_[c] = forced->second;
        } else {
            types_[c] = all_numeric ? ColumnType::numeric : ColumnType::categorical;
        }
        if (types_[c] == ColumnType::numeric) {
            numeric_[c] = std::move(parsed);
        }
    }
}

std::size_t Dataset::column_index(const std::string& name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        throw std::invalid_argument("unknown column '" + name + "'");
    }
    return static_cast<std::size_t>(it - names_.begin());
}

ColumnType Dataset::column_type(const std::string& name) const {
    return types_[column_index(name)];
}

Sample Dataset::numeric_column(const std::string& name) const {
    const auto c = column_index(name);
    if (types_[c] != ColumnType::numeric) {
        throw std::invalid_argument("column '" + name + "' is categorical, not numeric");
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        if (missing_[c][r]) {
            throw std::domain_error("column '" + name + "' has a missing value at row " +
                                    std::to_string(r + 1));
        }
    }
    return Sample(numeric_[c]);
}

std::vector<std::string> Dataset::categorical_column(const std::string& name) const {
    const auto c = column_index(name);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (missing_[c][r]) {
            throw std::domain_error("column '" + name + "' has a missing value at row " +
                                    std::to_string(r + 1));
        }
    }
    return cells_[c];
}

Dataset parse_csv(std::istream& in, const CsvOptions& options) {
    std::vector<std::string> fields;
    std::size_t line_counter = 0;
    std::size_t line_no = 0;

    std::vector<std::string> names;
    std::size_t width = 0;
    if (options.header) {
        if (!read_record(in, options.delimiter, fields, line_counter, line_no)) {
            throw std::runtime_error("empty input: missing header row");
        }
        for (auto& f : fields) {
            names.push_back(trim(f));
        }
        width = names.size();
    }

    std::vector<std::vector<std::string>> columns(width);
    while (read_record(in, options.delimiter, fields, line_counter, line_no)) {
        if (width == 0) {
            width = fields.size();
            columns.resize(width);
        }
        if (fields.size() != width) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": expected " +
                                     std::to_string(width) + " columns, found " +
                                     std::to_string(fields.size()));
        }
        for (std::size_t c = 0; c < width; ++c) {
            columns[c].push_back(fields[c]);
        }
    }
    if (!options.header) {
        for (std::size_t c = 1; c <= width; ++c) {
            names.push_back("col" + std::to_string(c));
        }
    }
    if (width == 0) {
        throw std::runtime_error("empty input: no columns");
    }
    return Dataset(std::move(names), std::move(columns), options);
}

Dataset load_csv(const std::string& path, const CsvOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file '" + path + "'");
    }
    return parse_csv(in, options);
}

}  // namespace freightstat
