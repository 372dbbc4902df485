#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "freightstat/sample.hpp"

namespace freightstat {

enum class ColumnType { numeric, categorical };

[[nodiscard]] std::string to_string(ColumnType type);

struct CsvOptions {
    char delimiter = ',';
    bool header = true;
    std::string missing_marker = "NA";
    /// Overrides the inferred type per column name. Forcing a column
    /// numeric fails loudly on the first unparseable cell.
    std::map<std::string, ColumnType> type_overrides;
};

/// Rectangular dataset with per-column type inference: a column is
/// numeric iff every non-missing cell parses as a finite real.
class Dataset {
public:
    Dataset(std::vector<std::string> column_names,
            std::vector<std::vector<std::string>> columns,
            const CsvOptions& options);

    [[nodiscard]] std::size_t row_count() const noexcept { return rows_; }
    [[nodiscard]] std::size_t column_count() const noexcept { return names_.size(); }
    [[nodiscard]] const std::vector<std::string>& column_names() const noexcept { return names_; }
    [[nodiscard]] const std::vector<ColumnType>& column_types() const noexcept { return types_; }

    [[nodiscard]] std::size_t column_index(const std::string& name) const;
    [[nodiscard]] ColumnType column_type(const std::string& name) const;

    /// Numeric view of a column; throws if the column is categorical or
    /// contains missing values (the message carries the 1-based row).
    [[nodiscard]] Sample numeric_column(const std::string& name) const;

    /// Categorical view of a column (any column can be read as strings).
    /// Missing cells throw, as above.
    [[nodiscard]] std::vector<std::string> categorical_column(const std::string& name) const;

private:
    std::vector<std::string> names_;
    std::vector<ColumnType> types_;
    std::vector<std::vector<std::string>> cells_;  // column-major
    std::vector<std::vector<double>> numeric_;     // parallel to cells_ for numeric columns
    std::vector<std::vector<bool>> missing_;
    std::string missing_marker_;
    std::size_t rows_ = 0;
};

/// RFC-4180 CSV parser: quoted fields, doubled-quote escapes, embedded
/// delimiters/newlines inside quotes. Ragged rows raise an error naming
/// the 1-based line. Without a header row, columns are named col1..colK.
Dataset parse_csv(std::istream& in, const CsvOptions& options = {});

Dataset load_csv(const std::string& path, const CsvOptions& options = {});

}  // namespace freightstat
