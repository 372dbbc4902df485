#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "freightstat/gof.hpp"

namespace freightstat {

/// Cross-classified counts of two categorical variables, with margins.
struct ContingencyTable {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<std::int64_t>> counts;  // row-major r x c
    std::vector<std::int64_t> row_totals;
    std::vector<std::int64_t> col_totals;
    std::int64_t grand_total = 0;

    [[nodiscard]] std::size_t rows() const noexcept { return row_labels.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return col_labels.size(); }
};

/// Build a contingency table from (row, column) category pairs.
/// Categories are compared as exact strings after trimming surrounding
/// whitespace; label order is first-appearance order.
ContingencyTable tabulate(const std::vector<std::pair<std::string, std::string>>& pairs);

/// Expected cell frequencies under independence: E_ij = T_i * T_j / N.
std::vector<std::vector<double>> expected_table(const ContingencyTable& table);

/// Chi-square test of independence (no continuity correction),
/// df = (r-1)(c-1). A warning is attached when any expected cell is
/// below 5, where the chi-square approximation may be unreliable.
GofReport independence_test(const ContingencyTable& table, double alpha);

}  // namespace freightstat
