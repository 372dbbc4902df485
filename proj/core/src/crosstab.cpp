#include "freightstat/crosstab.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "freightstat/special_functions.hpp"

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

std::size_t index_of(std::vector<std::string>& labels, const std::string& value) {
    const auto it = std::find(labels.begin(), labels.end(), value);
    if (it != labels.end()) {
        return static_cast<std::size_t>(it - labels.begin());
    }
    labels.push_back(value);
    return labels.size() - 1;
}

}  // namespace

ContingencyTable tabulate(const std::vector<std::pair<std::string, std::string>>& pairs) {
    if (pairs.empty()) {
        throw std::domain_error("cannot tabulate an empty pair list");
    }
    ContingencyTable t;
    std::vector<std::pair<std::size_t, std::size_t>> indexed;
    indexed.reserve(pairs.size());
    for (const auto& [row, col] : pairs) {
        indexed.emplace_back(index_of(t.row_labels, trim(row)),
                             index_of(t.col_labels, trim(col)));
    }
    t.counts.assign(t.rows(), std::vector<std::int64_t>(t.cols(), 0));
    for (const auto& [r, c] : indexed) {
        ++t.counts[r][c];
    }
    t.row_totals.assign(t.rows(), 0);
    t.col_totals.assign(t.cols(), 0);
    for (std::size_t r = 0; r < t.rows(); ++r) {
        for (std::size_t c = 0; c < t.cols(); ++c) {
            t.row_totals[r] += t.counts[r][c];
            t.col_totals[c] += t.counts[r][c];
            t.grand_total += t.counts[r][c];
        }
    }
    return t;
}

std::vector<std::vector<double>> expected_table(const ContingencyTable& table) {
    if (table.grand_total <= 0) {
        throw std::domain_error("contingency table has no observations");
    }
    const double n = static_cast<double>(table.grand_total);
    std::vector<std::vector<double>> expected(table.rows(), std::vector<double>(table.cols()));
    for (std::size_t r = 0; r < table.rows(); ++r) {
        for (std::size_t c = 0; c < table.cols(); ++c) {
            expected[r][c] = static_cast<double>(table.row_totals[r]) *
                             static_cast<double>(table.col_totals[c]) / n;
        }
    }
    return expected;
}

GofReport independence_test(const ContingencyTable& table, double alpha) {
    const auto expected = expected_table(table);
    for (std::size_t r = 0; r < table.rows(); ++r) {
        for (std::size_t c = 0; c < table.cols(); ++c) {
            if (!(expected[r][c] > 0.0)) {
                std::ostringstream msg;
                msg << "expected frequency for cell (" << table.row_labels[r] << ", "
                    << table.col_labels[c] << ") is zero; the test is undefined";
                throw std::domain_error(msg.str());
            }
        }
    }

    GofReport report;
    report.test = GofTest::chi_square;
    report.alpha = alpha;

    // No continuity correction, including at 2x2.
    double statistic = 0;
    bool small_cell = false;
    for (std::size_t r = 0; r < table.rows(); ++r) {
        for (std::size_t c = 0; c < table.cols(); ++c) {
            const double d = static_cast<double>(table.counts[r][c]) - expected[r][c];
            statistic += d * d / expected[r][c];
            small_cell = small_cell || expected[r][c] < 5.0;
        }
    }
    report.statistic = statistic;
    report.df = static_cast<int>((table.rows() - 1) * (table.cols() - 1));
    if (report.df < 1) {
        report.df = 1;
        report.warnings.push_back(
            "table has a single row or column; independence is trivial and the "
            "test is inconclusive");
    }
    report.critical_value = chi_square_critical(report.df, alpha);
    report.p_value = chi_square_upper_tail(statistic, report.df);
    report.reject_null = statistic > report.critical_value;
    if (small_cell) {
        report.warnings.push_back(
            "at least one expected cell frequency is below 5; the chi-square "
            "approximation may be incorrect");
    }
    return report;
}

}  // namespace freightstat
