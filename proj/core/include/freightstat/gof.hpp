#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "freightstat/descriptive.hpp"
#include "freightstat/distributions.hpp"
#include "freightstat/sample.hpp"

namespace freightstat {

enum class GofTest { chi_square, ks, ad };

[[nodiscard]] std::string to_string(GofTest test);

/// Outcome of one goodness-of-fit (or independence) test.
/// reject_null <=> statistic > critical_value; df and p_value are only
/// populated for chi-square tests.
struct GofReport {
    GofTest test = GofTest::chi_square;
    double statistic = 0;
    int df = 0;
    double alpha = 0.05;
    double critical_value = 0;
    std::optional<double> p_value;
    bool reject_null = false;
    std::vector<std::string> warnings;
};

/// Per-bin expected frequency E_i = n * (F(upper) - F(lower)); the open
/// final bin uses F(upper) = 1.
std::vector<double> expected_frequencies(const DistributionSpec& spec,
                                         const BinSpec& bins,
                                         std::size_t n);

/// Chi-square GOF test of binned observations against expected
/// frequencies. df = k - estimated_params - 1, floored at 1 with a
/// warning when the raw value is non-positive (degenerate binning is
/// reported as inconclusive rather than rejected outright).
GofReport chi_square_gof(const Histogram& observed,
                         const std::vector<double>& expected,
                         std::size_t estimated_params,
                         double alpha);

/// Two-sided Kolmogorov-Smirnov test:
/// D = max_i max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n).
/// The asymptotic critical value (1.36/sqrt(n) at the 5% level) assumes a
/// fully specified distribution; a warning records that it is only
/// approximate when parameters were estimated from the same data.
GofReport ks_test(const Sample& sample, const DistributionSpec& spec, double alpha);

/// Anderson-Darling test:
/// A^2 = -n - (1/n) * sum_i (2i-1) [ln F(X_(i)) + ln(1 - F(X_(n-i+1)))],
/// with F clamped to (1e-12, 1-1e-12) before the logs. The critical value
/// is the case-3 asymptotic value divided by the small-sample factor
/// (1 + 0.75/n + 2.25/n^2).
GofReport ad_test(const Sample& sample, const DistributionSpec& spec, double alpha);

/// Embedded upper critical values. Supported significance levels are
/// 0.05 and 0.01; chi-square df runs 1..30. Out-of-range inputs throw
/// std::invalid_argument.
double chi_square_critical(int df, double alpha);
double ks_critical(std::size_t n, double alpha);
double ad_critical(std::size_t n, double alpha);

}  // namespace freightstat
