#include "freightstat/gof.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "freightstat/special_functions.hpp"

namespace freightstat {

namespace {

// Upper critical values of the chi-square distribution, df 1..30,
// rounded to two decimals as printed in standard tables.
constexpr std::array<double, 30> kChiSq05 = {
    3.84,  5.99,  7.81,  9.49,  11.07, 12.59, 14.07, 15.51, 16.92, 18.31,
    19.68, 21.03, 22.36, 23.68, 25.00, 26.30, 27.59, 28.87, 30.14, 31.41,
    32.67, 33.92, 35.17, 36.42, 37.65, 38.89, 40.11, 41.34, 42.56, 43.77};
constexpr std::array<double, 30> kChiSq01 = {
    6.63,  9.21,  11.34, 13.28, 15.09, 16.81, 18.48, 20.09, 21.67, 23.21,
    24.72, 26.22, 27.69, 29.14, 30.58, 32.00, 33.41, 34.81, 36.19, 37.57,
    38.93, 40.29, 41.64, 42.98, 44.31, 45.64, 46.96, 48.28, 49.59, 50.89};

void check_alpha(double alpha) {
    if (alpha != 0.05 && alpha != 0.01) {
        throw std::invalid_argument(
            "unsupported significance level (embedded tables cover 0.05 and 0.01)");
    }
}

}  // namespace

std::string to_string(GofTest test) {
    switch (test) {
        case GofTest::chi_square: return "chi_square";
        case GofTest::ks: return "ks";
        case GofTest::ad: return "ad";
    }
    return "unknown";
}

double chi_square_critical(int df, double alpha) {
    check_alpha(alpha);
    if (df < 1 || df > 30) {
        throw std::invalid_argument("chi-square critical table covers df 1..30, got df = " +
                                    std::to_string(df));
    }
    return alpha == 0.05 ? kChiSq05[df - 1] : kChiSq01[df - 1];
}

double ks_critical(std::size_t n, double alpha) {
    check_alpha(alpha);
    if (n == 0) {
        throw std::invalid_argument("ks_critical requires n >= 1");
    }
    const double coeff = alpha == 0.05 ? 1.36 : 1.63;
    return coeff / std::sqrt(static_cast<double>(n));
}

double ad_critical(std::size_t n, double alpha) {
    check_alpha(alpha);
    if (n == 0) {
        throw std::invalid_argument("ad_critical requires n >= 1");
    }
    // Case-3 asymptotic value (location and scale both estimated),
    // adjusted by the small-sample factor.
    const double asymptotic = alpha == 0.05 ? 0.752 : 1.035;
    const double dn = static_cast<double>(n);
    return asymptotic / (1.0 + 0.75 / dn + 2.25 / (dn * dn));
}

std::vector<double> expected_frequencies(const DistributionSpec& spec,
                                         const BinSpec& bins,
                                         std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("expected_frequencies requires n >= 1");
    }
    if (bins.bin_count() == 0) {
        throw std::invalid_argument("bin spec must define at least one bin");
    }
    const auto& edges = bins.edges;
    std::vector<double> expected;
    expected.reserve(bins.bin_count());
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        expected.push_back(n * (spec.cdf(edges[i + 1]) - spec.cdf(edges[i])));
    }
    if (bins.open_last) {
        expected.push_back(n * (1.0 - spec.cdf(edges.back())));
    }
    return expected;
}

GofReport chi_square_gof(const Histogram& observed,
                         const std::vector<double>& expected,
                         std::size_t estimated_params,
                         double alpha) {
    check_alpha(alpha);
    const auto& counts = observed.counts;
    if (counts.size() != expected.size()) {
        throw std::invalid_argument("observed and expected lengths differ");
    }
    if (counts.empty()) {
        throw std::invalid_argument("chi-square test needs at least one bin");
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (!(expected[i] > 0.0)) {
            throw std::domain_error("expected frequency for bin " + std::to_string(i) +
                                    " is not positive; merge bins until every E_i > 0");
        }
    }

    GofReport report;
    report.test = GofTest::chi_square;
    report.alpha = alpha;

    const double sum_obs = static_cast<double>(observed.total());
    const double sum_exp = std::accumulate(expected.begin(), expected.end(), 0.0);
    if (std::fabs(sum_obs - sum_exp) > 1e-6) {
        std::ostringstream msg;
        msg << "observed total (" << sum_obs << ") and expected total (" << sum_exp
            << ") differ; the test assumes matching totals";
        report.warnings.push_back(msg.str());
    }

    double statistic = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double d = static_cast<double>(counts[i]) - expected[i];
        statistic += d * d / expected[i];
    }
    report.statistic = statistic;

    const int k = static_cast<int>(counts.size());
    const int raw_df = k - static_cast<int>(estimated_params) - 1;
    if (raw_df < 1) {
        report.df = 1;
        report.warnings.push_back(
            "degrees of freedom k - p - 1 = " + std::to_string(raw_df) +
            " is not positive; floored to 1, treat the decision as inconclusive");
    } else {
        report.df = raw_df;
    }
    report.critical_value = chi_square_critical(report.df, alpha);
    report.p_value = chi_square_upper_tail(statistic, report.df);
    report.reject_null = statistic > report.critical_value;
    return report;
}

GofReport ks_test(const Sample& sample, const DistributionSpec& spec, double alpha) {
    check_alpha(alpha);
    if (sample.empty()) {
        throw std::domain_error("empty sample");
    }
    std::vector<double> sorted = sample.values();
    std::sort(sorted.begin(), sorted.end());
    const auto n = sorted.size();
    const double dn = static_cast<double>(n);

    // Two-sided supremum over the ECDF jump points:
    // D = max_i max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n).
    double d_stat = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = spec.cdf(sorted[i]);
        const double upper = static_cast<double>(i + 1) / dn - f;
        const double lower = f - static_cast<double>(i) / dn;
        d_stat = std::max({d_stat, upper, lower});
    }

    GofReport report;
    report.test = GofTest::ks;
    report.alpha = alpha;
    report.statistic = d_stat;
    report.critical_value = ks_critical(n, alpha);
    report.reject_null = d_stat > report.critical_value;
    report.warnings.push_back(
        "asymptotic K-S critical value assumes a fully specified distribution; "
        "it is conservative when parameters were estimated from this sample");
    return report;
}

GofReport ad_test(const Sample& sample, const DistributionSpec& spec, double alpha) {
    check_alpha(alpha);
    if (sample.empty()) {
        throw std::domain_error("empty sample");
    }
    std::vector<double> sorted = sample.values();
    std::sort(sorted.begin(), sorted.end());
    const auto n = sorted.size();
    const double dn = static_cast<double>(n);

    constexpr double kEps = 1e-12;
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) {
        f[i] = std::clamp(spec.cdf(sorted[i]), kEps, 1.0 - kEps);
    }
    double acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = 2.0 * static_cast<double>(i + 1) - 1.0;
        acc += w * (std::log(f[i]) + std::log1p(-f[n - 1 - i]));
    }

    GofReport report;
    report.test = GofTest::ad;
    report.alpha = alpha;
    report.statistic = -dn - acc / dn;
    report.critical_value = ad_critical(n, alpha);
    report.reject_null = report.statistic > report.critical_value;
    if (spec.family() == Family::exponential) {
        report.warnings.push_back(
            "A-D critical value uses the table for normal/lognormal fits with "
            "estimated parameters; it is approximate for the exponential family");
    }
    return report;
}

}  // namespace freightstat
