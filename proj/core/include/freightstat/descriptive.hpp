#pragma once

#include <cstddef>
#include <vector>

#include "freightstat/sample.hpp"

namespace freightstat {

/// Full descriptive summary of one continuous variable.
///
/// Conventions (fixed so results are deterministic):
///  - median/quartiles: linear interpolation between order statistics at
///    position p*(n-1)+1, the common "type 7" rule;
///  - variance/std_dev: sample estimator, divisor n-1 (0 when n < 2);
///  - skewness g1 = m3/m2^1.5 and excess kurtosis g2 = m4/m2^2 - 3 with
///    population moments mj = sum((x-mean)^j)/n; NaN for constant samples;
///  - mode: every value attaining the maximal multiplicity, provided that
///    multiplicity is > 1; empty when all values are unique.
struct SummaryStats {
    std::size_t n = 0;
    double mean = 0;
    double median = 0;
    double min = 0;
    double max = 0;
    std::vector<double> mode;
    double range = 0;
    double q1 = 0;
    double q3 = 0;
    double iqr = 0;
    double variance = 0;
    double std_dev = 0;
    double skewness = 0;
    double kurtosis_excess = 0;
};

/// Contiguous histogram bins. Edges are strictly increasing; each bin is
/// the right-closed interval (edges[i], edges[i+1]], so a value sitting
/// exactly on an edge belongs to the bin that edge closes. When
/// open_last is set an extra final bin (edges.back(), +inf) is appended.
struct BinSpec {
    std::vector<double> edges;
    bool open_last = false;

    [[nodiscard]] std::size_t bin_count() const noexcept {
        std::size_t k = edges.size() >= 2 ? edges.size() - 1 : 0;
        return open_last && !edges.empty() ? k + 1 : k;
    }
};

/// Observed counts per bin. Observations no bin covers (at or below the
/// first edge, or above the last edge of a closed spec) are tallied in
/// `uncovered` rather than dropped.
struct Histogram {
    BinSpec spec;
    std::vector<std::size_t> counts;
    std::size_t uncovered = 0;

    [[nodiscard]] std::size_t total() const noexcept;
};

SummaryStats summarize(const Sample& sample);

Histogram bin(const Sample& sample, const BinSpec& spec);

/// Quantile of sorted data at probability p in [0,1] (type 7 rule).
double quantile_sorted(const std::vector<double>& sorted, double p);

}  // namespace freightstat
