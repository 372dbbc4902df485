#include "freightstat/descriptive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace freightstat {

std::size_t Histogram::total() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

double quantile_sorted(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) {
        throw std::domain_error("empty sample");
    }
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("quantile probability must be in [0,1]");
    }
    // Type-7 rule: 1-based position h = p*(n-1)+1, linear interpolation.
    const double h = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

SummaryStats summarize(const Sample& sample) {
    if (sample.empty()) {
        throw std::domain_error("empty sample");
    }
    const auto& x = sample.values();
    const auto n = x.size();
    const double dn = static_cast<double>(n);

    SummaryStats s;
    s.n = n;
    s.mean = std::accumulate(x.begin(), x.end(), 0.0) / dn;

    std::vector<double> sorted = x;
    std::sort(sorted.begin(), sorted.end());
    s.min = sorted.front();
    s.max = sorted.back();
    s.range = s.max - s.min;
    s.median = quantile_sorted(sorted, 0.5);
    s.q1 = quantile_sorted(sorted, 0.25);
    s.q3 = quantile_sorted(sorted, 0.75);
    s.iqr = s.q3 - s.q1;

    // Every value attaining the maximal multiplicity, when that
    // multiplicity exceeds 1.
    std::size_t best = 1;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && sorted[j] == sorted[i]) ++j;
        const std::size_t run = j - i;
        if (run > best) {
            best = run;
            s.mode.clear();
        }
        if (run == best && best > 1) {
            s.mode.push_back(sorted[i]);
        }
        i = j;
    }

    double m2 = 0, m3 = 0, m4 = 0;
    for (double v : x) {
        const double d = v - s.mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    s.variance = n >= 2 ? m2 / (dn - 1.0) : 0.0;
    s.std_dev = std::sqrt(s.variance);
    m2 /= dn;
    m3 /= dn;
    m4 /= dn;
    if (m2 > 0.0) {
        s.skewness = m3 / std::pow(m2, 1.5);
        s.kurtosis_excess = m4 / (m2 * m2) - 3.0;
    } else {
        s.skewness = std::numeric_limits<double>::quiet_NaN();
        s.kurtosis_excess = std::numeric_limits<double>::quiet_NaN();
    }
    return s;
}

Histogram bin(const Sample& sample, const BinSpec& spec) {
    if (spec.bin_count() == 0) {
        throw std::invalid_argument("bin spec must define at least one bin");
    }
    for (std::size_t i = 1; i < spec.edges.size(); ++i) {
        if (!(spec.edges[i - 1] < spec.edges[i])) {
            throw std::invalid_argument("bin edges must be strictly increasing");
        }
    }

    Histogram h;
    h.spec = spec;
    h.counts.assign(spec.bin_count(), 0);
    const auto& edges = spec.edges;
    for (double v : sample) {
        if (v <= edges.front()) {
            ++h.uncovered;
            continue;
        }
        if (v > edges.back()) {
            if (spec.open_last) {
                ++h.counts.back();
            } else {
                ++h.uncovered;
            }
            continue;
        }
        // Right-closed (lower, upper]: an edge value belongs to the bin
        // it closes.
        const auto it = std::lower_bound(edges.begin(), edges.end(), v);
        ++h.counts[static_cast<std::size_t>(it - edges.begin()) - 1];
    }
    return h;
}

}  // namespace freightstat
