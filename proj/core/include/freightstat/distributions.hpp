#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "freightstat/sample.hpp"

namespace freightstat {

enum class Family { lognormal, normal, exponential };

[[nodiscard]] std::string to_string(Family family);
[[nodiscard]] Family family_from_string(const std::string& name);

/// A parametric distribution family with validated parameters.
/// Scale/shape parameters must be strictly positive; construction throws
/// std::domain_error otherwise.
class DistributionSpec {
public:
    static DistributionSpec lognormal(double meanlog, double sdlog);
    static DistributionSpec normal(double mean, double sd);
    static DistributionSpec exponential(double rate);

    [[nodiscard]] Family family() const noexcept { return family_; }
    [[nodiscard]] const std::vector<double>& params() const noexcept { return params_; }
    [[nodiscard]] std::vector<std::string> param_names() const;
    [[nodiscard]] std::size_t param_count() const noexcept { return params_.size(); }

    /// Cumulative distribution function. Monotone, with values in [0,1];
    /// lognormal and exponential return 0 at or below the support boundary.
    [[nodiscard]] double cdf(double x) const;

    /// Probability density function.
    [[nodiscard]] double pdf(double x) const;

    [[nodiscard]] std::string describe() const;

private:
    DistributionSpec(Family family, std::vector<double> params);

    Family family_;
    std::vector<double> params_;
};

/// Maximum-likelihood fit plus the usual information criteria.
/// aic = 2p - 2*loglik, bic = p*ln(n) - 2*loglik with p = number of
/// estimated parameters; std_errors are the closed-form asymptotic
/// standard errors from the observed information.
struct FitResult {
    DistributionSpec spec;
    std::size_t n = 0;
    double loglik = 0;
    double aic = 0;
    double bic = 0;
    std::vector<double> std_errors;
};

/// Fit `family` to the sample by maximum likelihood.
///
/// Estimators (all closed-form):
///  - lognormal: meanlog = mean of ln x, sdlog = population (divisor n)
///    std-dev of ln x;
///  - normal: analogous on the raw values;
///  - exponential: rate = 1/mean.
///
/// Throws std::domain_error for observations outside the family support
/// (the message names the offending index) and for degenerate samples.
FitResult fit_mle(const Sample& sample, Family family);

}  // namespace freightstat
