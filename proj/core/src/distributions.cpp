#include "freightstat/distributions.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "freightstat/special_functions.hpp"

namespace freightstat {

namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // ln(sqrt(2*pi))

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw std::domain_error(std::string(name) + " must be strictly positive");
    }
}

}  // namespace

std::string to_string(Family family) {
    switch (family) {
        case Family::lognormal: return "lognormal";
        case Family::normal: return "normal";
        case Family::exponential: return "exponential";
    }
    return "unknown";
}

Family family_from_string(const std::string& name) {
    if (name == "lognormal" || name == "lnorm") return Family::lognormal;
    if (name == "normal" || name == "norm") return Family::normal;
    if (name == "exponential" || name == "exp") return Family::exponential;
    throw std::invalid_argument("unknown distribution family: '" + name + "'");
}

DistributionSpec::DistributionSpec(Family family, std::vector<double> params)
    : family_(family), params_(std::move(params)) {}

DistributionSpec DistributionSpec::lognormal(double meanlog, double sdlog) {
    if (!std::isfinite(meanlog)) {
        throw std::domain_error("meanlog must be finite");
    }
    require_positive(sdlog, "sdlog");
    return {Family::lognormal, {meanlog, sdlog}};
}

DistributionSpec DistributionSpec::normal(double mean, double sd) {
    if (!std::isfinite(mean)) {
        throw std::domain_error("mean must be finite");
    }
    require_positive(sd, "sd");
    return {Family::normal, {mean, sd}};
}

DistributionSpec DistributionSpec::exponential(double rate) {
    require_positive(rate, "rate");
    return {Family::exponential, {rate}};
}

std::vector<std::string> DistributionSpec::param_names() const {
    switch (family_) {
        case Family::lognormal: return {"meanlog", "sdlog"};
        case Family::normal: return {"mean", "sd"};
        case Family::exponential: return {"rate"};
    }
    return {};
}

double DistributionSpec::cdf(double x) const {
    switch (family_) {
        case Family::lognormal:
            if (x <= 0.0) return 0.0;
            return std_normal_cdf((std::log(x) - params_[0]) / params_[1]);
        case Family::normal:
            return std_normal_cdf((x - params_[0]) / params_[1]);
        case Family::exponential:
            if (x <= 0.0) return 0.0;
            return -std::expm1(-params_[0] * x);
    }
    return 0.0;
}

double DistributionSpec::pdf(double x) const {
    switch (family_) {
        case Family::lognormal: {
            if (x <= 0.0) return 0.0;
            const double z = (std::log(x) - params_[0]) / params_[1];
            return std::exp(-0.5 * z * z) / (x * params_[1]) * std::exp(-kLogSqrt2Pi);
        }
        case Family::normal: {
            const double z = (x - params_[0]) / params_[1];
            return std_normal_pdf(z) / params_[1];
        }
        case Family::exponential:
            if (x < 0.0) return 0.0;
            return params_[0] * std::exp(-params_[0] * x);
    }
    return 0.0;
}

std::string DistributionSpec::describe() const {
    std::ostringstream out;
    out.precision(9);
    out << to_string(family_) << "(";
    const auto names = param_names();
    for (std::size_t i = 0; i < params_.size(); ++i) {
        if (i) out << ", ";
        out << names[i] << " = " << params_[i];
    }
    out << ")";
    return out.str();
}

FitResult fit_mle(const Sample& sample, Family family) {
    const auto& x = sample.values();
    const auto n = x.size();
    if (n < 2) {
        throw std::domain_error("fit_mle requires at least 2 observations");
    }
    const double dn = static_cast<double>(n);

    if (family == Family::lognormal || family == Family::exponential) {
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] <= 0.0) {
                throw std::domain_error("non-positive observation at index " +
                                        std::to_string(i) + " is outside the " +
                                        to_string(family) + " support");
            }
        }
    }

    switch (family) {
        case Family::lognormal: {
            double mean_log = 0;
            for (double v : x) mean_log += std::log(v);
            mean_log /= dn;
            double ss = 0;
            for (double v : x) {
                const double d = std::log(v) - mean_log;
                ss += d * d;
            }
            const double sd_log = std::sqrt(ss / dn);  // MLE, divisor n
            if (sd_log == 0.0) {
                throw std::domain_error("constant sample: lognormal sdlog would be zero");
            }
            auto spec = DistributionSpec::lognormal(mean_log, sd_log);
            double ll = 0;
            for (double v : x) ll += std::log(spec.pdf(v));
            return {spec, n, ll, 4.0 - 2.0 * ll, 2.0 * std::log(dn) - 2.0 * ll,
                    {sd_log / std::sqrt(dn), sd_log / std::sqrt(2.0 * dn)}};
        }
        case Family::normal: {
            double mean = 0;
            for (double v : x) mean += v;
            mean /= dn;
            double ss = 0;
            for (double v : x) {
                const double d = v - mean;
                ss += d * d;
            }
            const double sd = std::sqrt(ss / dn);
            if (sd == 0.0) {
                throw std::domain_error("constant sample: normal sd would be zero");
            }
            auto spec = DistributionSpec::normal(mean, sd);
            double ll = 0;
            for (double v : x) ll += std::log(spec.pdf(v));
            return {spec, n, ll, 4.0 - 2.0 * ll, 2.0 * std::log(dn) - 2.0 * ll,
                    {sd / std::sqrt(dn), sd / std::sqrt(2.0 * dn)}};
        }
        case Family::exponential: {
            double mean = 0;
            for (double v : x) mean += v;
            mean /= dn;
            const double rate = 1.0 / mean;
            auto spec = DistributionSpec::exponential(rate);
            double ll = 0;
            for (double v : x) ll += std::log(spec.pdf(v));
            return {spec, n, ll, 2.0 - 2.0 * ll, std::log(dn) - 2.0 * ll,
                    {rate / std::sqrt(dn)}};
        }
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace freightstat
