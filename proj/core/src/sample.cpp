#include "freightstat/sample.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace freightstat {

namespace {

void check_finite(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw std::domain_error("sample contains a non-finite value at index " +
                                    std::to_string(i));
        }
    }
}

}  // namespace

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
    check_finite(values_);
}

Sample::Sample(std::initializer_list<double> values) : values_(values) {
    check_finite(values_);
}

}  // namespace freightstat
