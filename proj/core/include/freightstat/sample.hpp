#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace freightstat {

/// Ordered collection of finite real-valued observations. Construction
/// rejects NaN and infinities; an empty sample is allowed (summary
/// operations reject it at the call site).
class Sample {
public:
    Sample() = default;
    explicit Sample(std::vector<double> values);
    Sample(std::initializer_list<double> values);

    [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] bool empty() const noexcept { return values_.empty(); }
    [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }

    [[nodiscard]] auto begin() const noexcept { return values_.begin(); }
    [[nodiscard]] auto end() const noexcept { return values_.end(); }

private:
    std::vector<double> values_;
};

}  // namespace freightstat
