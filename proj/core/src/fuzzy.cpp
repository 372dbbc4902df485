#include "freightstat/fuzzy.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace freightstat {

namespace {

void check_h(double h) {
    if (!(h >= 0.0) || !(h < 1.0)) {
        throw std::domain_error(
            "certainty factor h must satisfy 0 <= h < 1 (h = 1 collapses the "
            "intervals to equalities)");
    }
}

void check_non_negative(double v, std::size_t obs, std::size_t k) {
    if (v < 0.0) {
        std::ostringstream msg;
        msg << "negative predictor value " << v << " (observation " << obs + 1
            << ", predictor " << k + 1
            << "): the total-fuzziness objective requires non-negative predictors";
        throw std::domain_error(msg.str());
    }
}

}  // namespace

lp::Problem build_lp(const std::vector<std::vector<double>>& predictor_columns,
                     const Sample& y,
                     double h) {
    check_h(h);
    const auto n = y.size();
    if (n < 1) {
        throw std::domain_error("empty sample");
    }
    const auto p = predictor_columns.size();
    for (const auto& col : predictor_columns) {
        if (col.size() != n) {
            throw std::invalid_argument("predictor column length differs from response length");
        }
    }
    for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            check_non_negative(predictor_columns[k][i], i, k);
        }
    }

    // Row of the implicit design matrix, x_i0 = 1.
    const std::size_t terms = p + 1;
    auto x = [&](std::size_t i, std::size_t k) -> double {
        return k == 0 ? 1.0 : predictor_columns[k - 1][i];
    };

    lp::Problem problem;
    problem.objective.assign(2 * terms, 0.0);
    for (std::size_t k = 0; k < terms; ++k) {
        double col_sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            col_sum += x(i, k);
        }
        problem.objective[terms + k] = col_sum;  // radii only
    }

    problem.bounds.assign(2 * terms, lp::Bound::free());
    for (std::size_t k = 0; k < terms; ++k) {
        problem.bounds[terms + k] = lp::Bound::non_negative();
    }

    const double spread = 1.0 - h;
    problem.constraints.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        lp::Constraint above{std::vector<double>(2 * terms), lp::Relation::greater_equal, y[i]};
        lp::Constraint below{std::vector<double>(2 * terms), lp::Relation::less_equal, y[i]};
        for (std::size_t k = 0; k < terms; ++k) {
            const double xv = x(i, k);
            above.coefficients[k] = xv;
            above.coefficients[terms + k] = spread * xv;
            below.coefficients[k] = xv;
            below.coefficients[terms + k] = -spread * xv;
        }
        problem.constraints.push_back(std::move(above));
        problem.constraints.push_back(std::move(below));
    }
    return problem;
}

FuzzyModel fit(const std::vector<std::vector<double>>& predictor_columns,
               const Sample& y,
               double h) {
    const auto problem = build_lp(predictor_columns, y, h);
    const auto solution = lp::solve(problem);
    if (solution.status != lp::Status::optimal) {
        std::string msg = "fuzzy regression LP did not reach an optimum: status = " +
                          lp::to_string(solution.status);
        if (!solution.diagnostics.empty()) {
            msg += " (" + solution.diagnostics + ")";
        }
        throw std::runtime_error(msg);
    }

    const auto p = predictor_columns.size();
    const std::size_t terms = p + 1;
    FuzzyModel model;
    model.h = h;
    model.objective = solution.objective_value;
    model.centers.assign(solution.variable_values.begin(),
                         solution.variable_values.begin() + static_cast<long>(terms));
    model.radii.resize(terms);
    for (std::size_t k = 0; k < terms; ++k) {
        model.radii[k] = std::max(solution.variable_values[terms + k], 0.0);
    }
    model.predictor_names.reserve(p);
    for (std::size_t j = 1; j <= p; ++j) {
        model.predictor_names.push_back("x" + std::to_string(j));
    }

    // Coverage holds by construction; re-verify it anyway.
    const double spread = 1.0 - h;
    for (std::size_t i = 0; i < y.size(); ++i) {
        double center = model.centers[0];
        double radius = model.radii[0];
        for (std::size_t j = 0; j < p; ++j) {
            center += model.centers[j + 1] * predictor_columns[j][i];
            radius += model.radii[j + 1] * predictor_columns[j][i];
        }
        if (std::fabs(center - y[i]) > spread * radius + 1e-6) {
            std::ostringstream msg;
            msg << "fitted fuzzy model fails to cover observation " << i + 1
                << ": |center - y| = " << std::fabs(center - y[i])
                << " exceeds (1-h)*radius = " << spread * radius;
            throw std::runtime_error(msg.str());
        }
    }
    return model;
}

FuzzyInterval predict_interval(const FuzzyModel& model, std::span<const double> x) {
    const auto p = model.centers.size() - 1;
    if (x.size() != p) {
        throw std::invalid_argument("prediction point has " + std::to_string(x.size()) +
                                    " values but the model has " + std::to_string(p) +
                                    " predictors");
    }
    for (std::size_t j = 0; j < p; ++j) {
        if (x[j] < 0.0) {
            throw std::domain_error("predictor values must be non-negative");
        }
    }
    double center = model.centers[0];
    double radius = model.radii[0];
    for (std::size_t j = 0; j < p; ++j) {
        center += model.centers[j + 1] * x[j];
        radius += model.radii[j + 1] * x[j];
    }
    return {center - radius, center + radius, center};
}

}  // namespace freightstat
