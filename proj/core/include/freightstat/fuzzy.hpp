#pragma once

#include <span>
#include <string>
#include <vector>

#include "freightstat/lp.hpp"
#include "freightstat/sample.hpp"

namespace freightstat {

/// Fuzzy linear model: interval coefficients center_k +- radius_k
/// (index 0 is the intercept term), fitted at certainty factor h. By
/// construction every training observation lies inside its (1-h)-scaled
/// prediction interval.
struct FuzzyModel {
    std::vector<double> centers;
    std::vector<double> radii;
    double h = 0;
    std::vector<std::string> predictor_names;
    double objective = 0;  // minimized total fuzziness
};

struct FuzzyInterval {
    double lower = 0;
    double upper = 0;
    double midpoint = 0;
};

/// Assemble the fuzzy-regression linear program for the given data.
///
/// Variables are ordered a_0..a_p, c_0..c_p with a_k free and c_k >= 0.
/// The objective minimizes sum_k c_k * sum_i x_ik (x_i0 = 1), and each
/// observation contributes the pair of constraints
///   sum_k a_k x_ik + (1-h) sum_k c_k x_ik >= y_i
///   sum_k a_k x_ik - (1-h) sum_k c_k x_ik <= y_i.
///
/// The objective only measures total fuzziness correctly for
/// non-negative predictor values, so any negative entry is rejected with
/// std::domain_error. h must satisfy 0 <= h < 1 (h = 1 collapses the
/// intervals to equalities and is rejected).
lp::Problem build_lp(const std::vector<std::vector<double>>& predictor_columns,
                     const Sample& y,
                     double h);

/// Build, solve, and wrap the LP; re-verifies the coverage invariant on
/// the training data. Solver failures propagate as std::runtime_error
/// with the solver diagnostics.
FuzzyModel fit(const std::vector<std::vector<double>>& predictor_columns,
               const Sample& y,
               double h);

/// Interval prediction at a point (without the intercept entry):
/// lower = sum (a_k - c_k) x_k, upper = sum (a_k + c_k) x_k with x_0 = 1;
/// the midpoint is the pure-center prediction. Predictor values must be
/// non-negative.
FuzzyInterval predict_interval(const FuzzyModel& model, std::span<const double> x);

}  // namespace freightstat
