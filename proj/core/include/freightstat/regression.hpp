#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "freightstat/sample.hpp"

namespace freightstat {

/// Raw sums and corrected sums of squares for one predictor/response pair:
/// SS(x) = sum x^2 - (sum x)^2/n, SS(xy) = sum xy - (sum x)(sum y)/n.
struct SumsOfSquares {
    double sum_x = 0;
    double sum_y = 0;
    double sum_xx = 0;
    double sum_yy = 0;
    double sum_xy = 0;
    double ss_x = 0;
    double ss_y = 0;
    double ss_xy = 0;
    std::size_t n = 0;
};

SumsOfSquares sums_of_squares(const Sample& x, const Sample& y);

/// Fitted least-squares model. coefficients[j] pairs with
/// predictor_names[j]; std_errors, when non-empty, holds the intercept
/// standard error first, then one per coefficient.
struct LinearModel {
    double intercept = 0;
    std::vector<double> coefficients;
    std::vector<std::string> predictor_names;
    double r_squared = 0;
    double adj_r_squared = 0;
    double residual_std_error = 0;
    int df_residual = 0;
    std::size_t n = 0;
    std::vector<double> std_errors;
};

/// Simple linear regression y = b0 + b1*x with
/// b1 = SS(xy)/SS(x) and b0 = mean(y) - b1*mean(x).
/// Requires n >= 3 and a non-constant predictor.
LinearModel simple_ols(const Sample& x, const Sample& y);

/// Pearson product-moment correlation r = SS(xy)/sqrt(SS(x)*SS(y)).
double pearson_r(const Sample& x, const Sample& y);

/// Two-predictor regression through the correlation algebra
///   b1 = ((r_y1 - r_y2*r_12)/(1 - r_12^2)) * (SD_y/SD_1)   (SDs use n-1)
/// and symmetrically for b2; b0 = mean(y) - b1*mean(x1) - b2*mean(x2).
/// Requires n >= 4 and |r_12| < 1.
LinearModel two_var_ols_closed_form(const Sample& x1, const Sample& x2, const Sample& y);

/// General multi-predictor OLS via the normal equations, solved by
/// Gauss-Jordan elimination with row pivoting. Rank deficiency is
/// detected with a pivot threshold of 1e-10 relative to the column's
/// initial diagonal entry; the error names the dependent column.
/// `predictor_columns` holds p columns, each with one value per
/// observation. Requires n >= p + 2.
LinearModel general_ols(const std::vector<std::vector<double>>& predictor_columns,
                        const Sample& y);

/// b0 + sum_j b_j * x_j. Throws std::invalid_argument on a dimension
/// mismatch.
double predict(const LinearModel& model, std::span<const double> x);

}  // namespace freightstat
