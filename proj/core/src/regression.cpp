#include "freightstat/regression.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace freightstat {

namespace {

void require_equal_lengths(std::size_t a, std::size_t b) {
    if (a != b) {
        throw std::invalid_argument("predictor and response lengths differ (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

std::vector<std::string> default_names(std::size_t p) {
    std::vector<std::string> names;
    names.reserve(p);
    for (std::size_t j = 1; j <= p; ++j) {
        names.push_back("x" + std::to_string(j));
    }
    return names;
}

double sd_unbiased(const std::vector<double>& v) {
    const double n = static_cast<double>(v.size());
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
    double ss = 0;
    for (double x : v) {
        const double d = x - mean;
        ss += d * d;
    }
    return std::sqrt(ss / (n - 1.0));
}

// Fills the shared fit diagnostics from the residuals of a model whose
// coefficients are already set.
void finish_model(LinearModel& model,
                  const std::vector<std::vector<double>>& cols,
                  const Sample& y) {
    const auto n = y.size();
    const auto p = model.coefficients.size();
    const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
    double sse = 0;
    double ss_y = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double fitted = model.intercept;
        for (std::size_t j = 0; j < p; ++j) {
            fitted += model.coefficients[j] * cols[j][i];
        }
        const double r = y[i] - fitted;
        sse += r * r;
        const double dy = y[i] - mean_y;
        ss_y += dy * dy;
    }
    model.n = n;
    model.df_residual = static_cast<int>(n) - static_cast<int>(p) - 1;
    model.r_squared = ss_y > 0.0 ? 1.0 - sse / ss_y : 1.0;
    model.adj_r_squared = 1.0 - (1.0 - model.r_squared) *
                                    (static_cast<double>(n) - 1.0) /
                                    static_cast<double>(model.df_residual);
    model.residual_std_error = std::sqrt(sse / static_cast<double>(model.df_residual));
}

}  // namespace

SumsOfSquares sums_of_squares(const Sample& x, const Sample& y) {
    require_equal_lengths(x.size(), y.size());
    if (x.empty()) {
        throw std::domain_error("empty sample");
    }
    SumsOfSquares s;
    s.n = x.size();
    for (std::size_t i = 0; i < s.n; ++i) {
        s.sum_x += x[i];
        s.sum_y += y[i];
        s.sum_xx += x[i] * x[i];
        s.sum_yy += y[i] * y[i];
        s.sum_xy += x[i] * y[i];
    }
    const double n = static_cast<double>(s.n);
    s.ss_x = s.sum_xx - s.sum_x * s.sum_x / n;
    s.ss_y = s.sum_yy - s.sum_y * s.sum_y / n;
    s.ss_xy = s.sum_xy - s.sum_x * s.sum_y / n;
    return s;
}

LinearModel simple_ols(const Sample& x, const Sample& y) {
    require_equal_lengths(x.size(), y.size());
    if (x.size() < 3) {
        throw std::invalid_argument("simple_ols needs at least 3 observations");
    }
    const auto s = sums_of_squares(x, y);
    if (!(s.ss_x > 0.0)) {
        throw std::domain_error("degenerate predictor: SS(x) is zero");
    }
    const double n = static_cast<double>(s.n);

    LinearModel model;
    model.coefficients = {s.ss_xy / s.ss_x};
    model.intercept = s.sum_y / n - model.coefficients[0] * s.sum_x / n;
    model.predictor_names = default_names(1);
    finish_model(model, {x.values()}, y);

    const double se = model.residual_std_error;
    const double mean_x = s.sum_x / n;
    model.std_errors = {se * std::sqrt(1.0 / n + mean_x * mean_x / s.ss_x),
                        se / std::sqrt(s.ss_x)};
    return model;
}

double pearson_r(const Sample& x, const Sample& y) {
    require_equal_lengths(x.size(), y.size());
    if (x.size() < 2) {
        throw std::invalid_argument("pearson_r needs at least 2 observations");
    }
    const auto s = sums_of_squares(x, y);
    if (!(s.ss_x > 0.0) || !(s.ss_y > 0.0)) {
        throw std::domain_error("zero-variance input: correlation undefined");
    }
    return s.ss_xy / std::sqrt(s.ss_x * s.ss_y);
}

LinearModel two_var_ols_closed_form(const Sample& x1, const Sample& x2, const Sample& y) {
    require_equal_lengths(x1.size(), y.size());
    require_equal_lengths(x2.size(), y.size());
    const auto n = y.size();
    if (n < 4) {
        throw std::invalid_argument("two-predictor regression needs at least 4 observations");
    }
    const double sd_y = sd_unbiased(y.values());
    const double sd_1 = sd_unbiased(x1.values());
    const double sd_2 = sd_unbiased(x2.values());
    if (!(sd_y > 0.0) || !(sd_1 > 0.0) || !(sd_2 > 0.0)) {
        throw std::domain_error("zero-variance variable: closed-form coefficients undefined");
    }
    const double r_y1 = pearson_r(y, x1);
    const double r_y2 = pearson_r(y, x2);
    const double r_12 = pearson_r(x1, x2);
    if (!(std::fabs(r_12) < 1.0)) {
        throw std::domain_error("perfectly collinear predictors: |corr(x1,x2)| = 1");
    }

    const double denom = 1.0 - r_12 * r_12;
    LinearModel model;
    model.coefficients = {(r_y1 - r_y2 * r_12) / denom * (sd_y / sd_1),
                          (r_y2 - r_y1 * r_12) / denom * (sd_y / sd_2)};
    const double dn = static_cast<double>(n);
    const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / dn;
    const double mean_1 = std::accumulate(x1.begin(), x1.end(), 0.0) / dn;
    const double mean_2 = std::accumulate(x2.begin(), x2.end(), 0.0) / dn;
    model.intercept = mean_y - model.coefficients[0] * mean_1 - model.coefficients[1] * mean_2;
    model.predictor_names = default_names(2);
    finish_model(model, {x1.values(), x2.values()}, y);
    return model;
}

LinearModel general_ols(const std::vector<std::vector<double>>& predictor_columns,
                        const Sample& y) {
    const auto p = predictor_columns.size();
    const auto n = y.size();
    if (p == 0) {
        throw std::invalid_argument("general_ols needs at least one predictor column");
    }
    for (const auto& col : predictor_columns) {
        require_equal_lengths(col.size(), n);
    }
    if (n < p + 2) {
        throw std::invalid_argument("general_ols needs n >= p + 2 observations");
    }

    // Normal equations A b = v with A = X^T X, v = X^T y, where X carries
    // a leading intercept column.
    const std::size_t m = p + 1;
    auto design = [&](std::size_t i, std::size_t j) -> double {
        return j == 0 ? 1.0 : predictor_columns[j - 1][i];
    };
    std::vector<std::vector<double>> a(m, std::vector<double>(m, 0.0));
    std::vector<double> v(m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double xj = design(i, j);
            v[j] += xj * y[i];
            for (std::size_t k = j; k < m; ++k) {
                a[j][k] += xj * design(i, k);
            }
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            a[j][k] = a[k][j];
        }
    }

    // Gauss-Jordan with row pivoting; augment with the identity so the
    // inverse (for coefficient standard errors) falls out of the sweep.
    // Row pivoting keeps column identity, so a failed pivot at column j
    // names the predictor that is linearly dependent on its predecessors.
    std::vector<double> pivot_scale(m);
    for (std::size_t j = 0; j < m; ++j) {
        pivot_scale[j] = a[j][j];
    }
    std::vector<std::vector<double>> inv(m, std::vector<double>(m, 0.0));
    for (std::size_t j = 0; j < m; ++j) {
        inv[j][j] = 1.0;
    }
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t best = col;
        for (std::size_t r = col + 1; r < m; ++r) {
            if (std::fabs(a[r][col]) > std::fabs(a[best][col])) {
                best = r;
            }
        }
        if (std::fabs(a[best][col]) <= 1e-10 * pivot_scale[col]) {
            const std::string name = col == 0 ? "intercept" : "x" + std::to_string(col);
            throw std::domain_error("design matrix is rank deficient: column '" + name +
                                    "' is linearly dependent on earlier columns");
        }
        std::swap(a[col], a[best]);
        std::swap(inv[col], inv[best]);
        std::swap(v[col], v[best]);
        const double piv = a[col][col];
        for (std::size_t k = 0; k < m; ++k) {
            a[col][k] /= piv;
            inv[col][k] /= piv;
        }
        v[col] /= piv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col) continue;
            const double factor = a[r][col];
            if (factor == 0.0) continue;
            for (std::size_t k = 0; k < m; ++k) {
                a[r][k] -= factor * a[col][k];
                inv[r][k] -= factor * inv[col][k];
            }
            v[r] -= factor * v[col];
        }
    }

    LinearModel model;
    model.intercept = v[0];
    model.coefficients.assign(v.begin() + 1, v.end());
    model.predictor_names = default_names(p);
    finish_model(model, predictor_columns, y);

    const double sigma2 = model.residual_std_error * model.residual_std_error;
    model.std_errors.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        model.std_errors[j] = std::sqrt(sigma2 * inv[j][j]);
    }
    return model;
}

double predict(const LinearModel& model, std::span<const double> x) {
    if (x.size() != model.coefficients.size()) {
        throw std::invalid_argument("prediction point has " + std::to_string(x.size()) +
                                    " values but the model has " +
                                    std::to_string(model.coefficients.size()) + " predictors");
    }
    double result = model.intercept;
    for (std::size_t j = 0; j < x.size(); ++j) {
        result += model.coefficients[j] * x[j];
    }
    return result;
}

}  // namespace freightstat
