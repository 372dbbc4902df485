// Acceptance suite: runs every reference-value criterion end to end
// against the bundled datasets and prints one pass/fail line per
// criterion. Exits non-zero when any criterion fails.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "freightstat/crosstab.hpp"
#include "freightstat/csv.hpp"
#include "freightstat/descriptive.hpp"
#include "freightstat/distributions.hpp"
#include "freightstat/fuzzy.hpp"
#include "freightstat/gof.hpp"
#include "freightstat/lp.hpp"
#include "freightstat/regression.hpp"
#include "freightstat/special_functions.hpp"
#include "oracles.hpp"

using namespace freightstat;

namespace {

class Criterion {
public:
    Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

    void expect_near(const std::string& label, double actual, double expected, double tol) {
        const bool ok = std::fabs(actual - expected) <= tol;
        record(ok, label, actual, expected, tol);
    }

    void expect_true(const std::string& label, bool ok) {
        if (!ok) {
            failures_.push_back("    " + label);
        }
        all_ok_ = all_ok_ && ok;
    }

    void note(const std::string& text) { notes_.push_back("    note: " + text); }

    bool finish() const {
        std::printf("[%s] criterion %d: %s\n", all_ok_ ? "PASS" : "FAIL", id_,
                    title_.c_str());
        for (const auto& line : failures_) {
            std::printf("%s\n", line.c_str());
        }
        for (const auto& line : notes_) {
            std::printf("%s\n", line.c_str());
        }
        return all_ok_;
    }

private:
    void record(bool ok, const std::string& label, double actual, double expected,
                double tol) {
        if (!ok) {
            std::ostringstream line;
            line.precision(10);
            line << "    " << label << ": actual " << actual << ", expected " << expected
                 << " +- " << tol << " (|diff| = " << std::fabs(actual - expected) << ")";
            failures_.push_back(line.str());
        }
        all_ok_ = all_ok_ && ok;
    }

    int id_;
    std::string title_;
    bool all_ok_ = true;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

Sample fixture_column(const std::string& file, const std::string& col) {
    return load_csv(testsupport::fixture_path(file)).numeric_column(col);
}

const std::vector<double> kGateEdges = {0.01, 1, 2, 3, 4, 5, 6, 7, 8};

bool criterion_1() {
    Criterion c(1, "chi-square gof on the gate processing times");
    const Sample sample = fixture_column("example_11_1.csv", "time");
    const auto spec = DistributionSpec::lognormal(1.3460216, 0.4155127);
    const BinSpec bins{kGateEdges, true};
    const auto hist = bin(sample, bins);
    const auto expected = expected_frequencies(spec, bins, sample.size());
    const auto report = chi_square_gof(hist, expected, 2, 0.05);

    c.expect_near("statistic", report.statistic, 0.99298, 1e-4);
    c.expect_true("df == 6", report.df == 6);
    c.expect_near("critical value", report.critical_value, 12.59, 1e-12);
    c.expect_true("fail to reject at alpha 0.05", !report.reject_null);
    const std::vector<double> reference = {0.0299429, 2.8731703, 10.8857644,
                                           13.1414340, 9.9169312, 6.0680828,
                                           3.3643072, 1.7816774, 1.9386896};
    for (std::size_t i = 0; i < reference.size(); ++i) {
        c.expect_near("expected frequency, bin " + std::to_string(i + 1), expected[i],
                      reference[i], 1e-6);
    }
    return c.finish();
}

bool criterion_2() {
    Criterion c(2, "lognormal maximum-likelihood fit of the gate processing times");
    const auto fit = fit_mle(fixture_column("example_11_1.csv", "time"), Family::lognormal);
    c.expect_near("meanlog", fit.spec.params()[0], 1.3460216, 1e-6);
    c.expect_near("sdlog", fit.spec.params()[1], 0.4155127, 1e-6);
    c.expect_near("meanlog std error", fit.std_errors[0], 0.05876237, 1e-6);
    // The closed-form asymptotic value is sdlog/sqrt(2n) = 0.04155127;
    // the reference tool printed 0.04155018 from a finite-difference
    // Hessian, 1.09e-6 away, so this check cannot pass with the exact
    // estimator. It is asserted as stated rather than loosened.
    c.expect_near("sdlog std error", fit.std_errors[1], 0.04155018, 1e-6);
    c.expect_near("loglik", fit.loglik, -94.3359, 1e-3);
    c.expect_near("aic", fit.aic, 192.6718, 2e-3);
    c.expect_near("bic", fit.bic, 196.4958, 2e-3);
    return c.finish();
}

bool criterion_3() {
    Criterion c(3, "K-S and A-D tests on the fitted lognormal");
    const Sample sample = fixture_column("example_11_1.csv", "time");
    const auto spec = fit_mle(sample, Family::lognormal).spec;
    c.expect_near("K-S statistic", ks_test(sample, spec, 0.05).statistic, 0.07120655, 1e-7);
    const auto ad = ad_test(sample, spec, 0.05);
    c.expect_near("A-D statistic", ad.statistic, 0.21197206, 1e-6);
    c.expect_near("A-D critical value (n = 50)", ad.critical_value, 0.740230338, 1e-6);
    return c.finish();
}

bool criterion_4() {
    Criterion c(4, "independence tests for the carrier and weather surveys");

    const auto carriers = load_csv(testsupport::fixture_path("example_11_2.csv"));
    std::vector<std::pair<std::string, std::string>> pairs;
    const auto rows = carriers.categorical_column("carrier");
    const auto cols = carriers.categorical_column("on_time");
    for (std::size_t i = 0; i < rows.size(); ++i) pairs.emplace_back(rows[i], cols[i]);
    const auto carrier_report = independence_test(tabulate(pairs), 0.05);
    c.expect_near("carrier statistic", carrier_report.statistic, 0.05238, 1e-4);
    c.expect_true("carrier df == 1", carrier_report.df == 1);
    c.expect_near("carrier p-value", carrier_report.p_value.value_or(-1), 0.819, 5e-3);
    bool warned = false;
    for (const auto& w : carrier_report.warnings) {
        warned = warned || w.find("may be incorrect") != std::string::npos;
    }
    c.expect_true("small-sample warning emitted", warned);

    const auto weather = load_csv(testsupport::fixture_path("exercise_11_2.csv"));
    pairs.clear();
    const auto delays = weather.categorical_column("delay");
    const auto rain = weather.categorical_column("rain");
    for (std::size_t i = 0; i < delays.size(); ++i) pairs.emplace_back(delays[i], rain[i]);
    const auto weather_report = independence_test(tabulate(pairs), 0.05);
    c.expect_near("weather statistic", weather_report.statistic, 3.28556, 1e-4);
    c.expect_true("weather df == 3", weather_report.df == 3);
    c.expect_near("weather critical value", weather_report.critical_value, 7.81, 1e-12);
    c.expect_true("weather fail to reject", !weather_report.reject_null);
    return c.finish();
}

bool criterion_5() {
    Criterion c(5, "simple regression of port trips on fleet size");
    const Sample y = fixture_column("example_11_3.csv", "trips");
    const Sample x = fixture_column("example_11_3.csv", "trucks");
    const auto model = simple_ols(x, y);
    c.expect_near("intercept", model.intercept, 0.4444, 1e-4);
    c.expect_near("slope", model.coefficients[0], 0.6721, 1e-4);
    c.expect_near("prediction at 10 trucks", predict(model, std::vector<double>{10.0}),
                  7.1653, 1e-4);
    c.expect_near("r_squared", model.r_squared, 0.7717, 1e-4);
    c.expect_near("pearson r", pearson_r(x, y), 0.8784, 1e-4);
    c.expect_near("residual std error", model.residual_std_error, 0.7852, 1e-4);
    return c.finish();
}

bool criterion_6() {
    Criterion c(6, "two-predictor regression of truck queueing time");
    const auto data = load_csv(testsupport::fixture_path("example_11_5.csv"));
    const Sample y = data.numeric_column("queueing_time");
    const Sample x1 = data.numeric_column("queue_length");
    const Sample x2 = data.numeric_column("gate_time");
    const auto closed = two_var_ols_closed_form(x1, x2, y);
    c.expect_near("intercept", closed.intercept, -0.1027, 1e-3);
    c.expect_near("queue-length coefficient", closed.coefficients[0], 0.6575, 1e-3);
    c.expect_near("gate-time coefficient", closed.coefficients[1], 1.6644, 1e-3);
    c.expect_near("r_squared", closed.r_squared, 0.9042, 1e-3);
    c.expect_near("prediction at (6, 5)",
                  predict(closed, std::vector<double>{6.0, 5.0}), 12.1643, 1e-3);

    const auto general = general_ols({x1.values(), x2.values()}, y);
    c.expect_near("general vs closed form: intercept", general.intercept,
                  closed.intercept, 1e-9);
    c.expect_near("general vs closed form: b1", general.coefficients[0],
                  closed.coefficients[0], 1e-9);
    c.expect_near("general vs closed form: b2", general.coefficients[1],
                  closed.coefficients[1], 1e-9);
    return c.finish();
}

bool criterion_7() {
    Criterion c(7, "three-predictor regression of container shipping costs");
    const auto data = load_csv(testsupport::fixture_path("exercise_11_4.csv"));
    const auto model = general_ols({data.numeric_column("distance").values(),
                                    data.numeric_column("transfers").values(),
                                    data.numeric_column("delivery_time").values()},
                                   data.numeric_column("costs"));
    c.expect_near("intercept", model.intercept, -0.4836, 2e-3);
    c.expect_near("distance coefficient", model.coefficients[0], 0.0110, 2e-3);
    c.expect_near("transfer coefficient", model.coefficients[1], -0.2957, 2e-3);
    c.expect_near("delivery-time coefficient", model.coefficients[2], 0.0684, 2e-3);
    c.expect_near("r_squared", model.r_squared, 0.73, 0.01);
    c.expect_near("prediction at (700, 3, 14)",
                  predict(model, std::vector<double>{700, 3, 14}), 7.28621, 0.02);
    return c.finish();
}

bool criterion_8() {
    Criterion c(8, "fuzzy regression of truck queueing time (h = 0.9)");
    const auto data = load_csv(testsupport::fixture_path("example_11_5.csv"));
    const std::vector<std::vector<double>> cols = {
        data.numeric_column("queue_length").values(),
        data.numeric_column("gate_time").values()};
    const Sample y = data.numeric_column("queueing_time");
    const auto model = fit(cols, y, 0.9);

    const auto interval = predict_interval(model, std::vector<double>{6.0, 5.0});
    c.expect_near("interval lower at (6, 5)", interval.lower, -6.873, 5e-3);
    c.expect_near("interval upper at (6, 5)", interval.upper, 38.957, 5e-3);
    c.expect_near("interval midpoint", interval.midpoint, 16.04, 0.01);
    c.expect_near("LP objective", model.objective, 87.08, 0.05);

    // Coefficient comparison; an alternate optimum with an equal
    // objective would be acceptable, in which case the interval and
    // objective checks above govern.
    const std::vector<double> ref_centers = {-2.333, 1.5, 1.875};
    const std::vector<double> ref_radii = {0.0, 0.0, 4.583};
    bool coeffs_match = true;
    for (std::size_t k = 0; k < 3; ++k) {
        coeffs_match = coeffs_match && std::fabs(model.centers[k] - ref_centers[k]) <= 2e-3 &&
                       std::fabs(model.radii[k] - ref_radii[k]) <= 2e-3;
    }
    if (!coeffs_match) {
        c.note("solver returned an alternate optimum; objective/interval checks govern");
    }
    return c.finish();
}

bool criterion_9() {
    Criterion c(9, "fuzzy regression of shipping costs reproduces the published solution");
    const auto data = load_csv(testsupport::fixture_path("exercise_11_4.csv"));
    const std::vector<std::vector<double>> cols = {
        data.numeric_column("distance").values(),
        data.numeric_column("transfers").values()};
    const Sample y = data.numeric_column("costs");

    const std::vector<double> ref_centers = {0.36, 0.0088, 0.19};
    const std::vector<double> ref_radii = {7.8, 0.0, 0.0};
    const double tol = 0.05;

    // Protocol: try h = 0.9 first, then scan h in {0, 0.1, ..., 0.9} and
    // record the first h that reproduces the published values.
    std::vector<double> h_grid = {0.9, 0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
    double matched_h = -1.0;
    std::ostringstream scan;
    scan.precision(6);
    for (double h : h_grid) {
        const auto model = fit(cols, y, h);
        bool match = true;
        for (std::size_t k = 0; k < 3; ++k) {
            match = match && std::fabs(model.centers[k] - ref_centers[k]) <= tol &&
                    std::fabs(model.radii[k] - ref_radii[k]) <= tol;
        }
        scan << "h = " << h << ": centers (" << model.centers[0] << ", " << model.centers[1]
             << ", " << model.centers[2] << "), radii (" << model.radii[0] << ", "
             << model.radii[1] << ", " << model.radii[2] << "), Z = " << model.objective
             << (match ? "  <- match" : "");
        if (match && matched_h < 0.0) {
            matched_h = h;
        }
        if (h != h_grid.back()) scan << "\n    ";
    }
    c.note("h scan: " + scan.str());
    if (matched_h >= 0.0) {
        c.note("published values reproduced at h = " + std::to_string(matched_h));
    }
    c.expect_true("published centers/radii reproduced at some h in the grid",
                  matched_h >= 0.0);
    return c.finish();
}

bool criterion_10() {
    Criterion c(10, "property suites (regressions, LPs, fuzzy coverage, gof, normal cdf)");
    std::mt19937 rng(987654321);

    // -- 200 random regressions: residual orthogonality and r^2 == R^2.
    {
        std::uniform_real_distribution<double> value_dist(-5.0, 5.0);
        std::normal_distribution<double> noise(0.0, 1.5);
        std::uniform_int_distribution<int> n_dist(8, 30);
        std::uniform_int_distribution<int> p_dist(1, 4);
        bool orthogonal = true;
        bool identity = true;
        for (int trial = 0; trial < 200; ++trial) {
            const int n = n_dist(rng);
            const int p = p_dist(rng);
            std::vector<std::vector<double>> cols(p, std::vector<double>(n));
            for (auto& col : cols) {
                for (double& v : col) v = value_dist(rng);
            }
            std::vector<double> yv(n);
            for (int i = 0; i < n; ++i) {
                yv[i] = value_dist(rng) + noise(rng);
                for (int j = 0; j < p; ++j) yv[i] += 0.4 * cols[j][i];
            }
            const Sample y(yv);
            const auto model = general_ols(cols, y);
            double sum_r = 0;
            std::vector<double> dots(p, 0.0);
            for (int i = 0; i < n; ++i) {
                double fitted = model.intercept;
                for (int j = 0; j < p; ++j) fitted += model.coefficients[j] * cols[j][i];
                const double r = yv[i] - fitted;
                sum_r += r;
                for (int j = 0; j < p; ++j) dots[j] += r * cols[j][i];
            }
            orthogonal = orthogonal && std::fabs(sum_r) < 1e-7 * n;
            for (int j = 0; j < p; ++j) {
                orthogonal = orthogonal && std::fabs(dots[j]) < 1e-6;
            }
            if (p == 1) {
                const double r = pearson_r(Sample(cols[0]), y);
                identity = identity && std::fabs(r * r - model.r_squared) < 1e-10;
            }
        }
        c.expect_true("200 random regressions: residuals orthogonal", orthogonal);
        c.expect_true("200 random regressions: r^2 equals R^2", identity);
    }

    // -- 100 random small LPs: feasible and vertex-enumeration optimal.
    {
        bool feasible_ok = true;
        bool optimal_ok = true;
        int optimal_count = 0;
        for (int trial = 0; trial < 100; ++trial) {
            const auto p = testsupport::random_boxed_lp(rng);
            const auto s = lp::solve(p);
            if (s.status != lp::Status::optimal) {
                continue;
            }
            ++optimal_count;
            for (std::size_t j = 0; j < p.objective.size(); ++j) {
                feasible_ok = feasible_ok &&
                              s.variable_values[j] >= p.bounds[j].lower - 1e-9 &&
                              s.variable_values[j] <= p.bounds[j].upper + 1e-9;
            }
            for (const auto& con : p.constraints) {
                double lhs = 0;
                for (std::size_t j = 0; j < p.objective.size(); ++j) {
                    lhs += con.coefficients[j] * s.variable_values[j];
                }
                if (con.relation == lp::Relation::less_equal) {
                    feasible_ok = feasible_ok && lhs <= con.rhs + 1e-7;
                } else if (con.relation == lp::Relation::greater_equal) {
                    feasible_ok = feasible_ok && lhs >= con.rhs - 1e-7;
                } else {
                    feasible_ok = feasible_ok && std::fabs(lhs - con.rhs) <= 1e-7;
                }
            }
            const auto brute = testsupport::brute_force_lp_minimum(p);
            optimal_ok = optimal_ok && brute.has_value() &&
                         std::fabs(s.objective_value - *brute) <= 1e-6;
        }
        c.expect_true("random LPs: solutions feasible", feasible_ok);
        c.expect_true("random LPs: objective matches vertex enumeration", optimal_ok);
        c.expect_true("random LPs: at least 80 solvable instances", optimal_count >= 80);
    }

    // -- 100 random fuzzy fits: coverage invariant.
    {
        std::uniform_real_distribution<double> x_dist(0.0, 8.0);
        std::uniform_real_distribution<double> noise(-3.0, 3.0);
        std::uniform_int_distribution<int> n_dist(2, 12);
        std::uniform_int_distribution<int> p_dist(1, 3);
        std::uniform_real_distribution<double> h_dist(0.0, 0.95);
        bool covered = true;
        for (int trial = 0; trial < 100; ++trial) {
            const int n = n_dist(rng);
            const int p = p_dist(rng);
            std::vector<std::vector<double>> cols(p, std::vector<double>(n));
            for (auto& col : cols) {
                for (double& v : col) v = x_dist(rng);
            }
            std::vector<double> yv(n);
            for (int i = 0; i < n; ++i) {
                yv[i] = noise(rng);
                for (int j = 0; j < p; ++j) yv[i] += 0.5 * cols[j][i];
            }
            const double h = std::min(h_dist(rng), 0.9);
            const auto model = fit(cols, Sample(yv), h);
            for (int i = 0; i < n; ++i) {
                double center = model.centers[0];
                double radius = model.radii[0];
                for (int j = 0; j < p; ++j) {
                    center += model.centers[j + 1] * cols[j][i];
                    radius += model.radii[j + 1] * cols[j][i];
                }
                covered = covered && std::fabs(center - yv[i]) <= (1.0 - h) * radius + 1e-6;
            }
        }
        c.expect_true("random fuzzy fits: every training point covered", covered);
    }

    // -- GOF statistic invariants: bin permutation and scale equivariance.
    {
        const Sample sample = fixture_column("example_11_1.csv", "time");
        const auto fitres = fit_mle(sample, Family::lognormal);
        const BinSpec bins{kGateEdges, true};
        const auto hist = bin(sample, bins);
        const auto expected = expected_frequencies(fitres.spec, bins, sample.size());
        const double base = chi_square_gof(hist, expected, 2, 0.05).statistic;
        bool invariant = true;
        std::vector<std::size_t> order(hist.counts.size());
        std::iota(order.begin(), order.end(), 0);
        for (int trial = 0; trial < 50; ++trial) {
            std::shuffle(order.begin(), order.end(), rng);
            Histogram permuted = hist;
            std::vector<double> perm_expected(expected.size());
            for (std::size_t i = 0; i < order.size(); ++i) {
                permuted.counts[i] = hist.counts[order[i]];
                perm_expected[i] = expected[order[i]];
            }
            invariant = invariant &&
                        std::fabs(chi_square_gof(permuted, perm_expected, 2, 0.05).statistic -
                                  base) < 1e-10;
        }
        c.expect_true("chi-square statistic invariant under bin permutation", invariant);

        // Scaling the sample by c > 0 with a matching meanlog shift
        // leaves the lognormal K-S and A-D statistics unchanged.
        const double base_ks = ks_test(sample, fitres.spec, 0.05).statistic;
        const double base_ad = ad_test(sample, fitres.spec, 0.05).statistic;
        bool scale_ok = true;
        for (double scale : {0.2, 3.0, 17.5}) {
            std::vector<double> scaled;
            for (double v : sample) scaled.push_back(v * scale);
            const auto shifted = DistributionSpec::lognormal(
                fitres.spec.params()[0] + std::log(scale), fitres.spec.params()[1]);
            scale_ok = scale_ok &&
                       std::fabs(ks_test(Sample(scaled), shifted, 0.05).statistic - base_ks) <
                           1e-9 &&
                       std::fabs(ad_test(Sample(scaled), shifted, 0.05).statistic - base_ad) <
                           1e-7;
        }
        c.expect_true("K-S and A-D statistics scale-equivariant", scale_ok);
    }

    // -- Normal cdf accuracy on a 10^4-point grid against the series oracle.
    {
        double worst = 0;
        for (int i = 0; i <= 10000; ++i) {
            const double z = -8.0 + 16.0 * i / 10000.0;
            const double err = std::fabs(
                std_normal_cdf(z) - static_cast<double>(testsupport::std_normal_cdf_oracle(z)));
            worst = std::max(worst, err);
        }
        c.expect_true("standard normal cdf within 1e-9 of the series oracle (worst " +
                          std::to_string(worst) + ")",
                      worst < 1e-9);
    }

    return c.finish();
}

}  // namespace

int main() {
    bool all = true;
    all &= criterion_1();
    all &= criterion_2();
    all &= criterion_3();
    all &= criterion_4();
    all &= criterion_5();
    all &= criterion_6();
    all &= criterion_7();
    all &= criterion_8();
    all &= criterion_9();
    all &= criterion_10();
    std::printf("%s\n", all ? "acceptance: all criteria passed"
                            : "acceptance: one or more criteria FAILED");
    return all ? 0 : 1;
}
