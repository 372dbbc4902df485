#include "cli_app.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "freightstat/crosstab.hpp"
#include "freightstat/csv.hpp"
#include "freightstat/descriptive.hpp"
#include "freightstat/distributions.hpp"
#include "freightstat/fuzzy.hpp"
#include "freightstat/gof.hpp"
#include "freightstat/lp.hpp"
#include "freightstat/regression.hpp"
#include "freightstat/sample.hpp"

namespace freightstat::cli {

namespace {

using json = nlohmann::ordered_json;

struct GlobalOptions {
    bool json_output = false;
    std::string delimiter = ",";
    bool no_header = false;
    std::string missing = "NA";
};

CsvOptions csv_options(const GlobalOptions& g) {
    if (g.delimiter.size() != 1) {
        throw std::invalid_argument("--delimiter must be a single character");
    }
    CsvOptions opt;
    opt.delimiter = g.delimiter[0];
    opt.header = !g.no_header;
    opt.missing_marker = g.missing;
    return opt;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.8g", v);
    return buf;
}

std::vector<double> parse_edge_list(const std::string& text) {
    std::vector<double> edges;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        double v = 0;
        try {
            v = std::stod(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse bin edge '" + item + "'");
        }
        if (pos != item.size()) {
            throw std::invalid_argument("cannot parse bin edge '" + item + "'");
        }
        edges.push_back(v);
    }
    if (edges.empty()) {
        throw std::invalid_argument("--bins needs at least one edge");
    }
    return edges;
}

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> names;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            names.push_back(item);
        }
    }
    if (names.empty()) {
        throw std::invalid_argument("expected a comma-separated column list");
    }
    return names;
}

/// "--predict name=value,..." resolved against the predictor order.
std::vector<double> parse_predict_point(const std::string& text,
                                        const std::vector<std::string>& predictors) {
    std::vector<double> point(predictors.size());
    std::vector<bool> seen(predictors.size(), false);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("--predict expects name=value pairs, got '" + item + "'");
        }
        const std::string name = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        const auto it = std::find(predictors.begin(), predictors.end(), name);
        if (it == predictors.end()) {
            throw std::invalid_argument("--predict names unknown predictor '" + name + "'");
        }
        const auto idx = static_cast<std::size_t>(it - predictors.begin());
        std::size_t pos = 0;
        try {
            point[idx] = std::stod(value, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse --predict value '" + value + "'");
        }
        if (pos != value.size()) {
            throw std::invalid_argument("cannot parse --predict value '" + value + "'");
        }
        seen[idx] = true;
    }
    for (std::size_t j = 0; j < predictors.size(); ++j) {
        if (!seen[j]) {
            throw std::invalid_argument("--predict is missing a value for '" + predictors[j] +
                                        "'");
        }
    }
    return point;
}

json input_digest(const Dataset& data, const std::vector<std::string>& used_columns) {
    return json{{"columns", used_columns}, {"n", data.row_count()}};
}

json gof_report_json(const GofReport& report) {
    json j;
    j["test"] = to_string(report.test);
    j["statistic"] = report.statistic;
    if (report.test == GofTest::chi_square) {
        j["df"] = report.df;
    }
    j["alpha"] = report.alpha;
    j["critical_value"] = report.critical_value;
    if (report.p_value) {
        j["p_value"] = *report.p_value;
    }
    j["reject_null"] = report.reject_null;
    j["decision"] = report.reject_null ? "reject" : "fail to reject";
    return j;
}

void print_warnings_text(const json& report, std::ostream& out) {
    if (!report.contains("warnings")) return;
    for (const auto& w : report["warnings"]) {
        out << "warning: " << w.get<std::string>() << "\n";
    }
}

void print_gof_tail_text(const json& j, std::ostream& out) {
    out << "statistic = " << fmt(j["statistic"].get<double>()) << "\n";
    if (j.contains("df")) {
        out << "df = " << j["df"].get<int>() << "\n";
    }
    out << "critical value (alpha = " << fmt(j["alpha"].get<double>())
        << ") = " << fmt(j["critical_value"].get<double>()) << "\n";
    if (j.contains("p_value")) {
        out << "p-value = " << fmt(j["p_value"].get<double>()) << "\n";
    }
    out << "decision: " << j["decision"].get<std::string>() << " the null hypothesis\n";
}

// ---------------------------------------------------------------- summary

json run_summary(const Dataset& data, const std::string& col,
                 const std::optional<std::string>& bins_text) {
    const Sample sample = data.numeric_column(col);
    const SummaryStats s = summarize(sample);
    json j;
    j["analysis"] = "summary";
    j["input"] = input_digest(data, {col});
    j["n"] = s.n;
    j["mean"] = s.mean;
    j["median"] = s.median;
    j["min"] = s.min;
    j["max"] = s.max;
    j["mode"] = s.mode;
    j["range"] = s.range;
    j["q1"] = s.q1;
    j["q3"] = s.q3;
    j["iqr"] = s.iqr;
    j["variance"] = s.variance;
    j["std_dev"] = s.std_dev;
    j["skewness"] = s.skewness;
    j["kurtosis_excess"] = s.kurtosis_excess;
    if (bins_text) {
        BinSpec spec{parse_edge_list(*bins_text), true};
        const Histogram h = bin(sample, spec);
        j["histogram"] = {{"edges", spec.edges},
                          {"open_last", spec.open_last},
                          {"counts", h.counts},
                          {"uncovered", h.uncovered}};
    }
    j["warnings"] = json::array();
    return j;
}

void print_summary_text(const json& j, std::ostream& out) {
    out << "summary of '" << j["input"]["columns"][0].get<std::string>() << "' (n = "
        << j["n"].get<std::size_t>() << ")\n";
    for (const char* key : {"mean", "median", "min", "max", "range", "q1", "q3", "iqr",
                            "variance", "std_dev", "skewness", "kurtosis_excess"}) {
        out << "  " << key << " = ";
        if (j[key].is_null()) {
            out << "undefined";
        } else {
            out << fmt(j[key].get<double>());
        }
        out << "\n";
    }
    out << "  mode =";
    if (j["mode"].empty()) {
        out << " (none)";
    } else {
        for (const auto& m : j["mode"]) {
            out << ' ' << fmt(m.get<double>());
        }
    }
    out << "\n";
    if (j.contains("histogram")) {
        out << "histogram (bin lower edge, count):\n";
        const auto& h = j["histogram"];
        const auto& edges = h["edges"];
        const auto& counts = h["counts"];
        for (std::size_t i = 0; i < counts.size(); ++i) {
            out << fmt(edges[std::min(i, edges.size() - 1)].get<double>()) << ' '
                << counts[i].get<std::size_t>() << "\n";
        }
        if (h["uncovered"].get<std::size_t>() > 0) {
            out << "# uncovered observations: " << h["uncovered"].get<std::size_t>() << "\n";
        }
    }
}

// -------------------------------------------------------------------- fit

json fit_result_json(const FitResult& fit) {
    json params;
    const auto names = fit.spec.param_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        params[names[i]] = fit.spec.params()[i];
    }
    return json{{"family", to_string(fit.spec.family())},
                {"params", params},
                {"n", fit.n},
                {"loglik", fit.loglik},
                {"aic", fit.aic},
                {"bic", fit.bic},
                {"std_errors", fit.std_errors}};
}

json run_fit(const Dataset& data, const std::string& col, const std::string& family_name) {
    const Sample sample = data.numeric_column(col);
    const FitResult fit = fit_mle(sample, family_from_string(family_name));
    json j;
    j["analysis"] = "fit";
    j["input"] = input_digest(data, {col});
    j.update(fit_result_json(fit));
    j["warnings"] = json::array();
    return j;
}

void print_fit_text(const json& j, std::ostream& out) {
    out << "maximum-likelihood fit of '" << j["family"].get<std::string>() << "' (n = "
        << j["n"].get<std::size_t>() << ")\n";
    for (const auto& [name, value] : j["params"].items()) {
        out << "  " << name << " = " << fmt(value.get<double>()) << "\n";
    }
    out << "  std errors:";
    for (const auto& se : j["std_errors"]) {
        out << ' ' << fmt(se.get<double>());
    }
    out << "\n";
    out << "  loglik = " << fmt(j["loglik"].get<double>()) << "\n";
    out << "  aic = " << fmt(j["aic"].get<double>()) << "\n";
    out << "  bic = " << fmt(j["bic"].get<double>()) << "\n";
}

// -------------------------------------------------------------------- gof

json run_gof(const Dataset& data, const std::string& col, const std::string& family_name,
             const std::string& test_name, const std::optional<std::string>& bins_text,
             double alpha) {
    const Sample sample = data.numeric_column(col);
    const FitResult fit = fit_mle(sample, family_from_string(family_name));

    json j;
    j["analysis"] = "gof";
    j["input"] = input_digest(data, {col});
    j["fit"] = fit_result_json(fit);
    std::vector<std::string> warnings;

    GofReport report;
    if (test_name == "chi2") {
        if (!bins_text) {
            throw std::invalid_argument("--test chi2 requires --bins");
        }
        BinSpec spec{parse_edge_list(*bins_text), true};
        const Histogram hist = bin(sample, spec);
        if (hist.uncovered > 0) {
            warnings.push_back(std::to_string(hist.uncovered) +
                               " observation(s) fall below the first bin edge and are "
                               "excluded from the binned counts");
        }
        const auto expected = expected_frequencies(fit.spec, spec, sample.size());
        report = chi_square_gof(hist, expected, fit.spec.param_count(), alpha);
        j["bins"] = spec.edges;
        j["observed"] = hist.counts;
        j["expected"] = expected;
    } else if (test_name == "ks") {
        report = ks_test(sample, fit.spec, alpha);
    } else if (test_name == "ad") {
        report = ad_test(sample, fit.spec, alpha);
    } else {
        throw std::invalid_argument("unknown test '" + test_name + "' (chi2, ks, ad)");
    }
    if (bins_text && test_name != "chi2") {
        warnings.push_back("--bins is ignored for the " + test_name + " test");
    }

    j.update(gof_report_json(report));
    warnings.insert(warnings.end(), report.warnings.begin(), report.warnings.end());
    j["warnings"] = warnings;
    return j;
}

void print_gof_text(const json& j, std::ostream& out) {
    out << "goodness-of-fit: " << j["test"].get<std::string>() << "\n";
    out << "fitted: " << j["fit"]["family"].get<std::string>() << " with";
    for (const auto& [name, value] : j["fit"]["params"].items()) {
        out << ' ' << name << " = " << fmt(value.get<double>());
    }
    out << "\n";
    if (j.contains("observed")) {
        out << "observed:";
        for (const auto& o : j["observed"]) out << ' ' << o.get<std::size_t>();
        out << "\nexpected:";
        for (const auto& e : j["expected"]) out << ' ' << fmt(e.get<double>());
        out << "\n";
    }
    print_gof_tail_text(j, out);
    print_warnings_text(j, out);
}

// --------------------------------------------------------------- crosstab

json run_crosstab(const Dataset& data, const std::string& rows_col,
                  const std::string& cols_col, double alpha) {
    const auto rows = data.categorical_column(rows_col);
    const auto cols = data.categorical_column(cols_col);
    std::vector<std::pair<std::string, std::string>> pairs;
    pairs.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        pairs.emplace_back(rows[i], cols[i]);
    }
    const ContingencyTable table = tabulate(pairs);
    const auto expected = expected_table(table);
    const GofReport report = independence_test(table, alpha);

    json j;
    j["analysis"] = "crosstab";
    j["input"] = input_digest(data, {rows_col, cols_col});
    j["row_variable"] = rows_col;
    j["col_variable"] = cols_col;
    j["row_labels"] = table.row_labels;
    j["col_labels"] = table.col_labels;
    j["counts"] = table.counts;
    j["row_totals"] = table.row_totals;
    j["col_totals"] = table.col_totals;
    j["grand_total"] = table.grand_total;
    j["expected"] = expected;
    j.update(gof_report_json(report));
    j["warnings"] = report.warnings;
    return j;
}

void print_crosstab_text(const json& j, std::ostream& out) {
    out << "cross tabulation of '" << j["row_variable"].get<std::string>() << "' by '"
        << j["col_variable"].get<std::string>() << "'\n";
    out << "        ";
    for (const auto& c : j["col_labels"]) {
        out << '\t' << c.get<std::string>();
    }
    out << "\ttotal\n";
    const auto& counts = j["counts"];
    for (std::size_t r = 0; r < counts.size(); ++r) {
        out << j["row_labels"][r].get<std::string>();
        for (const auto& v : counts[r]) {
            out << '\t' << v.get<long long>();
        }
        out << '\t' << j["row_totals"][r].get<long long>() << "\n";
    }
    out << "total";
    for (const auto& v : j["col_totals"]) {
        out << '\t' << v.get<long long>();
    }
    out << '\t' << j["grand_total"].get<long long>() << "\n";
    out << "expected frequencies:\n";
    for (const auto& row : j["expected"]) {
        out << " ";
        for (const auto& v : row) {
            out << ' ' << fmt(v.get<double>());
        }
        out << "\n";
    }
    print_gof_tail_text(j, out);
    print_warnings_text(j, out);
}

// ---------------------------------------------------------------- regress

json run_regress(const Dataset& data, const std::string& y_col,
                 const std::string& x_list, const std::optional<std::string>& predict_text) {
    const auto x_names = split_names(x_list);
    const Sample y = data.numeric_column(y_col);

    LinearModel model;
    json j;
    j["analysis"] = "regress";
    std::vector<std::string> used = {y_col};
    used.insert(used.end(), x_names.begin(), x_names.end());
    j["input"] = input_digest(data, used);
    j["response"] = y_col;
    j["predictors"] = x_names;

    if (x_names.size() == 1) {
        const Sample x = data.numeric_column(x_names[0]);
        model = simple_ols(x, y);
        j["pearson_r"] = pearson_r(x, y);
    } else {
        std::vector<std::vector<double>> columns;
        columns.reserve(x_names.size());
        for (const auto& name : x_names) {
            columns.push_back(data.numeric_column(name).values());
        }
        model = general_ols(columns, y);
    }
    model.predictor_names = x_names;

    j["intercept"] = model.intercept;
    j["coefficients"] = model.coefficients;
    j["std_errors"] = model.std_errors;
    j["r_squared"] = model.r_squared;
    j["adj_r_squared"] = model.adj_r_squared;
    j["residual_std_error"] = model.residual_std_error;
    j["df_residual"] = model.df_residual;
    j["n"] = model.n;
    if (predict_text) {
        const auto point = parse_predict_point(*predict_text, x_names);
        json point_json;
        for (std::size_t k = 0; k < x_names.size(); ++k) {
            point_json[x_names[k]] = point[k];
        }
        j["prediction"] = {{"point", point_json}, {"value", predict(model, point)}};
    }
    j["warnings"] = json::array();
    return j;
}

void print_regress_text(const json& j, std::ostream& out) {
    out << "least-squares fit: " << j["response"].get<std::string>() << " ~";
    for (const auto& p : j["predictors"]) {
        out << ' ' << p.get<std::string>();
    }
    out << "\n";
    out << "  intercept = " << fmt(j["intercept"].get<double>()) << "\n";
    for (std::size_t k = 0; k < j["coefficients"].size(); ++k) {
        out << "  " << j["predictors"][k].get<std::string>() << " = "
            << fmt(j["coefficients"][k].get<double>()) << "\n";
    }
    out << "  r_squared = " << fmt(j["r_squared"].get<double>())
        << ", adj_r_squared = " << fmt(j["adj_r_squared"].get<double>()) << "\n";
    out << "  residual std error = " << fmt(j["residual_std_error"].get<double>()) << " on "
        << j["df_residual"].get<int>() << " degrees of freedom\n";
    if (j.contains("pearson_r")) {
        out << "  pearson r = " << fmt(j["pearson_r"].get<double>()) << "\n";
    }
    if (j.contains("prediction")) {
        out << "prediction at";
        for (const auto& [name, value] : j["prediction"]["point"].items()) {
            out << ' ' << name << " = " << fmt(value.get<double>());
        }
        out << ": " << fmt(j["prediction"]["value"].get<double>()) << "\n";
    }
    print_warnings_text(j, out);
}

// ------------------------------------------------------------------ fuzzy

std::vector<std::vector<double>> predictor_matrix(const Dataset& data,
                                                  const std::vector<std::string>& names) {
    std::vector<std::vector<double>> columns;
    columns.reserve(names.size());
    for (const auto& name : names) {
        columns.push_back(data.numeric_column(name).values());
    }
    return columns;
}

json run_fuzzy(const Dataset& data, const std::string& y_col, const std::string& x_list,
               double h, const std::optional<std::string>& predict_text) {
    const auto x_names = split_names(x_list);
    const Sample y = data.numeric_column(y_col);
    FuzzyModel model = fit(predictor_matrix(data, x_names), y, h);
    model.predictor_names = x_names;

    json j;
    j["analysis"] = "fuzzy";
    std::vector<std::string> used = {y_col};
    used.insert(used.end(), x_names.begin(), x_names.end());
    j["input"] = input_digest(data, used);
    j["response"] = y_col;
    j["predictors"] = x_names;
    j["h"] = model.h;
    j["centers"] = model.centers;
    j["radii"] = model.radii;
    j["objective"] = model.objective;
    if (predict_text) {
        const auto point = parse_predict_point(*predict_text, x_names);
        const FuzzyInterval interval = predict_interval(model, point);
        json point_json;
        for (std::size_t k = 0; k < x_names.size(); ++k) {
            point_json[x_names[k]] = point[k];
        }
        j["prediction"] = {{"point", point_json},
                           {"lower", interval.lower},
                           {"upper", interval.upper},
                           {"midpoint", interval.midpoint}};
    }
    j["warnings"] = json::array();
    return j;
}

void print_fuzzy_text(const json& j, std::ostream& out) {
    out << "fuzzy regression: " << j["response"].get<std::string>() << " ~";
    for (const auto& p : j["predictors"]) {
        out << ' ' << p.get<std::string>();
    }
    out << "  (h = " << fmt(j["h"].get<double>()) << ")\n";
    const auto& centers = j["centers"];
    const auto& radii = j["radii"];
    std::size_t width = 9;  // "intercept"
    for (const auto& p : j["predictors"]) {
        width = std::max(width, p.get<std::string>().size());
    }
    for (std::size_t k = 0; k < centers.size(); ++k) {
        std::string name = k == 0 ? "intercept" : j["predictors"][k - 1].get<std::string>();
        name.resize(width, ' ');
        out << "  " << name << "  center " << fmt(centers[k].get<double>())
            << ", radius " << fmt(radii[k].get<double>()) << "\n";
    }
    out << "  total fuzziness = " << fmt(j["objective"].get<double>()) << "\n";
    if (j.contains("prediction")) {
        out << "prediction at";
        for (const auto& [name, value] : j["prediction"]["point"].items()) {
            out << ' ' << name << " = " << fmt(value.get<double>());
        }
        out << ": [" << fmt(j["prediction"]["lower"].get<double>()) << ", "
            << fmt(j["prediction"]["upper"].get<double>()) << "], midpoint "
            << fmt(j["prediction"]["midpoint"].get<double>()) << "\n";
    }
    print_warnings_text(j, out);
}

json run_lp_debug(const Dataset& data, const std::string& y_col, const std::string& x_list,
                  double h) {
    const auto x_names = split_names(x_list);
    const Sample y = data.numeric_column(y_col);
    const lp::Problem problem = build_lp(predictor_matrix(data, x_names), y, h);

    json j;
    j["analysis"] = "lp_debug";
    std::vector<std::string> used = {y_col};
    used.insert(used.end(), x_names.begin(), x_names.end());
    j["input"] = input_digest(data, used);
    j["h"] = h;
    j["variables"] = 2 * (x_names.size() + 1);
    j["constraints"] = problem.constraints.size();
    j["lp_text"] = lp::to_text(problem);
    return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    GlobalOptions global;

    CLI::App app{"batch statistics for freight operations data"};
    app.require_subcommand(1);
    app.add_flag("--json", global.json_output, "emit the report as JSON");
    app.add_option("--delimiter", global.delimiter, "CSV field delimiter (default ',')");
    app.add_flag("--no-header", global.no_header, "input has no header row");
    app.add_option("--missing", global.missing, "missing-value marker (default NA)");

    std::string file, col, family = "lognormal", test, rows_col, cols_col;
    std::string y_col, x_list;
    std::optional<std::string> bins_text, predict_text;
    double alpha = 0.05;
    double h = 0.9;

    auto* summary = app.add_subcommand("summary", "descriptive statistics of one column");
    summary->add_option("--col", col, "numeric column")->required();
    summary->add_option("--bins", bins_text,
                        "histogram bin edges (comma list; final bin open above)");
    summary->add_option("file", file, "CSV input")->required();

    auto* fit_cmd = app.add_subcommand("fit", "maximum-likelihood distribution fit");
    fit_cmd->add_option("--family", family, "lognormal | normal | exponential")->required();
    fit_cmd->add_option("--col", col, "numeric column")->required();
    fit_cmd->add_option("file", file, "CSV input")->required();

    auto* gof = app.add_subcommand("gof", "fit a distribution and test the fit");
    gof->add_option("--fit", family, "family to fit (lognormal | normal | exponential)")
        ->required();
    gof->add_option("--test", test, "chi2 | ks | ad")->required();
    gof->add_option("--bins", bins_text, "bin edges for chi2 (final bin open above)");
    gof->add_option("--alpha", alpha, "significance level (0.05 or 0.01)");
    gof->add_option("--col", col, "numeric column")->required();
    gof->add_option("file", file, "CSV input")->required();

    auto* crosstab = app.add_subcommand("crosstab", "cross tabulation + independence test");
    crosstab->add_option("--rows", rows_col, "row category column")->required();
    crosstab->add_option("--cols", cols_col, "column category column")->required();
    crosstab->add_option("--alpha", alpha, "significance level (0.05 or 0.01)");
    crosstab->add_option("file", file, "CSV input")->required();

    auto* regress = app.add_subcommand("regress", "ordinary least squares");
    regress->add_option("--y", y_col, "response column")->required();
    regress->add_option("--x", x_list, "comma-separated predictor columns")->required();
    regress->add_option("--predict", predict_text, "name=value list for a point prediction");
    regress->add_option("file", file, "CSV input")->required();

    auto* fuzzy = app.add_subcommand("fuzzy", "fuzzy linear regression (interval model)");
    fuzzy->set_help_flag("--help", "print help");  // frees -h for the option below
    fuzzy->add_option("--y", y_col, "response column")->required();
    fuzzy->add_option("--x", x_list, "comma-separated predictor columns")->required();
    fuzzy->add_option("--h", h, "certainty factor in [0, 1)");
    fuzzy->add_option("--predict", predict_text, "name=value list for an interval prediction");
    fuzzy->add_option("file", file, "CSV input")->required();

    auto* lp_debug = app.add_subcommand("lp-debug", "dump the fuzzy-regression LP");
    lp_debug->set_help_flag("--help", "print help");
    lp_debug->add_option("--y", y_col, "response column")->required();
    lp_debug->add_option("--x", x_list, "comma-separated predictor columns")->required();
    lp_debug->add_option("--h", h, "certainty factor in [0, 1)");
    lp_debug->add_option("file", file, "CSV input")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        const Dataset data = load_csv(file, csv_options(global));
        json report;
        if (summary->parsed()) {
            report = run_summary(data, col, bins_text);
        } else if (fit_cmd->parsed()) {
            report = run_fit(data, col, family);
        } else if (gof->parsed()) {
            report = run_gof(data, col, family, test, bins_text, alpha);
        } else if (crosstab->parsed()) {
            report = run_crosstab(data, rows_col, cols_col, alpha);
        } else if (regress->parsed()) {
            report = run_regress(data, y_col, x_list, predict_text);
        } else if (fuzzy->parsed()) {
            report = run_fuzzy(data, y_col, x_list, h, predict_text);
        } else if (lp_debug->parsed()) {
            report = run_lp_debug(data, y_col, x_list, h);
        }

        if (global.json_output) {
            out << report.dump(2) << "\n";
        } else if (summary->parsed()) {
            print_summary_text(report, out);
        } else if (fit_cmd->parsed()) {
            print_fit_text(report, out);
        } else if (gof->parsed()) {
            print_gof_text(report, out);
        } else if (crosstab->parsed()) {
            print_crosstab_text(report, out);
        } else if (regress->parsed()) {
            print_regress_text(report, out);
        } else if (fuzzy->parsed()) {
            print_fuzzy_text(report, out);
        } else if (lp_debug->parsed()) {
            out << report["lp_text"].get<std::string>();
        }
        return 0;
    } catch (const std::exception& e) {
        if (global.json_output) {
            out << json{{"error", e.what()}}.dump(2) << "\n";
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace freightstat::cli
