#include "freightstat/lp.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace freightstat::lp {

namespace {

constexpr double kFeasTol = 1e-7;
constexpr double kCostTol = 1e-9;
constexpr double kPivotTol = 1e-11;
constexpr int kMaxIterations = 100000;

enum class VarKind { shifted, flipped, split };

// How one original variable maps onto the non-negative standard-form
// columns: shifted x = offset + x[col1], flipped x = offset - x[col1],
// split x = x[col1] - x[col2].
struct VarMap {
    VarKind kind;
    std::size_t col1 = 0;
    std::size_t col2 = 0;
    double offset = 0;
};

struct StdRow {
    std::vector<double> coeffs;  // over standard-form structural columns
    Relation relation;
    double rhs;
};

void validate(const Problem& problem) {
    const auto n = problem.objective.size();
    if (n == 0) {
        throw std::invalid_argument("LP has no variables");
    }
    if (problem.bounds.size() != n) {
        throw std::invalid_argument("LP needs one bound per variable");
    }
    for (double c : problem.objective) {
        if (!std::isfinite(c)) {
            throw std::invalid_argument("LP objective has a non-finite coefficient");
        }
    }
    for (const auto& b : problem.bounds) {
        if (std::isnan(b.lower) || std::isnan(b.upper) || b.lower > b.upper) {
            throw std::invalid_argument("LP has an empty or invalid variable bound");
        }
    }
    for (const auto& row : problem.constraints) {
        if (row.coefficients.size() != n) {
            throw std::invalid_argument("LP constraint length differs from variable count");
        }
        for (double c : row.coefficients) {
            if (!std::isfinite(c)) {
                throw std::invalid_argument("LP constraint has a non-finite coefficient");
            }
        }
        if (!std::isfinite(row.rhs)) {
            throw std::invalid_argument("LP constraint has a non-finite right-hand side");
        }
    }
}

// Dense simplex tableau in canonical form. Row `rows` is the objective
// row holding reduced costs; its rhs entry is minus the objective value.
struct Tableau {
    std::size_t rows = 0;
    std::size_t cols = 0;  // excluding rhs
    std::vector<std::vector<double>> t;
    std::vector<std::size_t> basis;  // basic column per constraint row

    double& at(std::size_t r, std::size_t c) { return t[r][c]; }
    double& rhs(std::size_t r) { return t[r][cols]; }
    double& obj(std::size_t c) { return t[rows][c]; }
    double& obj_rhs() { return t[rows][cols]; }

    void pivot(std::size_t pr, std::size_t pc) {
        const double p = t[pr][pc];
        for (std::size_t c = 0; c <= cols; ++c) {
            t[pr][c] /= p;
        }
        for (std::size_t r = 0; r <= rows; ++r) {
            if (r == pr) continue;
            const double f = t[r][pc];
            if (f == 0.0) continue;
            for (std::size_t c = 0; c <= cols; ++c) {
                t[r][c] -= f * t[pr][c];
            }
            t[r][pc] = 0.0;  // keep the column exactly canonical
        }
        basis[pr] = pc;
    }
};

enum class IterateResult { optimal, unbounded, breakdown, iteration_cap };

// Entering variable by the most negative reduced cost; a run of
// degenerate pivots switches to Bland's lowest-index rule (which cannot
// cycle) until the objective moves again. Leaving variable: minimum
// ratio, ties broken by the lowest basic-variable index.
IterateResult iterate(Tableau& tab, int& iterations, const std::vector<bool>& frozen) {
    int stalled_pivots = 0;
    bool bland_mode = false;
    while (true) {
        std::size_t entering = tab.cols;
        if (bland_mode) {
            for (std::size_t c = 0; c < tab.cols; ++c) {
                if (!frozen[c] && tab.obj(c) < -kCostTol) {
                    entering = c;
                    break;
                }
            }
        } else {
            double best = -kCostTol;
            for (std::size_t c = 0; c < tab.cols; ++c) {
                if (!frozen[c] && tab.obj(c) < best) {
                    best = tab.obj(c);
                    entering = c;
                }
            }
        }
        if (entering == tab.cols) {
            return IterateResult::optimal;
        }

        std::size_t leaving = tab.rows;
        double best_ratio = 0;
        bool positive_below_tol = false;
        for (std::size_t r = 0; r < tab.rows; ++r) {
            const double a = tab.at(r, entering);
            if (a > kPivotTol) {
                // Roundoff can leave a basic value a hair below zero;
                // treat it as a degenerate zero ratio.
                const double ratio = std::max(tab.rhs(r), 0.0) / a;
                if (leaving == tab.rows || ratio < best_ratio - 1e-12 ||
                    (std::fabs(ratio - best_ratio) <= 1e-12 &&
                     tab.basis[r] < tab.basis[leaving])) {
                    leaving = r;
                    best_ratio = ratio;
                }
            } else if (a > 0.0) {
                positive_below_tol = true;
            }
        }
        if (leaving == tab.rows) {
            return positive_below_tol ? IterateResult::breakdown : IterateResult::unbounded;
        }
        const double objective_before = tab.obj_rhs();
        tab.pivot(leaving, entering);
        if (++iterations > kMaxIterations) {
            return IterateResult::iteration_cap;
        }
        if (std::fabs(tab.obj_rhs() - objective_before) > 1e-12) {
            stalled_pivots = 0;
            bland_mode = false;
        } else if (++stalled_pivots > 40) {
            bland_mode = true;
        }
    }
}

Solution failure(const std::string& diagnostics, int iterations) {
    Solution s;
    s.status = Status::failure;
    s.diagnostics = diagnostics;
    s.iterations = iterations;
    return s;
}

}  // namespace

std::string to_string(Relation relation) {
    switch (relation) {
        case Relation::less_equal: return "<=";
        case Relation::greater_equal: return ">=";
        case Relation::equal: return "=";
    }
    return "?";
}

std::string to_string(Status status) {
    switch (status) {
        case Status::optimal: return "optimal";
        case Status::infeasible: return "infeasible";
        case Status::unbounded: return "unbounded";
        case Status::failure: return "failure";
    }
    return "unknown";
}

Solution solve(const Problem& problem) {
    validate(problem);
    const std::size_t n_orig = problem.objective.size();
    const double inf = Problem::infinity();

    // --- substitute every variable into x' >= 0 form -------------------
    std::vector<VarMap> var_map(n_orig);
    std::size_t n_std = 0;
    std::vector<double> upper_row_gap;        // gap values for both-finite bounds
    std::vector<std::size_t> upper_row_col;
    for (std::size_t j = 0; j < n_orig; ++j) {
        const auto& b = problem.bounds[j];
        if (b.lower == -inf && b.upper == inf) {
            var_map[j] = {VarKind::split, n_std, n_std + 1, 0.0};
            n_std += 2;
        } else if (b.lower != -inf) {
            var_map[j] = {VarKind::shifted, n_std, 0, b.lower};
            if (b.upper != inf) {
                upper_row_col.push_back(n_std);
                upper_row_gap.push_back(b.upper - b.lower);
            }
            n_std += 1;
        } else {
            var_map[j] = {VarKind::flipped, n_std, 0, b.upper};
            n_std += 1;
        }
    }

    std::vector<StdRow> rows;
    rows.reserve(problem.constraints.size() + upper_row_col.size());
    for (const auto& con : problem.constraints) {
        StdRow row{std::vector<double>(n_std, 0.0), con.relation, con.rhs};
        for (std::size_t j = 0; j < n_orig; ++j) {
            const double a = con.coefficients[j];
            if (a == 0.0) continue;
            const auto& vm = var_map[j];
            switch (vm.kind) {
                case VarKind::shifted:
                    row.coeffs[vm.col1] += a;
                    row.rhs -= a * vm.offset;
                    break;
                case VarKind::flipped:
                    row.coeffs[vm.col1] -= a;
                    row.rhs -= a * vm.offset;
                    break;
                case VarKind::split:
                    row.coeffs[vm.col1] += a;
                    row.coeffs[vm.col2] -= a;
                    break;
            }
        }
        rows.push_back(std::move(row));
    }
    for (std::size_t k = 0; k < upper_row_col.size(); ++k) {
        StdRow row{std::vector<double>(n_std, 0.0), Relation::less_equal, upper_row_gap[k]};
        row.coeffs[upper_row_col[k]] = 1.0;
        rows.push_back(std::move(row));
    }

    // --- standard form with non-negative rhs ---------------------------
    for (auto& row : rows) {
        if (row.rhs < 0.0) {
            for (double& c : row.coeffs) c = -c;
            row.rhs = -row.rhs;
            if (row.relation == Relation::less_equal) {
                row.relation = Relation::greater_equal;
            } else if (row.relation == Relation::greater_equal) {
                row.relation = Relation::less_equal;
            }
        }
    }

    const std::size_t m = rows.size();
    std::size_t n_slack = 0, n_art = 0;
    for (const auto& row : rows) {
        if (row.relation != Relation::equal) ++n_slack;
        if (row.relation != Relation::less_equal) ++n_art;
    }

    Tableau tab;
    tab.rows = m;
    tab.cols = n_std + n_slack + n_art;
    tab.t.assign(m + 1, std::vector<double>(tab.cols + 1, 0.0));
    tab.basis.assign(m, 0);

    const std::size_t slack_base = n_std;
    const std::size_t art_base = n_std + n_slack;
    std::size_t next_slack = 0, next_art = 0;
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n_std; ++c) {
            tab.at(r, c) = rows[r].coeffs[c];
        }
        tab.rhs(r) = rows[r].rhs;
        switch (rows[r].relation) {
            case Relation::less_equal:
                tab.at(r, slack_base + next_slack) = 1.0;
                tab.basis[r] = slack_base + next_slack;
                ++next_slack;
                break;
            case Relation::greater_equal:
                tab.at(r, slack_base + next_slack) = -1.0;
                ++next_slack;
                tab.at(r, art_base + next_art) = 1.0;
                tab.basis[r] = art_base + next_art;
                ++next_art;
                break;
            case Relation::equal:
                tab.at(r, art_base + next_art) = 1.0;
                tab.basis[r] = art_base + next_art;
                ++next_art;
                break;
        }
    }

    int iterations = 0;
    std::vector<bool> frozen(tab.cols, false);

    // --- phase 1: drive the artificials to zero ------------------------
    if (n_art > 0) {
        for (std::size_t c = art_base; c < tab.cols; ++c) {
            tab.obj(c) = 1.0;
        }
        tab.obj_rhs() = 0.0;
        for (std::size_t r = 0; r < m; ++r) {
            if (tab.basis[r] >= art_base) {
                for (std::size_t c = 0; c <= tab.cols; ++c) {
                    tab.t[m][c] -= tab.t[r][c];
                }
            }
        }
        const auto res = iterate(tab, iterations, frozen);
        if (res == IterateResult::breakdown) {
            return failure("numerical breakdown in phase 1: no pivot above 1e-11", iterations);
        }
        if (res == IterateResult::iteration_cap) {
            return failure("phase 1 exceeded the iteration cap", iterations);
        }
        if (res == IterateResult::unbounded) {
            return failure("phase 1 reported unbounded, which indicates corrupt input",
                           iterations);
        }
        const double phase1_value = -tab.obj_rhs();
        if (phase1_value > kFeasTol) {
            Solution s;
            s.status = Status::infeasible;
            s.iterations = iterations;
            return s;
        }
        // Pivot surviving artificials out of the basis; a row offering no
        // structural pivot is a redundant constraint and can stay (its
        // artificial is zero and gets frozen below).
        for (std::size_t r = 0; r < m; ++r) {
            if (tab.basis[r] < art_base) continue;
            std::size_t pc = tab.cols;
            for (std::size_t c = 0; c < art_base; ++c) {
                if (std::fabs(tab.at(r, c)) > kPivotTol) {
                    pc = c;
                    break;
                }
            }
            if (pc != tab.cols) {
                tab.pivot(r, pc);
                ++iterations;
            }
        }
        for (std::size_t c = art_base; c < tab.cols; ++c) {
            frozen[c] = true;
        }
    }

    // --- phase 2: original objective over the substituted columns ------
    for (std::size_t c = 0; c <= tab.cols; ++c) {
        tab.t[m][c] = 0.0;
    }
    std::vector<double> std_cost(tab.cols, 0.0);
    for (std::size_t j = 0; j < n_orig; ++j) {
        const double cj = problem.objective[j];
        if (cj == 0.0) continue;
        const auto& vm = var_map[j];
        switch (vm.kind) {
            case VarKind::shifted:
                std_cost[vm.col1] += cj;
                break;
            case VarKind::flipped:
                std_cost[vm.col1] -= cj;
                break;
            case VarKind::split:
                std_cost[vm.col1] += cj;
                std_cost[vm.col2] -= cj;
                break;
        }
    }
    for (std::size_t c = 0; c < tab.cols; ++c) {
        tab.obj(c) = std_cost[c];
    }
    for (std::size_t r = 0; r < m; ++r) {
        const double cb = std_cost[tab.basis[r]];
        if (cb == 0.0) continue;
        for (std::size_t c = 0; c <= tab.cols; ++c) {
            tab.t[m][c] -= cb * tab.t[r][c];
        }
    }

    const auto res = iterate(tab, iterations, frozen);
    if (res == IterateResult::breakdown) {
        return failure("numerical breakdown in phase 2: no pivot above 1e-11", iterations);
    }
    if (res == IterateResult::iteration_cap) {
        return failure("phase 2 exceeded the iteration cap", iterations);
    }
    if (res == IterateResult::unbounded) {
        Solution s;
        s.status = Status::unbounded;
        s.iterations = iterations;
        return s;
    }

    // --- recover the original variables ---------------------------------
    std::vector<double> std_values(n_std, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
        if (tab.basis[r] < n_std) {
            std_values[tab.basis[r]] = std::max(tab.rhs(r), 0.0);
        }
    }
    Solution s;
    s.iterations = iterations;
    s.variable_values.resize(n_orig);
    for (std::size_t j = 0; j < n_orig; ++j) {
        const auto& vm = var_map[j];
        switch (vm.kind) {
            case VarKind::shifted:
                s.variable_values[j] = vm.offset + std_values[vm.col1];
                break;
            case VarKind::flipped:
                s.variable_values[j] = vm.offset - std_values[vm.col1];
                break;
            case VarKind::split:
                s.variable_values[j] = std_values[vm.col1] - std_values[vm.col2];
                break;
        }
    }
    s.objective_value = 0.0;
    for (std::size_t j = 0; j < n_orig; ++j) {
        s.objective_value += problem.objective[j] * s.variable_values[j];
    }

    // Re-check the claimed optimum against the untransformed problem.
    for (std::size_t j = 0; j < n_orig; ++j) {
        const auto& b = problem.bounds[j];
        if (s.variable_values[j] < b.lower - 1e-9 || s.variable_values[j] > b.upper + 1e-9) {
            return failure("recovered solution violates a variable bound", iterations);
        }
    }
    for (std::size_t r = 0; r < problem.constraints.size(); ++r) {
        const auto& con = problem.constraints[r];
        double lhs = 0;
        for (std::size_t j = 0; j < n_orig; ++j) {
            lhs += con.coefficients[j] * s.variable_values[j];
        }
        const double viol = con.relation == Relation::less_equal    ? lhs - con.rhs
                            : con.relation == Relation::greater_equal ? con.rhs - lhs
                                                                      : std::fabs(lhs - con.rhs);
        if (viol > kFeasTol) {
            std::ostringstream msg;
            msg << "recovered solution violates constraint " << r << " by " << viol;
            return failure(msg.str(), iterations);
        }
    }
    s.status = Status::optimal;
    return s;
}

std::string to_text(const Problem& problem) {
    std::ostringstream out;
    out.precision(12);
    out << "minimize:";
    for (double c : problem.objective) {
        out << ' ' << c;
    }
    out << "\nsubject to:\n";
    for (const auto& row : problem.constraints) {
        out << " ";
        for (double c : row.coefficients) {
            out << ' ' << c;
        }
        out << ' ' << to_string(row.relation) << ' ' << row.rhs << '\n';
    }
    out << "bounds:\n";
    for (std::size_t j = 0; j < problem.bounds.size(); ++j) {
        const auto& b = problem.bounds[j];
        out << " var" << j + 1 << " in [";
        if (b.lower == -Problem::infinity()) {
            out << "-inf";
        } else {
            out << b.lower;
        }
        out << ", ";
        if (b.upper == Problem::infinity()) {
            out << "+inf";
        } else {
            out << b.upper;
        }
        out << "]\n";
    }
    return out.str();
}

}  // namespace freightstat::lp
