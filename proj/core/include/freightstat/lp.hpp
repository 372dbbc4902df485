#pragma once

#include <limits>
#include <string>
#include <vector>

namespace freightstat::lp {

enum class Relation { less_equal, greater_equal, equal };

[[nodiscard]] std::string to_string(Relation relation);

struct Constraint {
    std::vector<double> coefficients;
    Relation relation = Relation::less_equal;
    double rhs = 0;
};

/// Per-variable bounds; +-infinity marks an absent bound.
struct Bound {
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();

    static Bound free() { return {}; }
    static Bound non_negative() { return {0.0, std::numeric_limits<double>::infinity()}; }
};

/// General linear program in the form
///   minimize    c^T x
///   subject to  a_i^T x {<=,>=,=} b_i      for each constraint row
///               lower_j <= x_j <= upper_j  for each variable.
struct Problem {
    std::vector<double> objective;
    std::vector<Constraint> constraints;
    std::vector<Bound> bounds;  // one per variable

    static constexpr double infinity() { return std::numeric_limits<double>::infinity(); }
};

enum class Status { optimal, infeasible, unbounded, failure };

[[nodiscard]] std::string to_string(Status status);

struct Solution {
    Status status = Status::failure;
    double objective_value = 0;
    std::vector<double> variable_values;
    int iterations = 0;          // total simplex pivots across both phases
    std::string diagnostics;     // populated on failure
};

/// Dense two-phase primal simplex.
///
/// Free variables are split into differences of two non-negative parts,
/// finite lower/upper bounds are shifted/flipped into x' >= 0 form (a
/// finite upper bound on a lower-bounded variable adds one row). Phase 1
/// minimizes the sum of artificial variables; Bland's rule is used
/// throughout, so every run terminates. Tolerances: feasibility 1e-7,
/// reduced cost 1e-9, pivot threshold 1e-11. A pivot breakdown (no
/// eligible entry above the threshold) or iteration-cap overrun returns
/// Status::failure with diagnostics rather than looping.
///
/// Optimal solutions are re-checked against the original, untransformed
/// problem before being returned.
Solution solve(const Problem& problem);

/// Plain-text dump, one line per constraint: the coefficient list, the
/// relation symbol, and the right-hand side. Preceded by the objective
/// row and followed by one `var_j in [lower, upper]` line per variable.
std::string to_text(const Problem& problem);

}  // namespace freightstat::lp
