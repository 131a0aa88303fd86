// Exact rational linear programming (two-phase simplex, Bland's rule) and
// small 0-1 integer programming (depth-first branch and bound).  These are the
// engines behind the (MP), (FMP), (LP), (BLP) and (BLP2) programs.
#pragma once

#include "preclude/errors.hpp"
#include "preclude/rational.hpp"

#include <optional>
#include <vector>

namespace preclude {

enum class Sense { Minimize, Maximize };
enum class Relation { LessEq, GreaterEq, Equal };
enum class LpStatus { Optimal, Infeasible, Unbounded };

// min/max objective·x subject to rows (coeffs · x  rel  rhs) and per-variable
// bounds lower[j] <= x_j (<= upper[j] when present).  Lower bounds default to
// 0.  Variables flagged integral must be bounded in [0,1]; they are only
// honored by solve_01.
struct LinearProgram {
    Sense sense = Sense::Minimize;
    RationalVector objective;
    std::vector<RationalVector> rows;
    std::vector<Relation> relations;
    RationalVector rhs;
    RationalVector lower;
    std::vector<std::optional<Rational>> upper;
    std::vector<char> integral;

    explicit LinearProgram(int num_vars = 0, Sense s = Sense::Minimize)
        : sense(s),
          objective(num_vars, Rational(0)),
          lower(num_vars, Rational(0)),
          upper(num_vars),
          integral(num_vars, 0) {}

    int num_vars() const { return static_cast<int>(objective.size()); }
    int num_rows() const { return static_cast<int>(rows.size()); }

    void add_row(RationalVector coeffs, Relation rel, Rational b) {
        rows.push_back(std::move(coeffs));
        relations.push_back(rel);
        rhs.push_back(std::move(b));
    }
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    RationalVector primal;  // per variable (when Optimal)
    RationalVector dual;    // per constraint (pure LP solves only)
    long pivots = 0;        // simplex pivots performed
    long nodes = 0;         // branch-and-bound nodes (solve_01 only)
};

// Two-phase primal simplex with Bland's pivoting rule, exact rationals
// throughout.  Duals are read from the final tableau; for Minimize they
// satisfy dual·rhs = value (absent upper bounds), with sign >= 0 on GreaterEq
// rows and <= 0 on LessEq rows; for Maximize the convention is mirrored so
// dual·rhs = value still holds.  Throws precondition_error if any integrality
// flag is set.
LpSolution solve_lp(const LinearProgram& lp);

// Same contract as solve_lp, but solves the explicit dual program and maps the
// result back; the slack basis of the dual is feasible for the LPs this
// library generates (covering objectives >= 0), which skips phase 1 entirely.
// Falls back to solve_lp when the dual is infeasible.
LpSolution solve_lp_via_dual(const LinearProgram& lp);

// Picks solve_lp or solve_lp_via_dual by the cheaper phase-1 artificial count.
LpSolution solve_lp_auto(const LinearProgram& lp);

// Branch and bound for programs whose integral variables are 0/1: depth-first,
// branching on the lowest-index fractional integral variable, 0-branch first.
// Constraint rows are activated lazily (most-violated first) so covering
// programs with many rows stay tractable.  Returns Optimal with the best
// assignment, or Infeasible/Unbounded.
LpSolution solve_01(const LinearProgram& lp);

} // namespace preclude
