#include "preclude/lp.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

namespace preclude {

namespace {

constexpr long kPivotLimit = 2000000;

// Internal standard form: min obj·x + shift over x >= 0 with rows oriented so
// every right-hand side is nonnegative.  Upper bounds are folded in as
// trailing LessEq rows; lower bounds are shifted away.
struct StdForm {
    int nvars = 0;
    RationalVector obj;
    Rational shift;
    std::vector<RationalVector> rows;
    std::vector<Relation> rel;
    RationalVector rhs;
    std::vector<char> flipped;
    int user_rows = 0;
    bool negated = false;  // input sense was Maximize
    RationalVector lshift;
};

void validate_shape(const LinearProgram& lp) {
    const auto n = lp.objective.size();
    if (lp.lower.size() != n || lp.upper.size() != n || lp.integral.size() != n) {
        throw precondition_error("bound/integrality vectors do not match num_vars");
    }
    if (lp.relations.size() != lp.rows.size() || lp.rhs.size() != lp.rows.size()) {
        throw precondition_error("row/relation/rhs vectors are inconsistent");
    }
    for (const auto& row : lp.rows) {
        if (row.size() != n) throw precondition_error("constraint row length does not match num_vars");
    }
}

void require_pure_lp(const LinearProgram& lp) {
    for (char f : lp.integral) {
        if (f) throw precondition_error("LP solver requires all integrality flags false");
    }
}

StdForm build_std(const LinearProgram& lp) {
    validate_shape(lp);
    StdForm s;
    s.nvars = lp.num_vars();
    s.negated = (lp.sense == Sense::Maximize);
    s.obj = lp.objective;
    if (s.negated) {
        for (auto& c : s.obj) c = -c;
    }
    s.lshift = lp.lower;
    for (int j = 0; j < s.nvars; ++j) {
        if (s.lshift[j] != 0) s.shift += s.obj[j] * s.lshift[j];
    }
    s.user_rows = lp.num_rows();
    for (int i = 0; i < lp.num_rows(); ++i) {
        Rational b = lp.rhs[i];
        for (int j = 0; j < s.nvars; ++j) {
            if (s.lshift[j] != 0 && lp.rows[i][j] != 0) b -= lp.rows[i][j] * s.lshift[j];
        }
        s.rows.push_back(lp.rows[i]);
        s.rel.push_back(lp.relations[i]);
        s.rhs.push_back(b);
    }
    for (int j = 0; j < s.nvars; ++j) {
        if (!lp.upper[j]) continue;
        RationalVector row(s.nvars, Rational(0));
        row[j] = 1;
        s.rows.push_back(std::move(row));
        s.rel.push_back(Relation::LessEq);
        s.rhs.push_back(*lp.upper[j] - s.lshift[j]);  // may be negative: infeasible, simplex decides
    }
    s.flipped.assign(s.rows.size(), 0);
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        if (s.rhs[i] < 0) {
            s.flipped[i] = 1;
            s.rhs[i] = -s.rhs[i];
            for (auto& a : s.rows[i]) {
                if (a != 0) a = -a;
            }
            if (s.rel[i] == Relation::LessEq) s.rel[i] = Relation::GreaterEq;
            else if (s.rel[i] == Relation::GreaterEq) s.rel[i] = Relation::LessEq;
        }
    }
    return s;
}

struct TableauResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;     // min-form objective, excluding shift
    RationalVector x;   // structural values, shifted space
    RationalVector y;   // one dual per StdForm row, user orientation
    long pivots = 0;
};

TableauResult solve_std(const StdForm& s) {
    const int m = static_cast<int>(s.rows.size());
    const int nv = s.nvars;

    // Column layout: structural | slack/surplus (one per inequality row) |
    // artificial (one per Equal/GreaterEq row).  Every row starts with an
    // identity basis column: the slack for LessEq, the artificial otherwise.
    std::vector<int> slack_col(m, -1), art_col(m, -1);
    int ncols = nv;
    for (int i = 0; i < m; ++i) {
        if (s.rel[i] != Relation::Equal) slack_col[i] = ncols++;
    }
    const int art_start = ncols;
    for (int i = 0; i < m; ++i) {
        if (s.rel[i] != Relation::LessEq) art_col[i] = ncols++;
    }

    std::vector<RationalVector> t(m, RationalVector(ncols + 1, Rational(0)));
    std::vector<int> basis(m, -1);
    std::vector<char> enterable(ncols, 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < nv; ++j) t[i][j] = s.rows[i][j];
        if (slack_col[i] >= 0) t[i][slack_col[i]] = (s.rel[i] == Relation::LessEq) ? 1 : -1;
        if (art_col[i] >= 0) {
            t[i][art_col[i]] = 1;
            enterable[art_col[i]] = 0;  // artificials never re-enter (drop on leave)
        }
        t[i][ncols] = s.rhs[i];
        basis[i] = (s.rel[i] == Relation::LessEq) ? slack_col[i] : art_col[i];
    }

    long pivots = 0;
    RationalVector red(ncols, Rational(0));
    Rational z;

    auto pivot = [&](int pr, int pc) {
        const Rational piv = t[pr][pc];
        if (piv != 1) {
            for (auto& v : t[pr]) {
                if (v != 0) v /= piv;
            }
        }
        for (int k = 0; k < m; ++k) {
            if (k == pr) continue;
            const Rational f = t[k][pc];
            if (f == 0) continue;
            for (int j = 0; j <= ncols; ++j) {
                if (t[pr][j] != 0) t[k][j] -= f * t[pr][j];
            }
        }
        const Rational rf = red[pc];
        if (rf != 0) {
            z += rf * t[pr][ncols];
            for (int j = 0; j < ncols; ++j) {
                if (t[pr][j] != 0) red[j] -= rf * t[pr][j];
            }
        }
        basis[pr] = pc;
        ++pivots;
    };

    // One simplex phase under the given cost vector; Bland's rule: entering
    // column = lowest index with negative reduced cost, leaving row = lowest
    // basis index among the minimum ratios.
    auto run_phase = [&](const RationalVector& cost) -> LpStatus {
        for (int j = 0; j < ncols; ++j) red[j] = cost[j];
        z = 0;
        for (int i = 0; i < m; ++i) {
            const Rational& cb = cost[basis[i]];
            if (cb == 0) continue;
            z += cb * t[i][ncols];
            for (int j = 0; j < ncols; ++j) {
                if (t[i][j] != 0) red[j] -= cb * t[i][j];
            }
        }
        for (;;) {
            int pc = -1;
            for (int j = 0; j < ncols; ++j) {
                if (enterable[j] && red[j] < 0) {
                    pc = j;
                    break;
                }
            }
            if (pc < 0) return LpStatus::Optimal;
            int pr = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                if (t[i][pc] > 0) {
                    Rational ratio = t[i][ncols] / t[i][pc];
                    if (pr < 0 || ratio < best || (ratio == best && basis[i] < basis[pr])) {
                        pr = i;
                        best = std::move(ratio);
                    }
                }
            }
            if (pr < 0) return LpStatus::Unbounded;
            pivot(pr, pc);
            if (pivots > kPivotLimit) throw preclude_error("simplex pivot limit exceeded");
        }
    };

    if (art_start < ncols) {  // phase 1
        RationalVector cost(ncols, Rational(0));
        for (int j = art_start; j < ncols; ++j) cost[j] = 1;
        if (run_phase(cost) == LpStatus::Unbounded) {
            throw preclude_error("internal error: phase 1 unbounded");
        }
        if (z > 0) {
            TableauResult r;
            r.status = LpStatus::Infeasible;
            r.pivots = pivots;
            return r;
        }
        // Drive basic artificials out where a nonzero non-artificial pivot
        // exists; all-zero rows keep their artificial basic at value 0.
        for (int i = 0; i < m; ++i) {
            if (basis[i] < art_start) continue;
            for (int j = 0; j < art_start; ++j) {
                if (t[i][j] != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    {  // phase 2
        RationalVector cost(ncols, Rational(0));
        for (int j = 0; j < nv; ++j) cost[j] = s.obj[j];
        const LpStatus st = run_phase(cost);
        if (st == LpStatus::Unbounded) {
            TableauResult r;
            r.status = LpStatus::Unbounded;
            r.pivots = pivots;
            return r;
        }
    }

    TableauResult r;
    r.status = LpStatus::Optimal;
    r.pivots = pivots;
    r.value = z;
    r.x.assign(nv, Rational(0));
    for (int i = 0; i < m; ++i) {
        if (basis[i] < nv) r.x[basis[i]] = t[i][ncols];
    }
    // Dual of row i = -(reduced cost of its initial identity column), flipped
    // back to the user's row orientation.
    r.y.assign(m, Rational(0));
    for (int i = 0; i < m; ++i) {
        const int idc = (s.rel[i] == Relation::LessEq) ? slack_col[i] : art_col[i];
        r.y[i] = -red[idc];
        if (s.flipped[i]) r.y[i] = -r.y[i];
    }
    return r;
}

LpSolution finish(const StdForm& s, TableauResult tr) {
    LpSolution out;
    out.pivots = tr.pivots;
    out.status = tr.status;
    if (tr.status != LpStatus::Optimal) return out;
    out.value = tr.value + s.shift;
    out.primal = std::move(tr.x);
    for (int j = 0; j < s.nvars; ++j) {
        if (s.lshift[j] != 0) out.primal[j] += s.lshift[j];
    }
    out.dual.assign(tr.y.begin(), tr.y.begin() + s.user_rows);
    if (s.negated) {
        out.value = -out.value;
        for (auto& y : out.dual) y = -y;
    }
    return out;
}

long artificial_count(const StdForm& s) {
    long cnt = 0;
    for (auto r : s.rel) {
        if (r != Relation::LessEq) ++cnt;
    }
    return cnt;
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
    require_pure_lp(lp);
    const StdForm s = build_std(lp);
    return finish(s, solve_std(s));
}

LpSolution solve_lp_via_dual(const LinearProgram& lp) {
    require_pure_lp(lp);
    const StdForm s = build_std(lp);
    const int nrows = static_cast<int>(s.rows.size());

    // Dual of (min obj·x, rows rel rhs, x >= 0): max rhs·y with sign-split
    // nonnegative variables (GreaterEq rows: y = t; LessEq: y = -t; Equal:
    // y = t+ - t-) and one LessEq constraint per primal variable.
    std::vector<int> var_row, var_mult;
    for (int i = 0; i < nrows; ++i) {
        switch (s.rel[i]) {
            case Relation::GreaterEq:
                var_row.push_back(i);
                var_mult.push_back(1);
                break;
            case Relation::LessEq:
                var_row.push_back(i);
                var_mult.push_back(-1);
                break;
            case Relation::Equal:
                var_row.push_back(i);
                var_mult.push_back(1);
                var_row.push_back(i);
                var_mult.push_back(-1);
                break;
        }
    }
    const int dn = static_cast<int>(var_row.size());
    LinearProgram d(dn, Sense::Maximize);
    for (int k = 0; k < dn; ++k) d.objective[k] = Rational(var_mult[k]) * s.rhs[var_row[k]];
    for (int j = 0; j < s.nvars; ++j) {
        RationalVector row(dn, Rational(0));
        for (int k = 0; k < dn; ++k) {
            const Rational& a = s.rows[var_row[k]][j];
            if (a != 0) row[k] = Rational(var_mult[k]) * a;
        }
        d.add_row(std::move(row), Relation::LessEq, s.obj[j]);
    }

    const LpSolution ds = solve_lp(d);
    if (ds.status == LpStatus::Unbounded) {
        LpSolution out;
        out.status = LpStatus::Infeasible;
        out.pivots = ds.pivots;
        return out;
    }
    if (ds.status == LpStatus::Infeasible) {
        // Primal is infeasible or unbounded; let the primal algorithm decide.
        LpSolution out = solve_lp(lp);
        out.pivots += ds.pivots;
        return out;
    }

    LpSolution out;
    out.status = LpStatus::Optimal;
    out.pivots = ds.pivots;
    out.value = ds.value + s.shift;
    out.primal.assign(s.nvars, Rational(0));
    for (int j = 0; j < s.nvars; ++j) out.primal[j] = ds.dual[j] + s.lshift[j];
    RationalVector y(nrows, Rational(0));
    for (int k = 0; k < dn; ++k) {
        if (ds.primal[k] != 0) y[var_row[k]] += Rational(var_mult[k]) * ds.primal[k];
    }
    out.dual.assign(s.user_rows, Rational(0));
    for (int i = 0; i < s.user_rows; ++i) out.dual[i] = s.flipped[i] ? -y[i] : y[i];
    if (s.negated) {
        out.value = -out.value;
        for (auto& v : out.dual) v = -v;
    }
    return out;
}

LpSolution solve_lp_auto(const LinearProgram& lp) {
    require_pure_lp(lp);
    const StdForm s = build_std(lp);
    const long ap = artificial_count(s);
    if (ap == 0) return finish(s, solve_std(s));
    long ad = 0;  // dual rows needing artificials = negative min-form objective coefficients
    for (const auto& c : s.obj) {
        if (c < 0) ++ad;
    }
    return (ad < ap) ? solve_lp_via_dual(lp) : finish(s, solve_std(s));
}

namespace {

bool is_unit_value(const Rational& v) { return v == 0 || v == 1; }

struct BranchState {
    const LinearProgram* lp = nullptr;
    int n = 0;
    int m = 0;
    RationalVector obj;  // min-form
    bool negated = false;
    bool pure_binary = false;   // every variable integral
    bool integral_obj = false;  // objective integer on 0/1 assignments
    std::vector<char> active;
    std::vector<char> satisfied;
    std::vector<std::int8_t> fixed;  // -1 free; 0/1 fixed (integral vars)
    std::vector<int> trail;          // propagation/reduced-cost fixes to undo
    bool have_inc = false;
    Rational inc_value;  // min-form
    RationalVector inc_primal;
    bool unbounded = false;
    long nodes = 0;
    long pivots = 0;
};

Rational row_activity(const BranchState& st, int r, const RationalVector& x) {
    const auto& row = st.lp->rows[r];
    Rational act;
    for (int j = 0; j < st.n; ++j) {
        if (row[j] != 0) act += row[j] * x[j];
    }
    return act;
}

// True when the subtree below a node with the given LP bound can still contain
// a solution strictly better than the incumbent.
bool can_improve(const BranchState& st, const Rational& bound) {
    if (!st.have_inc) return true;
    if (st.integral_obj) return rat_ceil(bound) < st.inc_value;
    return bound < st.inc_value;
}

// Fixpoint propagation over all rows using activity bounds of the free 0/1
// variables.  Returns false on detected infeasibility; marks rows that every
// completion satisfies; pushes forced fixes onto the trail.
bool propagate(BranchState& st) {
    st.satisfied.assign(st.m, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int r = 0; r < st.m; ++r) {
            if (st.satisfied[r]) continue;
            const auto& row = st.lp->rows[r];
            Rational base, minact, maxact;
            for (int j = 0; j < st.n; ++j) {
                const Rational& a = row[j];
                if (a == 0) continue;
                if (st.fixed[j] >= 0) {
                    if (st.fixed[j] == 1) base += a;
                } else if (a > 0) {
                    maxact += a;
                } else {
                    minact += a;
                }
            }
            const Rational& b = st.lp->rhs[r];
            const Relation rel = st.lp->relations[r];
            const bool need_ge = (rel != Relation::LessEq);
            const bool need_le = (rel != Relation::GreaterEq);
            if (need_ge) {
                if (base + maxact < b) return false;
                if (need_le ? (minact == maxact && base + minact == b) : (base + minact >= b)) {
                    st.satisfied[r] = 1;
                    continue;
                }
                for (int j = 0; j < st.n; ++j) {
                    const Rational& a = row[j];
                    if (a == 0 || st.fixed[j] >= 0) continue;
                    const Rational mag = a > 0 ? a : -a;
                    if (base + maxact - mag < b) {
                        // x_j must take its maximum-contribution value.
                        changed = true;
                        st.trail.push_back(j);
                        if (a > 0) {
                            st.fixed[j] = 1;
                            base += a;
                            maxact -= a;
                        } else {
                            st.fixed[j] = 0;
                            minact -= a;
                        }
                    }
                }
            }
            if (need_le && !st.satisfied[r]) {
                if (base + minact > b) return false;
                if (!need_ge && base + maxact <= b) {
                    st.satisfied[r] = 1;
                    continue;
                }
                for (int j = 0; j < st.n; ++j) {
                    const Rational& a = row[j];
                    if (a == 0 || st.fixed[j] >= 0) continue;
                    const Rational mag = a > 0 ? a : -a;
                    if (base + minact + mag > b) {
                        // x_j must take its minimum-contribution value.
                        changed = true;
                        st.trail.push_back(j);
                        if (a > 0) {
                            st.fixed[j] = 0;
                            maxact -= a;
                        } else {
                            st.fixed[j] = 1;
                            base += a;
                            minact -= a;
                        }
                    }
                }
            }
        }
    }
    return true;
}

// Detects a pure covering program (all rows >= 1 with 0/1 coefficients,
// nonnegative objective) and seeds the incumbent greedily.
void seed_greedy_cover(BranchState& st) {
    if (!st.pure_binary || st.m == 0) return;
    for (const auto& c : st.obj) {
        if (c < 0) return;
    }
    for (int r = 0; r < st.m; ++r) {
        if (st.lp->relations[r] != Relation::GreaterEq || st.lp->rhs[r] != 1) return;
        for (const auto& a : st.lp->rows[r]) {
            if (a != 0 && a != 1) return;
        }
    }
    std::vector<char> covered(st.m, 0);
    std::vector<char> chosen(st.n, 0);
    int remaining = st.m;
    while (remaining > 0) {
        int bestj = -1, bestcnt = 0;
        for (int j = 0; j < st.n; ++j) {
            if (chosen[j]) continue;
            int cnt = 0;
            for (int r = 0; r < st.m; ++r) {
                if (!covered[r] && st.lp->rows[r][j] == 1) ++cnt;
            }
            if (cnt > bestcnt) {
                bestcnt = cnt;
                bestj = j;
            }
        }
        if (bestj < 0) return;  // uncoverable row: leave incumbent empty
        chosen[bestj] = 1;
        for (int r = 0; r < st.m; ++r) {
            if (!covered[r] && st.lp->rows[r][bestj] == 1) {
                covered[r] = 1;
                --remaining;
            }
        }
    }
    Rational val;
    RationalVector x(st.n, Rational(0));
    for (int j = 0; j < st.n; ++j) {
        if (chosen[j]) {
            x[j] = 1;
            val += st.obj[j];
        }
    }
    st.have_inc = true;
    st.inc_value = std::move(val);
    st.inc_primal = std::move(x);
}

void branch(BranchState& st) {
    ++st.nodes;
    const std::size_t mark = st.trail.size();
    auto undo = [&] {
        while (st.trail.size() > mark) {
            st.fixed[st.trail.back()] = -1;
            st.trail.pop_back();
        }
    };

    int branch_var = -1;
    LpSolution sol;
    std::vector<int> free_of;  // sub-LP column -> original variable

    for (;;) {
        if (st.pure_binary) {
            if (!propagate(st)) {
                undo();
                return;
            }
        } else {
            st.satisfied.assign(st.m, 0);
        }

        // Sub-LP over free variables and active unsatisfied rows.
        free_of.clear();
        std::vector<int> col_of(st.n, -1);
        for (int j = 0; j < st.n; ++j) {
            if (!st.lp->integral[j] || st.fixed[j] < 0) {
                col_of[j] = static_cast<int>(free_of.size());
                free_of.push_back(j);
            }
        }
        const int fn = static_cast<int>(free_of.size());
        LinearProgram sub(fn, Sense::Minimize);
        Rational fixed_cost;
        for (int j = 0; j < st.n; ++j) {
            if (col_of[j] >= 0) {
                sub.objective[col_of[j]] = st.obj[j];
            } else if (st.fixed[j] == 1) {
                fixed_cost += st.obj[j];
            }
        }
        for (int k = 0; k < fn; ++k) {
            const int j = free_of[k];
            if (st.lp->integral[j]) {
                sub.upper[k] = Rational(1);
            } else {
                sub.lower[k] = st.lp->lower[j];
                sub.upper[k] = st.lp->upper[j];
            }
        }
        std::vector<int> sub_rows;
        for (int r = 0; r < st.m; ++r) {
            if (!st.active[r] || st.satisfied[r]) continue;
            RationalVector row(fn, Rational(0));
            Rational b = st.lp->rhs[r];
            for (int j = 0; j < st.n; ++j) {
                const Rational& a = st.lp->rows[r][j];
                if (a == 0) continue;
                if (col_of[j] >= 0) row[col_of[j]] = a;
                else if (st.fixed[j] == 1) b -= a;
            }
            sub.add_row(std::move(row), st.lp->relations[r], std::move(b));
            sub_rows.push_back(r);
        }

        sol = solve_lp_auto(sub);
        st.pivots += sol.pivots;
        if (sol.status == LpStatus::Infeasible) {
            undo();
            return;
        }
        if (sol.status == LpStatus::Unbounded) {
            int first_inactive = -1;
            for (int r = 0; r < st.m; ++r) {
                if (!st.active[r]) {
                    first_inactive = r;
                    break;
                }
            }
            if (first_inactive < 0) {
                st.unbounded = true;
                undo();
                return;
            }
            st.active[first_inactive] = 1;
            continue;
        }

        const Rational bound = fixed_cost + sol.value;
        if (!can_improve(st, bound)) {
            undo();
            return;
        }

        branch_var = -1;
        for (int k = 0; k < fn; ++k) {
            if (st.lp->integral[free_of[k]] && !is_unit_value(sol.primal[k])) {
                branch_var = free_of[k];
                break;
            }
        }

        if (branch_var < 0) {
            // Integral point: check lazily deactivated rows, activating the
            // most violated one (lowest index on ties), else accept.
            RationalVector x(st.n, Rational(0));
            for (int j = 0; j < st.n; ++j) {
                if (col_of[j] >= 0) x[j] = sol.primal[col_of[j]];
                else if (st.fixed[j] == 1) x[j] = 1;
            }
            int worst = -1;
            Rational worst_gap;
            for (int r = 0; r < st.m; ++r) {
                if (st.active[r]) continue;
                const Rational act = row_activity(st, r, x);
                const Rational& b = st.lp->rhs[r];
                Rational gap;
                switch (st.lp->relations[r]) {
                    case Relation::GreaterEq: if (act < b) gap = b - act; break;
                    case Relation::LessEq: if (act > b) gap = act - b; break;
                    case Relation::Equal: gap = act > b ? act - b : b - act; break;
                }
                if (gap > 0 && (worst < 0 || gap > worst_gap)) {
                    worst = r;
                    worst_gap = std::move(gap);
                }
            }
            if (worst >= 0) {
                st.active[worst] = 1;
                continue;
            }
            if (!st.have_inc || bound < st.inc_value) {
                st.have_inc = true;
                st.inc_value = bound;
                st.inc_primal = std::move(x);
            }
            undo();
            return;
        }

        // Reduced-cost fixing: a free variable at 0 whose reduced cost already
        // exhausts the incumbent gap can be fixed to 0 in this subtree.
        if (st.pure_binary && st.have_inc && !sol.dual.empty()) {
            int fixes = 0;
            for (int k = 0; k < fn; ++k) {
                const int j = free_of[k];
                if (st.fixed[j] >= 0 || sol.primal[k] != 0) continue;
                Rational rc = st.obj[j];
                for (std::size_t i = 0; i < sub_rows.size(); ++i) {
                    const Rational& a = sub.rows[i][k];
                    if (a != 0 && sol.dual[i] != 0) rc -= sol.dual[i] * a;
                }
                if (rc > 0 && !can_improve(st, bound + rc)) {
                    st.fixed[j] = 0;
                    st.trail.push_back(j);
                    ++fixes;
                }
            }
            if (fixes > 0) continue;
        }
        break;
    }

    st.fixed[branch_var] = 0;
    branch(st);
    if (!st.unbounded) {
        st.fixed[branch_var] = 1;
        branch(st);
    }
    st.fixed[branch_var] = -1;
    undo();
}

}  // namespace

LpSolution solve_01(const LinearProgram& lp) {
    validate_shape(lp);
    for (int j = 0; j < lp.num_vars(); ++j) {
        if (!lp.integral[j]) continue;
        if (lp.lower[j] != 0 || !lp.upper[j] || *lp.upper[j] != 1) {
            throw precondition_error("integral variables must be bounded in [0,1]");
        }
    }

    BranchState st;
    st.lp = &lp;
    st.n = lp.num_vars();
    st.m = lp.num_rows();
    st.negated = (lp.sense == Sense::Maximize);
    st.obj = lp.objective;
    if (st.negated) {
        for (auto& c : st.obj) c = -c;
    }
    st.pure_binary = true;
    for (char f : lp.integral) {
        if (!f) st.pure_binary = false;
    }
    st.integral_obj = st.pure_binary;
    if (st.pure_binary) {
        for (const auto& c : st.obj) {
            if (!rat_is_integer(c)) st.integral_obj = false;
        }
    }
    st.active.assign(st.m, 0);
    st.fixed.assign(st.n, -1);

    seed_greedy_cover(st);
    branch(st);

    LpSolution out;
    out.nodes = st.nodes;
    out.pivots = st.pivots;
    if (st.unbounded) {
        out.status = LpStatus::Unbounded;
        return out;
    }
    if (!st.have_inc) {
        out.status = LpStatus::Infeasible;
        return out;
    }
    out.status = LpStatus::Optimal;
    out.value = st.negated ? -st.inc_value : st.inc_value;
    out.primal = st.inc_primal;
    return out;
}

} // namespace preclude
