#include "cdp/lp.hpp"

#include <algorithm>
#include <sstream>

#include "cdp/errors.hpp"

namespace cdp {

namespace {

// Dense exact tableau. Column layout: structural | slack | artificial.
// Rows are brought to equality form with nonnegative right-hand sides before
// phase 1. Bland's rule (smallest eligible index) everywhere, so the solver
// cannot cycle and is fully deterministic.
class Simplex {
public:
    Simplex(int num_vars, const std::vector<Rational>& cost,
            const std::vector<LinearConstraint>& rows)
        : n_(num_vars), m_(static_cast<int>(rows.size())), cost_(cost) {
        slack_of_.assign(m_, -1);
        flipped_.assign(m_, false);
        int num_slacks = 0;
        for (const auto& row : rows)
            if (row.sense != RowSense::Equal) ++num_slacks;
        total_ = n_ + num_slacks;

        matrix_.assign(m_, std::vector<Rational>(total_, Rational(0)));
        rhs_.assign(m_, Rational(0));
        int next_slack = n_;
        for (int i = 0; i < m_; ++i) {
            const auto& row = rows[i];
            for (size_t k = 0; k < row.vars.size(); ++k) {
                int j = row.vars[k];
                if (j < 0 || j >= n_) throw InputError("constraint variable out of range");
                matrix_[i][j] += row.coeffs[k];
            }
            rhs_[i] = row.rhs;
            if (row.sense != RowSense::Equal) {
                slack_of_[i] = next_slack;
                matrix_[i][next_slack] = row.sense == RowSense::LessEq ? 1 : -1;
                ++next_slack;
            }
            if (sgn(rhs_[i]) < 0) {
                for (auto& a : matrix_[i]) a = -a;
                rhs_[i] = -rhs_[i];
                flipped_[i] = true;
            }
        }
        original_matrix_ = matrix_;
    }

    SimplexSolution solve() {
        basis_.assign(m_, -1);
        std::vector<int> artificial_rows;
        for (int i = 0; i < m_; ++i) {
            int s = slack_of_[i];
            if (s >= 0 && matrix_[i][s] == 1)
                basis_[i] = s;
            else
                artificial_rows.push_back(i);
        }
        int num_art = static_cast<int>(artificial_rows.size());
        if (num_art > 0) {
            for (auto& row : matrix_) row.resize(total_ + num_art, Rational(0));
            for (int k = 0; k < num_art; ++k) {
                int i = artificial_rows[k];
                matrix_[i][total_ + k] = 1;
                basis_[i] = total_ + k;
            }
            std::vector<Rational> phase1_cost(total_ + num_art, Rational(0));
            for (int k = 0; k < num_art; ++k) phase1_cost[total_ + k] = 1;
            if (!pivot_to_optimality(phase1_cost, total_ + num_art))
                throw InternalError("phase one cannot be unbounded");
            Rational infeasibility = 0;
            for (int i = 0; i < m_; ++i)
                if (basis_[i] >= total_) infeasibility += rhs_[i];
            if (sgn(infeasibility) > 0) return {LPStatus::Infeasible, {}, {}, Rational(0), {}};
            remove_artificials();
        }

        std::vector<Rational> phase2_cost(total_, Rational(0));
        for (int j = 0; j < n_; ++j) phase2_cost[j] = cost_[j];
        if (!pivot_to_optimality(phase2_cost, total_))
            return {LPStatus::Unbounded, {}, {}, Rational(0), {}};

        SimplexSolution sol;
        sol.status = LPStatus::Optimal;
        sol.x.assign(n_, Rational(0));
        for (int i = 0; i < m_; ++i)
            if (live_[i] && basis_[i] < n_) sol.x[basis_[i]] = rhs_[i];
        sol.objective = 0;
        for (int j = 0; j < n_; ++j) sol.objective += cost_[j] * sol.x[j];
        sol.duals = recover_duals();
        for (int i = 0; i < m_; ++i)
            if (live_[i]) sol.basis.push_back(basis_[i]);
        std::sort(sol.basis.begin(), sol.basis.end());
        return sol;
    }

private:
    // Runs Bland pivots until no reduced cost is negative. Returns false on
    // unboundedness. `cols` bounds the eligible column range.
    bool pivot_to_optimality(const std::vector<Rational>& cost, int cols) {
        if (live_.empty()) live_.assign(m_, true);
        std::vector<Rational> reduced = cost;
        for (int i = 0; i < m_; ++i) {
            if (!live_[i] || sgn(cost[basis_[i]]) == 0) continue;
            const Rational& cb = cost[basis_[i]];
            for (int j = 0; j < cols; ++j)
                if (sgn(matrix_[i][j]) != 0) reduced[j] -= cb * matrix_[i][j];
        }
        while (true) {
            int entering = -1;
            for (int j = 0; j < cols; ++j)
                if (sgn(reduced[j]) < 0) {
                    entering = j;
                    break;
                }
            if (entering < 0) return true;

            int leaving_row = -1;
            Rational best_ratio;
            for (int i = 0; i < m_; ++i) {
                if (!live_[i] || sgn(matrix_[i][entering]) <= 0) continue;
                Rational ratio = rhs_[i] / matrix_[i][entering];
                if (leaving_row < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leaving_row])) {
                    leaving_row = i;
                    best_ratio = ratio;
                }
            }
            if (leaving_row < 0) return false;
            pivot(leaving_row, entering, reduced);
        }
    }

    void pivot(int row, int col, std::vector<Rational>& reduced) {
        Rational inv = 1 / matrix_[row][col];
        for (auto& a : matrix_[row]) a *= inv;
        rhs_[row] *= inv;
        for (int i = 0; i < m_; ++i) {
            if (i == row || sgn(matrix_[i][col]) == 0) continue;
            Rational factor = matrix_[i][col];
            for (size_t j = 0; j < matrix_[i].size(); ++j)
                if (sgn(matrix_[row][j]) != 0) matrix_[i][j] -= factor * matrix_[row][j];
            matrix_[i][col] = 0;
            rhs_[i] -= factor * rhs_[row];
        }
        if (sgn(reduced[col]) != 0) {
            Rational factor = reduced[col];
            for (size_t j = 0; j < reduced.size() && j < matrix_[row].size(); ++j)
                if (sgn(matrix_[row][j]) != 0) reduced[j] -= factor * matrix_[row][j];
            reduced[col] = 0;
        }
        basis_[row] = col;
    }

    // After phase 1, pivots remaining zero-valued artificials out of the
    // basis; rows with no nonzero original entry are redundant and retired.
    void remove_artificials() {
        std::vector<Rational> dummy;  // no reduced-cost row to maintain
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < total_) continue;
            int col = -1;
            for (int j = 0; j < total_; ++j)
                if (sgn(matrix_[i][j]) != 0) {
                    col = j;
                    break;
                }
            if (col >= 0) {
                dummy.assign(matrix_[i].size(), Rational(0));
                pivot(i, col, dummy);
            } else {
                live_[i] = false;  // redundant constraint
            }
        }
        for (auto& row : matrix_) row.resize(total_);
    }

    // Solves transpose(B) y = cost_B over the live rows by exact Gaussian
    // elimination, then undoes the sign normalization.
    std::vector<Rational> recover_duals() {
        std::vector<int> rows;
        for (int i = 0; i < m_; ++i)
            if (live_[i]) rows.push_back(i);
        int k = static_cast<int>(rows.size());
        // system: for each basic column c: sum_i y_i * A0[i][c] = cost(c)
        std::vector<std::vector<Rational>> sys(k, std::vector<Rational>(k + 1, Rational(0)));
        for (int c = 0; c < k; ++c) {
            int col = basis_[rows[c]];
            for (int r = 0; r < k; ++r) sys[c][r] = original_matrix_[rows[r]][col];
            sys[c][k] = col < n_ ? cost_[col] : Rational(0);
        }
        for (int piv = 0; piv < k; ++piv) {
            int sel = -1;
            for (int r = piv; r < k; ++r)
                if (sgn(sys[r][piv]) != 0) {
                    sel = r;
                    break;
                }
            if (sel < 0) throw InternalError("singular basis while recovering duals");
            std::swap(sys[piv], sys[sel]);
            Rational inv = 1 / sys[piv][piv];
            for (auto& a : sys[piv]) a *= inv;
            for (int r = 0; r < k; ++r) {
                if (r == piv || sgn(sys[r][piv]) == 0) continue;
                Rational factor = sys[r][piv];
                for (int c = piv; c <= k; ++c) sys[r][c] -= factor * sys[piv][c];
            }
        }
        std::vector<Rational> duals(m_, Rational(0));
        for (int r = 0; r < k; ++r) duals[rows[r]] = sys[r][k];
        for (int i = 0; i < m_; ++i)
            if (flipped_[i]) duals[i] = -duals[i];
        return duals;
    }

    int n_;
    int m_;
    int total_;
    std::vector<Rational> cost_;
    std::vector<std::vector<Rational>> matrix_;
    std::vector<Rational> rhs_;
    std::vector<std::vector<Rational>> original_matrix_;
    std::vector<int> basis_;
    std::vector<int> slack_of_;
    std::vector<bool> flipped_;
    std::vector<bool> live_;
};

void verify_optimal(const SimplexSolution& sol, int num_vars,
                    const std::vector<Rational>& cost,
                    const std::vector<LinearConstraint>& rows) {
    // Primal feasibility, dual feasibility, complementary slackness and
    // strong duality, all exact. A failure here is a solver bug.
    Rational dual_value = 0;
    std::vector<Rational> dual_column(num_vars, Rational(0));
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        Rational lhs = 0;
        for (size_t k = 0; k < row.vars.size(); ++k)
            lhs += row.coeffs[k] * sol.x[row.vars[k]];
        bool tight = lhs == row.rhs;
        switch (row.sense) {
            case RowSense::LessEq:
                if (lhs > row.rhs) throw InternalError("primal infeasible (<= row)");
                if (sgn(sol.duals[i]) > 0) throw InternalError("dual sign (<= row)");
                break;
            case RowSense::GreaterEq:
                if (lhs < row.rhs) throw InternalError("primal infeasible (>= row)");
                if (sgn(sol.duals[i]) < 0) throw InternalError("dual sign (>= row)");
                break;
            case RowSense::Equal:
                if (!tight) throw InternalError("primal infeasible (= row)");
                break;
        }
        if (!tight && sgn(sol.duals[i]) != 0)
            throw InternalError("complementary slackness (row)");
        dual_value += sol.duals[i] * row.rhs;
        for (size_t k = 0; k < row.vars.size(); ++k)
            dual_column[row.vars[k]] += sol.duals[i] * row.coeffs[k];
    }
    for (int j = 0; j < num_vars; ++j) {
        if (sgn(sol.x[j]) < 0) throw InternalError("negative structural variable");
        if (dual_column[j] > cost[j]) throw InternalError("dual infeasible (column)");
        if (sgn(sol.x[j]) > 0 && dual_column[j] != cost[j])
            throw InternalError("complementary slackness (column)");
    }
    if (dual_value != sol.objective) throw InternalError("strong duality gap");
}

}  // namespace

SimplexSolution simplex_minimize(int num_vars, const std::vector<Rational>& cost,
                                 const std::vector<LinearConstraint>& rows) {
    if (static_cast<int>(cost.size()) != num_vars)
        throw InputError("cost size does not match variable count");
    SimplexSolution sol = Simplex(num_vars, cost, rows).solve();
    if (sol.status == LPStatus::Optimal) verify_optimal(sol, num_vars, cost, rows);
    return sol;
}

LPResult solve_covering(const CoveringLPModel& model) {
    const int n = static_cast<int>(model.objective.size());
    if (!is_nonnegative(model.objective))
        throw InputError("covering objective must be nonnegative");

    std::vector<VertexSet> pool;
    auto add_row = [&](const VertexSet& row) {
        if (std::find(pool.begin(), pool.end(), row) == pool.end()) pool.push_back(row);
    };
    for (const auto& row : model.explicit_rows) add_row(row);

    long cap = model.iteration_cap > 0
                   ? model.iteration_cap
                   : 10L * (1L << std::min(n, 20));
    LPResult result;
    std::vector<int> final_basis;
    long rounds = 0;
    while (true) {
        if (++rounds > cap) throw ResourceError("row generation iteration cap exceeded");
        std::vector<LinearConstraint> rows;
        rows.reserve(pool.size());
        for (const auto& r : pool) {
            LinearConstraint c;
            c.vars = r.members();
            c.coeffs.assign(r.members().size(), Rational(1));
            c.sense = RowSense::GreaterEq;
            c.rhs = 1;
            rows.push_back(std::move(c));
        }
        SimplexSolution sol = simplex_minimize(n, model.objective, rows);
        if (sol.status != LPStatus::Optimal) {
            result.status = sol.status;
            result.value = 0;
            return result;
        }
        if (!model.row_oracle) {
            result.x = sol.x;
            result.value = sol.objective;
            final_basis = std::move(sol.basis);
            break;
        }
        auto violated = model.row_oracle(sol.x);
        if (!violated) {
            result.x = sol.x;
            result.value = sol.objective;
            final_basis = std::move(sol.basis);
            break;
        }
        if (total_weight(sol.x, violated->row) >= 1)
            throw InternalError("oracle returned a satisfied row");
        add_row(violated->row);
        ++result.generated_rows;
    }
    if (model.collect_debug) {
        std::ostringstream out;
        for (const auto& r : pool) {
            bool first = true;
            for (int v : r) {
                out << (first ? "" : " + ") << "x" << v;
                first = false;
            }
            out << " >= 1\n";
        }
        out << "basis:";
        for (int j : final_basis)
            if (j < n)
                out << " x" << j;
            else
                out << " s" << (j - n);
        out << "\n";
        for (int v = 0; v < n; ++v)
            out << "x" << v << " = " << rational_str(result.x.empty() ? Rational(0)
                                                                      : result.x[v])
                << "\n";
        result.debug = out.str();
    }
    return result;
}

PackingMasterResult solve_packing_master(const std::vector<VertexSet>& columns,
                                         const NodeWeights& bounds) {
    if (columns.empty()) throw InputError("packing master needs at least one column");
    if (!is_nonnegative(bounds)) throw InputError("bounds must be nonnegative");
    const int n = static_cast<int>(bounds.size());
    const int k = static_cast<int>(columns.size());
    for (const auto& col : columns) {
        if (col.empty()) throw InputError("empty packing column");
        if (col.members().back() >= n) throw InputError("column vertex out of range");
    }

    std::vector<std::vector<int>> columns_with(n);
    for (int i = 0; i < k; ++i)
        for (int v : columns[i]) columns_with[v].push_back(i);

    std::vector<LinearConstraint> rows;
    std::vector<int> row_vertex;
    for (int v = 0; v < n; ++v) {
        if (columns_with[v].empty()) continue;
        LinearConstraint c;
        c.vars = columns_with[v];
        c.coeffs.assign(columns_with[v].size(), Rational(1));
        c.sense = RowSense::LessEq;
        c.rhs = bounds[v];
        rows.push_back(std::move(c));
        row_vertex.push_back(v);
    }

    std::vector<Rational> cost(k, Rational(-1));
    SimplexSolution sol = simplex_minimize(k, cost, rows);
    if (sol.status != LPStatus::Optimal)
        throw InternalError("packing master must have a bounded optimum");

    PackingMasterResult out;
    out.weights = sol.x;
    out.value = -sol.objective;
    out.duals.assign(n, Rational(0));
    for (size_t i = 0; i < row_vertex.size(); ++i) {
        Rational y = -sol.duals[i];
        if (sgn(y) < 0) throw InternalError("negative packing dual");
        out.duals[row_vertex[i]] = std::move(y);
    }

    // Exact certificates: feasible marginals, covered columns, strong duality
    // and complementary slackness in both directions.
    Rational dual_value = 0;
    for (int v = 0; v < n; ++v) {
        Rational marginal = 0;
        for (int i : columns_with[v]) marginal += out.weights[i];
        if (marginal > bounds[v]) throw InternalError("marginal exceeds bound");
        if (sgn(out.duals[v]) > 0 && marginal != bounds[v])
            throw InternalError("complementary slackness (vertex)");
        dual_value += out.duals[v] * bounds[v];
    }
    for (int i = 0; i < k; ++i) {
        Rational covered = total_weight(out.duals, columns[i]);
        if (covered < 1) throw InternalError("uncovered packing column");
        if (sgn(out.weights[i]) > 0 && covered != 1)
            throw InternalError("complementary slackness (column)");
    }
    if (dual_value != out.value) throw InternalError("packing duality gap");
    return out;
}

}  // namespace cdp
