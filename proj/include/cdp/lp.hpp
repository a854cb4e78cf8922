#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cdp/cuts.hpp"
#include "cdp/graph.hpp"

namespace cdp {

enum class LPStatus { Optimal, Infeasible, Unbounded };

enum class RowSense { LessEq, GreaterEq, Equal };

// One linear constraint over structural variables.
struct LinearConstraint {
    std::vector<int> vars;
    std::vector<Rational> coeffs;
    RowSense sense = RowSense::GreaterEq;
    Rational rhs;
};

struct SimplexSolution {
    LPStatus status = LPStatus::Optimal;
    std::vector<Rational> x;      // structural variable values
    std::vector<Rational> duals;  // one multiplier per input row
    Rational objective;
    std::vector<int> basis;  // basic variable per surviving row; structural
                             // variables are 0..n-1, slacks follow
};

// Exact two-phase dense tableau simplex, Bland's pivot rule, minimizes.
// Dual multipliers follow the minimization convention: >= rows yield
// nonnegative duals, <= rows nonpositive, = rows free. At optimality the
// solver verifies primal/dual feasibility, complementary slackness and
// objective == sum(duals * rhs) exactly, throwing InternalError otherwise.
SimplexSolution simplex_minimize(int num_vars, const std::vector<Rational>& cost,
                                 const std::vector<LinearConstraint>& rows);

// Covering LP with an exponential constraint family behind a separation
// oracle: min cost.x subject to x(R) >= 1 for every row R (explicit rows up
// front, oracle rows generated one per round) and x >= 0.
struct CoveringLPModel {
    NodeWeights objective;
    std::vector<VertexSet> explicit_rows;
    // Returns a violated row for the candidate point or nullopt when the
    // point is feasible for the full implicit LP. May be empty.
    std::function<std::optional<ViolatedConstraint>(const FractionalSolution&)> row_oracle;
    long iteration_cap = 0;  // 0 = default 10 * 2^min(n, 20)
    bool collect_debug = false;
};

struct LPResult {
    FractionalSolution x;
    Rational value;
    LPStatus status = LPStatus::Optimal;
    int generated_rows = 0;
    std::string debug;  // final rows and point, "p/q" rationals, when requested
};

LPResult solve_covering(const CoveringLPModel& model);

// Packing master over a pool of vertex-set columns:
//   max sum(weights)  s.t.  sum of weights of columns containing v <= bounds(v),
// weights >= 0. Returns optimal weights, nonnegative vertex duals satisfying
// complementary slackness exactly, and the optimum value.
struct PackingMasterResult {
    std::vector<Rational> weights;
    NodeWeights duals;
    Rational value;
};

PackingMasterResult solve_packing_master(const std::vector<VertexSet>& columns,
                                         const NodeWeights& bounds);

}  // namespace cdp
