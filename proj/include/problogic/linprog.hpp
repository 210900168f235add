#pragma once

#include <vector>

#include "problogic/rational.hpp"

namespace problogic {

enum class RowRelation { LessEq, GreaterEq, Equal };

struct LinearRow {
  std::vector<Rational> coeffs;
  RowRelation rel = RowRelation::LessEq;
  Rational rhs;
};

/// Linear program over nonnegative variables. Probability instances use
/// one variable per world and carry the total-mass row among `rows`.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<LinearRow> rows;
  std::vector<Rational> objective;
};

enum class Sense { Minimize, Maximize };

enum class SolveStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  SolveStatus status = SolveStatus::Infeasible;
  Rational value;
  std::vector<Rational> point;  // structural variables; empty unless Optimal
};

/// Exact two-phase primal simplex with Bland's anti-cycling rule. All
/// pivoting is rational, so decisions carry no tolerance. Throws
/// std::invalid_argument on dimension mismatches.
LpSolution lp_solve(const LinearProgram& lp, Sense sense);

}  // namespace problogic
