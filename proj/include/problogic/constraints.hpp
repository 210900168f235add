#pragma once

#include <optional>
#include <string>
#include <vector>

#include "problogic/formula.hpp"
#include "problogic/linprog.hpp"
#include "problogic/nilsson.hpp"
#include "problogic/rational.hpp"

namespace problogic {

/// Linear combination of formula weights plus a constant:
/// c1*w(f1) + ... + ck*w(fk) + constant.
struct WeightTerm {
  struct Entry {
    Rational coeff;
    Formula formula;
  };
  std::vector<Entry> entries;
  Rational constant;
};

struct WeightConstraint {
  WeightTerm lhs;
  RowRelation rel = RowRelation::LessEq;
  Rational rhs;
};

/// Expands a weight term into per-world coefficients: each w(f) becomes the
/// sum of the variables of the worlds satisfying f. The constant is not
/// included.
std::vector<Rational> expand_weight_term(const Alphabet& a, const WeightTerm& term);

/// One variable per world; each constraint row expands formula weights
/// inline; the total-mass row closes the system. Variables are
/// nonnegative by the solver's convention.
LinearProgram compile(const Alphabet& a, const std::vector<WeightConstraint>& cs,
                      std::size_t lp_cap = kDefaultLpCap);

enum class SatStatus { Sat, Unsat };

struct SatResult {
  SatStatus status = SatStatus::Unsat;
  std::optional<NilssonStructure> witness;  // satisfies every constraint exactly
};

SatResult satisfiable(const Alphabet& a, const std::vector<WeightConstraint>& cs,
                      std::size_t lp_cap = kDefaultLpCap);

struct BoundResult {
  SolveStatus status = SolveStatus::Infeasible;
  Rational value;
  std::optional<NilssonStructure> witness;  // attains the optimum
};

/// Exact optimum of a weight objective over all measures satisfying the
/// constraints.
BoundResult bound(const Alphabet& a, const std::vector<WeightConstraint>& cs,
                  const WeightTerm& objective, Sense sense,
                  std::size_t lp_cap = kDefaultLpCap);

/// Checks one constraint against a concrete measure, exactly.
bool holds(const NilssonStructure& n, const WeightConstraint& c);

// Surface syntax, one constraint per line, e.g.
//   0.6 <= w(p)
//   w(p & q) <= 0.1
//   1*w(p) + -2*w(q) <= 0.25
// Rationals as decimals or "a/b"; blank lines and '#' comments ignored.
std::vector<WeightConstraint> parse_constraints(const std::string& text);
WeightTerm parse_weight_term(const std::string& text);
std::string to_string(const WeightTerm& term);
std::string to_string(const WeightConstraint& c);

/// Union of the propositions of all formulas, in first-appearance order.
Alphabet constraints_alphabet(const std::vector<WeightConstraint>& cs);

}  // namespace problogic
