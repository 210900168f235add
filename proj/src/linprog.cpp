#include "problogic/linprog.hpp"

#include <limits>
#include <stdexcept>

namespace problogic {

namespace {

constexpr std::size_t kNoColumn = std::numeric_limits<std::size_t>::max();

// Full-tableau simplex on the standard form max c.x, A x = b, x >= 0,
// b >= 0, with an identity start basis of slacks and artificials.
class Tableau {
 public:
  Tableau(const LinearProgram& lp) : n_struct_(lp.num_vars) {
    for (const auto& row : lp.rows)
      if (row.coeffs.size() != lp.num_vars)
        throw std::invalid_argument("constraint row width does not match variable count");
    if (lp.objective.size() != lp.num_vars)
      throw std::invalid_argument("objective width does not match variable count");

    const std::size_t m = lp.rows.size();
    // Count slack columns first so the layout is structural | slack | artificial.
    std::size_t n_slack = 0;
    for (const auto& row : lp.rows)
      if (row.rel != RowRelation::Equal) ++n_slack;
    n_total_ = n_struct_ + n_slack;
    std::size_t next_slack = n_struct_;

    rows_.assign(m, std::vector<Rational>());
    rhs_.assign(m, Rational(0));
    basis_.assign(m, kNoColumn);

    std::vector<std::size_t> needs_artificial;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Rational> coeffs = lp.rows[i].coeffs;
      Rational b = lp.rows[i].rhs;
      RowRelation rel = lp.rows[i].rel;
      if (b < 0) {
        for (auto& c : coeffs) c = -c;
        b = -b;
        if (rel == RowRelation::LessEq) rel = RowRelation::GreaterEq;
        else if (rel == RowRelation::GreaterEq) rel = RowRelation::LessEq;
      }
      coeffs.resize(n_total_, Rational(0));
      if (rel == RowRelation::LessEq) {
        coeffs[next_slack] = 1;
        basis_[i] = next_slack;
        ++next_slack;
      } else if (rel == RowRelation::GreaterEq) {
        coeffs[next_slack] = -1;
        ++next_slack;
        needs_artificial.push_back(i);
      } else {
        needs_artificial.push_back(i);
      }
      rows_[i] = std::move(coeffs);
      rhs_[i] = std::move(b);
    }

    first_artificial_ = n_total_;
    n_total_ += needs_artificial.size();
    for (auto& row : rows_) row.resize(n_total_, Rational(0));
    std::size_t next_artificial = first_artificial_;
    for (std::size_t i : needs_artificial) {
      rows_[i][next_artificial] = 1;
      basis_[i] = next_artificial;
      ++next_artificial;
    }
  }

  bool run_phase_one() {
    std::vector<Rational> cost(n_total_, Rational(0));
    for (std::size_t j = first_artificial_; j < n_total_; ++j) cost[j] = -1;
    optimize(cost);
    Rational infeasibility = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] >= first_artificial_) infeasibility += rhs_[i];
    if (infeasibility != 0) return false;
    evict_artificials();
    return true;
  }

  // Returns false when the phase-two objective is unbounded.
  bool run_phase_two(const std::vector<Rational>& objective) {
    std::vector<Rational> cost(n_total_, Rational(0));
    for (std::size_t j = 0; j < n_struct_; ++j) cost[j] = objective[j];
    return optimize(cost);
  }

  std::vector<Rational> point() const {
    std::vector<Rational> x(n_struct_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < n_struct_) x[basis_[i]] = rhs_[i];
    return x;
  }

 private:
  Rational reduced_cost(const std::vector<Rational>& cost, std::size_t j) const {
    Rational r = cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (cost[basis_[i]] != 0) r -= cost[basis_[i]] * rows_[i][j];
    return r;
  }

  bool is_basic(std::size_t j) const {
    for (std::size_t b : basis_)
      if (b == j) return true;
    return false;
  }

  // Bland's rule: entering column is the lowest-index improving one,
  // leaving row breaks ratio ties by lowest basic index. Artificial
  // columns never re-enter once out of the basis; phase one stays correct
  // because a feasible system admits a basis with every artificial at zero.
  bool optimize(const std::vector<Rational>& cost) {
    const std::size_t limit = first_artificial_;
    for (;;) {
      std::size_t entering = kNoColumn;
      for (std::size_t j = 0; j < limit; ++j) {
        if (is_basic(j)) continue;
        if (reduced_cost(cost, j) > 0) {
          entering = j;
          break;
        }
      }
      if (entering == kNoColumn) return true;

      std::size_t leaving = kNoColumn;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][entering];
        if (a <= 0) continue;
        Rational ratio = rhs_[i] / a;
        if (leaving == kNoColumn || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == kNoColumn) return false;  // unbounded
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = rows_[row][col];
    for (auto& v : rows_[row]) v /= p;
    rhs_[row] /= p;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == row) continue;
      const Rational factor = rows_[i][col];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < n_total_; ++j)
        rows_[i][j] -= factor * rows_[row][j];
      rhs_[i] -= factor * rhs_[row];
    }
    basis_[row] = col;
  }

  // After a feasible phase one, any artificial still basic sits at zero.
  // Pivot it out on some genuine column, or drop the row as redundant.
  void evict_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      std::size_t col = kNoColumn;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (rows_[i][j] != 0 && !is_basic(j)) {
          col = j;
          break;
        }
      }
      if (col == kNoColumn) {
        rows_.erase(rows_.begin() + i);
        rhs_.erase(rhs_.begin() + i);
        basis_.erase(basis_.begin() + i);
      } else {
        pivot(i, col);
        ++i;
      }
    }
  }

  std::size_t n_struct_;
  std::size_t n_total_ = 0;
  std::size_t first_artificial_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution lp_solve(const LinearProgram& lp, Sense sense) {
  Tableau tableau(lp);
  if (!tableau.run_phase_one()) return {SolveStatus::Infeasible, Rational(0), {}};

  std::vector<Rational> objective = lp.objective;
  if (sense == Sense::Minimize)
    for (auto& c : objective) c = -c;

  if (!tableau.run_phase_two(objective)) return {SolveStatus::Unbounded, Rational(0), {}};

  std::vector<Rational> x = tableau.point();
  Rational value = 0;
  for (std::size_t j = 0; j < lp.num_vars; ++j) value += lp.objective[j] * x[j];
  return {SolveStatus::Optimal, std::move(value), std::move(x)};
}

}  // namespace problogic
