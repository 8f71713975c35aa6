#include "gkz/lp.hpp"

#include <utility>

#include "gkz/error.hpp"

namespace gkz {

LinearProgram::LinearProgram(std::size_t num_vars)
    : num_vars_(num_vars), free_(num_vars, false), objective_(num_vars) {}

void LinearProgram::set_free(std::size_t var) {
  if (var >= num_vars_) throw Error(ErrorKind::IndexOutOfRange, "LP variable index");
  free_[var] = true;
}

void LinearProgram::set_objective(std::vector<Rational> coeffs) {
  if (coeffs.size() != num_vars_) throw Error(ErrorKind::InvalidInput, "LP objective length");
  objective_ = std::move(coeffs);
}

void LinearProgram::add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
  if (coeffs.size() != num_vars_) throw Error(ErrorKind::InvalidInput, "LP constraint length");
  rows_.push_back({std::move(coeffs), rel, std::move(rhs)});
}

namespace {

// Dense tableau in equality form A·x = b, x >= 0, b >= 0 with an explicit
// basis. The objective row stores reduced costs of  max c·x  so that the
// current basis is optimal when no entry is negative.
struct Tableau {
  std::vector<std::vector<Rational>> rows;  // each row: columns then rhs
  std::vector<Rational> objective;          // reduced costs then current value
  std::vector<std::size_t> basis;
  std::size_t columns = 0;

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = rows[r];
    const Rational inv = 1 / prow[c];
    for (auto& v : prow) {
      if (v != 0) v *= inv;
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[c] == 0) return;
      const Rational factor = row[c];
      for (std::size_t j = 0; j <= columns; ++j) {
        if (prow[j] != 0) row[j] -= factor * prow[j];
      }
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r) eliminate(rows[i]);
    }
    eliminate(objective);
    basis[r] = c;
  }

  // Makes the objective row consistent with the basis, given raw costs c.
  void load_objective(const std::vector<Rational>& costs) {
    objective.assign(columns + 1, Rational(0));
    for (std::size_t j = 0; j < columns; ++j) objective[j] = -costs[j];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational cb = costs[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= columns; ++j) {
        if (rows[i][j] != 0) objective[j] += cb * rows[i][j];
      }
    }
  }

  // Dantzig's rule (most negative reduced cost) until a run of degenerate
  // pivots, then Bland's rule (lowest index on both tests), which cannot cycle.
  bool run(const std::vector<bool>& allowed) {
    std::size_t degenerate_run = 0;
    bool bland = false;
    for (;;) {
      std::size_t enter = columns;
      for (std::size_t j = 0; j < columns; ++j) {
        if (!allowed[j] || objective[j] >= 0) continue;
        if (enter == columns || (!bland && objective[j] < objective[enter])) enter = j;
        if (bland) break;
      }
      if (enter == columns) return true;
      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rows[i][columns] / rows[i][enter];
        if (leave == rows.size() || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == rows.size()) return false;
      if (best == 0) {
        if (++degenerate_run > 2 * columns) bland = true;
      } else {
        degenerate_run = 0;
      }
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpSolution LinearProgram::maximize() const {
  // Column layout: structural columns (free variables split into +/- parts),
  // then slack/surplus columns, then artificial columns.
  std::vector<std::size_t> plus_col(num_vars_), minus_col(num_vars_, SIZE_MAX);
  std::size_t structural = 0;
  for (std::size_t v = 0; v < num_vars_; ++v) {
    plus_col[v] = structural++;
    if (free_[v]) minus_col[v] = structural++;
  }

  const std::size_t m = rows_.size();
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  std::vector<bool> negate(m, false);
  std::vector<Relation> rel(m);
  for (std::size_t i = 0; i < m; ++i) {
    rel[i] = rows_[i].rel;
    // A zero right-hand side lets a >= row flip into a slack-basic <= row.
    if (rows_[i].rhs < 0 || (rows_[i].rhs == 0 && rel[i] == Relation::GreaterEqual)) {
      negate[i] = true;
      if (rel[i] == Relation::LessEqual) rel[i] = Relation::GreaterEqual;
      else if (rel[i] == Relation::GreaterEqual) rel[i] = Relation::LessEqual;
    }
    if (rel[i] != Relation::Equal) ++slack_count;
    if (rel[i] != Relation::LessEqual) ++artificial_count;
  }

  Tableau t;
  t.columns = structural + slack_count + artificial_count;
  t.rows.assign(m, std::vector<Rational>(t.columns + 1));
  t.basis.assign(m, 0);
  std::size_t next_slack = structural;
  std::size_t next_art = structural + slack_count;
  const std::size_t first_art = next_art;
  for (std::size_t i = 0; i < m; ++i) {
    auto& row = t.rows[i];
    const Rational s = negate[i] ? -1 : 1;
    for (std::size_t v = 0; v < num_vars_; ++v) {
      const Rational& a = rows_[i].coeffs[v];
      if (a == 0) continue;
      row[plus_col[v]] = s * a;
      if (free_[v]) row[minus_col[v]] = -s * a;
    }
    row[t.columns] = s * rows_[i].rhs;
    if (rel[i] == Relation::LessEqual) {
      row[next_slack] = 1;
      t.basis[i] = next_slack++;
    } else {
      if (rel[i] == Relation::GreaterEqual) row[next_slack++] = -1;
      row[next_art] = 1;
      t.basis[i] = next_art++;
    }
  }

  std::vector<bool> allowed(t.columns, true);

  if (artificial_count > 0) {
    std::vector<Rational> phase1(t.columns);
    for (std::size_t j = first_art; j < t.columns; ++j) phase1[j] = -1;
    t.load_objective(phase1);
    t.run(allowed);  // bounded above by zero
    if (t.objective[t.columns] != 0) return {LpStatus::Infeasible, 0, {}};

    // Drive remaining (zero-valued) artificials out of the basis; drop rows
    // that turn out to be redundant.
    for (std::size_t i = 0; i < t.rows.size();) {
      if (t.basis[i] < first_art) {
        ++i;
        continue;
      }
      std::size_t col = first_art;
      for (std::size_t j = 0; j < first_art; ++j) {
        if (t.rows[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col == first_art) {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      t.pivot(i, col);
      ++i;
    }
    for (std::size_t j = first_art; j < t.columns; ++j) allowed[j] = false;
  }

  std::vector<Rational> costs(t.columns);
  for (std::size_t v = 0; v < num_vars_; ++v) {
    costs[plus_col[v]] = objective_[v];
    if (free_[v]) costs[minus_col[v]] = -objective_[v];
  }
  t.load_objective(costs);
  if (!t.run(allowed)) return {LpStatus::Unbounded, 0, {}};

  std::vector<Rational> column_value(t.columns);
  for (std::size_t i = 0; i < t.rows.size(); ++i) column_value[t.basis[i]] = t.rows[i][t.columns];
  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.objective = t.objective[t.columns];
  sol.x.resize(num_vars_);
  for (std::size_t v = 0; v < num_vars_; ++v) {
    sol.x[v] = column_value[plus_col[v]];
    if (free_[v]) sol.x[v] -= column_value[minus_col[v]];
  }
  return sol;
}

bool is_convex_combination_of_others(const RationalMatrix& points, std::size_t k) {
  if (k >= points.size()) throw Error(ErrorKind::IndexOutOfRange, "convex combination target");
  const std::size_t others = points.size() - 1;
  if (others == 0) return false;
  const std::size_t dim = points[k].size();
  // lambda_i >= 0, sum lambda_i = 1, sum lambda_i p_i = p_k
  LinearProgram lp(others);
  auto column_of = [&](std::size_t i) { return i < k ? i : i - 1; };
  for (std::size_t c = 0; c < dim; ++c) {
    std::vector<Rational> row(others);
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i != k) row[column_of(i)] = points[i][c];
    }
    lp.add_constraint(std::move(row), Relation::Equal, points[k][c]);
  }
  lp.add_constraint(std::vector<Rational>(others, Rational(1)), Relation::Equal, 1);
  return lp.maximize().status == LpStatus::Optimal;
}

std::vector<bool> extreme_point_flags(const RationalMatrix& points) {
  std::vector<bool> flags(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) flags[k] = !is_convex_combination_of_others(points, k);
  return flags;
}

}  // namespace gkz
