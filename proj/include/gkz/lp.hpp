#pragma once

#include <cstddef>
#include <vector>

#include "gkz/exact.hpp"

namespace gkz {

enum class Relation { LessEqual, GreaterEqual, Equal };

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational objective;
  std::vector<Rational> x;  // one value per declared variable; empty unless Optimal
};

/// Exact rational linear program  max c·x  subject to linear constraints.
/// Variables are nonnegative unless declared free. Solved by the two-phase
/// tableau simplex method with Bland's anti-cycling rule, so every answer is
/// exact and termination is guaranteed.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_vars);

  std::size_t num_vars() const { return num_vars_; }

  void set_free(std::size_t var);
  void set_objective(std::vector<Rational> coeffs);
  void add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs);

  LpSolution maximize() const;

 private:
  struct Row {
    std::vector<Rational> coeffs;
    Relation rel;
    Rational rhs;
  };

  std::size_t num_vars_;
  std::vector<bool> free_;
  std::vector<Rational> objective_;
  std::vector<Row> rows_;
};

/// True iff points[k] is a convex combination of the other points
/// (exact LP feasibility). Repeated copies of points[k] count as "others".
bool is_convex_combination_of_others(const RationalMatrix& points, std::size_t k);

/// Flags the points that are vertices of the convex hull of the list.
std::vector<bool> extreme_point_flags(const RationalMatrix& points);

}  // namespace gkz
