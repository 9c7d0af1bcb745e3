#pragma once

#include <optional>
#include <vector>

#include "natex/rational.hpp"

namespace natex {
namespace ratlp {

enum class Relation { LessEq, Equal, GreaterEq };

struct Constraint {
  RatVec coeffs;
  Relation rel = Relation::LessEq;
  Rational rhs;
};

// A small dense LP over exact rationals. `objective`, when present, is
// maximized; otherwise solve() answers pure feasibility.
struct LinearProgram {
  Eigen::Index num_vars = 0;
  std::vector<Constraint> constraints;
  std::optional<RatVec> objective;
  std::vector<bool> nonneg;  // per-variable x_j >= 0 flag

  static LinearProgram feasibility(Eigen::Index num_vars);
  static LinearProgram maximize(RatVec objective);
  void add(RatVec coeffs, Relation rel, Rational rhs);
};

enum class LPStatus { Infeasible, Optimal, Unbounded, FeasiblePoint };

// Every returned point satisfies all constraints exactly (substitution
// checkable). For Unbounded, `point` lies one unit along an improving ray
// from the final basic feasible solution, so its objective value strictly
// exceeds that solution's; with a nonnegative objective this makes the
// value at `point` strictly positive.
struct LPOutcome {
  LPStatus status = LPStatus::Infeasible;
  std::optional<RatVec> point;
  std::optional<Rational> value;  // objective at `point` (Optimal only)
};

/// Two-phase primal simplex with Bland's rule; exact and deterministic.
LPOutcome solve(const LinearProgram& lp);

/// Exact substitution check of `point` against every constraint.
bool satisfies(const LinearProgram& lp, const RatVec& point);

}  // namespace ratlp
}  // namespace natex
