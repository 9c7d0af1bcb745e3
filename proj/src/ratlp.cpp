#include "natex/ratlp.hpp"

#include <utility>

namespace natex {
namespace ratlp {

LinearProgram LinearProgram::feasibility(Eigen::Index num_vars_) {
  LinearProgram lp;
  lp.num_vars = num_vars_;
  lp.nonneg.assign(static_cast<std::size_t>(num_vars_), true);
  return lp;
}

LinearProgram LinearProgram::maximize(RatVec objective_) {
  LinearProgram lp;
  lp.num_vars = objective_.size();
  lp.nonneg.assign(static_cast<std::size_t>(lp.num_vars), true);
  lp.objective = std::move(objective_);
  return lp;
}

void LinearProgram::add(RatVec coeffs, Relation rel, Rational rhs) {
  if (coeffs.size() != num_vars) {
    throw DimensionError("constraint coefficient vector has wrong length");
  }
  constraints.push_back(Constraint{std::move(coeffs), rel, std::move(rhs)});
}

bool satisfies(const LinearProgram& lp, const RatVec& point) {
  if (point.size() != lp.num_vars) return false;
  for (Eigen::Index j = 0; j < lp.num_vars; ++j) {
    const bool nn = lp.nonneg.empty() ? true : lp.nonneg[static_cast<std::size_t>(j)];
    if (nn && sgn(point[j]) < 0) return false;
  }
  for (const auto& c : lp.constraints) {
    const Rational lhs = c.coeffs.dot(point);
    const int s = cmp(lhs, c.rhs);
    if (c.rel == Relation::LessEq && s > 0) return false;
    if (c.rel == Relation::Equal && s != 0) return false;
    if (c.rel == Relation::GreaterEq && s < 0) return false;
  }
  return true;
}

namespace {

// Two-phase primal simplex on the full tableau, Bland's rule throughout.
// Problem sizes here are tiny (a handful of variables and rows), so the
// tableau is recomputed exactly and kept dense.
class Simplex {
 public:
  explicit Simplex(const LinearProgram& lp) : lp_(lp) {
    if (!lp.nonneg.empty() &&
        lp.nonneg.size() != static_cast<std::size_t>(lp.num_vars)) {
      throw DimensionError("nonneg flag vector has wrong length");
    }
    if (lp.objective && lp.objective->size() != lp.num_vars) {
      throw DimensionError("objective vector has wrong length");
    }
    build();
  }

  LPOutcome run() {
    if (!phase1()) return LPOutcome{LPStatus::Infeasible, std::nullopt, std::nullopt};
    if (!lp_.objective) {
      return LPOutcome{LPStatus::FeasiblePoint, extract_point(), std::nullopt};
    }
    RatVec cost = RatVec::Zero(cols());
    for (Eigen::Index j = 0; j < lp_.num_vars; ++j) {
      const auto& map = var_cols_[static_cast<std::size_t>(j)];
      cost[map.first] += (*lp_.objective)[j];
      if (map.second >= 0) cost[map.second] -= (*lp_.objective)[j];
    }
    const int res = optimize(cost);
    if (res < 0) {
      RatVec ray_point = extract_point_with_ray();
      return LPOutcome{LPStatus::Unbounded, std::move(ray_point), std::nullopt};
    }
    RatVec point = extract_point();
    Rational value = lp_.objective->dot(point);
    return LPOutcome{LPStatus::Optimal, std::move(point), std::move(value)};
  }

 private:
  Eigen::Index cols() const { return tableau_.cols() - 1; }
  Eigen::Index rows() const { return tableau_.rows(); }
  Rational& rhs(Eigen::Index i) { return tableau_(i, cols()); }

  void build() {
    const Eigen::Index n = lp_.num_vars;
    Eigen::Index structural = 0;
    var_cols_.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
      const bool nn = lp_.nonneg.empty() ? true : lp_.nonneg[static_cast<std::size_t>(j)];
      if (nn) {
        var_cols_.emplace_back(structural, Eigen::Index(-1));
        structural += 1;
      } else {
        var_cols_.emplace_back(structural, structural + 1);  // x = x+ - x-
        structural += 2;
      }
    }
    const Eigen::Index m = static_cast<Eigen::Index>(lp_.constraints.size());
    Eigen::Index extra = 0;  // slack/surplus columns
    for (const auto& c : lp_.constraints) {
      extra += (c.rel == Relation::Equal) ? 0 : 1;
    }
    const Eigen::Index total = structural + extra + m;  // m artificial slots at most
    tableau_ = RatMat::Zero(m, total + 1);
    basis_.assign(static_cast<std::size_t>(m), -1);
    artificial_.assign(static_cast<std::size_t>(total), false);

    Eigen::Index next_extra = structural;
    Eigen::Index next_artificial = structural + extra;
    for (Eigen::Index i = 0; i < m; ++i) {
      const auto& c = lp_.constraints[static_cast<std::size_t>(i)];
      Relation rel = c.rel;
      Rational b = c.rhs;
      RatVec row = RatVec::Zero(total);
      for (Eigen::Index j = 0; j < n; ++j) {
        const auto& map = var_cols_[static_cast<std::size_t>(j)];
        row[map.first] = c.coeffs[j];
        if (map.second >= 0) row[map.second] = -c.coeffs[j];
      }
      if (sgn(b) < 0) {  // normalize rhs >= 0
        row = -row;
        b = -b;
        if (rel == Relation::LessEq) rel = Relation::GreaterEq;
        else if (rel == Relation::GreaterEq) rel = Relation::LessEq;
      }
      if (rel == Relation::LessEq) {
        row[next_extra] = 1;  // slack starts basic
        basis_[static_cast<std::size_t>(i)] = next_extra;
        ++next_extra;
      } else if (rel == Relation::GreaterEq) {
        row[next_extra] = -1;  // surplus
        ++next_extra;
        row[next_artificial] = 1;
        artificial_[static_cast<std::size_t>(next_artificial)] = true;
        basis_[static_cast<std::size_t>(i)] = next_artificial;
        ++next_artificial;
      } else {
        row[next_artificial] = 1;
        artificial_[static_cast<std::size_t>(next_artificial)] = true;
        basis_[static_cast<std::size_t>(i)] = next_artificial;
        ++next_artificial;
      }
      tableau_.block(i, 0, 1, total) = row.transpose();
      rhs(i) = b;
    }
    num_columns_used_ = next_artificial;
  }

  // Maximizes cost over the current feasible basis. Returns +1 at optimum,
  // -1 on unboundedness (entering_ holds the unbounded column).
  int optimize(const RatVec& cost) {
    for (;;) {
      Eigen::Index entering = -1;
      for (Eigen::Index j = 0; j < num_columns_used_; ++j) {
        if (banned_artificials_ && artificial_[static_cast<std::size_t>(j)]) continue;
        if (is_basic(j)) continue;
        Rational reduced = -cost[j];
        for (Eigen::Index i = 0; i < rows(); ++i) {
          const Eigen::Index bj = basis_[static_cast<std::size_t>(i)];
          if (sgn(cost[bj]) != 0 && sgn(tableau_(i, j)) != 0) {
            reduced += cost[bj] * tableau_(i, j);
          }
        }
        if (sgn(reduced) < 0) {  // Bland: smallest improving index
          entering = j;
          break;
        }
      }
      if (entering < 0) return 1;

      Eigen::Index leaving = -1;
      Rational best_ratio;
      for (Eigen::Index i = 0; i < rows(); ++i) {
        if (sgn(tableau_(i, entering)) <= 0) continue;
        Rational ratio = rhs(i) / tableau_(i, entering);
        if (leaving < 0 || cmp(ratio, best_ratio) < 0 ||
            (cmp(ratio, best_ratio) == 0 &&
             basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leaving)])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) {
        entering_ = entering;
        return -1;
      }
      pivot(leaving, entering);
    }
  }

  void pivot(Eigen::Index row, Eigen::Index col) {
    const Rational p = tableau_(row, col);
    tableau_.row(row) /= p;
    for (Eigen::Index i = 0; i < rows(); ++i) {
      if (i == row) continue;
      const Rational factor = tableau_(i, col);
      if (sgn(factor) == 0) continue;
      tableau_.row(i) -= factor * tableau_.row(row);
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  bool is_basic(Eigen::Index col) const {
    for (const Eigen::Index b : basis_) {
      if (b == col) return true;
    }
    return false;
  }

  bool phase1() {
    bool any_artificial = false;
    for (Eigen::Index j = 0; j < num_columns_used_; ++j) {
      any_artificial |= artificial_[static_cast<std::size_t>(j)];
    }
    if (any_artificial) {
      RatVec cost = RatVec::Zero(cols());
      for (Eigen::Index j = 0; j < num_columns_used_; ++j) {
        if (artificial_[static_cast<std::size_t>(j)]) cost[j] = -1;
      }
      optimize(cost);  // bounded below by 0, never unbounded
      Rational infeas = 0;
      for (Eigen::Index i = 0; i < rows(); ++i) {
        if (artificial_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])]) {
          infeas += rhs(i);
        }
      }
      if (sgn(infeas) != 0) return false;
      expel_artificials();
    }
    banned_artificials_ = true;
    return true;
  }

  // Basic artificials sit at value zero after a feasible phase 1; pivot them
  // out on any usable column, or drop the row as redundant.
  void expel_artificials() {
    for (Eigen::Index i = 0; i < rows();) {
      const Eigen::Index b = basis_[static_cast<std::size_t>(i)];
      if (!artificial_[static_cast<std::size_t>(b)]) {
        ++i;
        continue;
      }
      Eigen::Index col = -1;
      for (Eigen::Index j = 0; j < num_columns_used_; ++j) {
        if (artificial_[static_cast<std::size_t>(j)]) continue;
        if (sgn(tableau_(i, j)) != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        pivot(i, col);
        ++i;
      } else {
        drop_row(i);
      }
    }
  }

  void drop_row(Eigen::Index row) {
    const Eigen::Index last = rows() - 1;
    if (row != last) {
      tableau_.row(row) = tableau_.row(last);
      basis_[static_cast<std::size_t>(row)] = basis_[static_cast<std::size_t>(last)];
    }
    tableau_.conservativeResize(last, Eigen::NoChange);
    basis_.resize(static_cast<std::size_t>(last));
  }

  RatVec column_values() {
    RatVec vals = RatVec::Zero(cols());
    for (Eigen::Index i = 0; i < rows(); ++i) {
      vals[basis_[static_cast<std::size_t>(i)]] = rhs(i);
    }
    return vals;
  }

  RatVec to_original(const RatVec& vals) const {
    RatVec x(lp_.num_vars);
    for (Eigen::Index j = 0; j < lp_.num_vars; ++j) {
      const auto& map = var_cols_[static_cast<std::size_t>(j)];
      x[j] = vals[map.first];
      if (map.second >= 0) x[j] -= vals[map.second];
    }
    return x;
  }

  RatVec extract_point() { return to_original(column_values()); }

  // One unit step along the improving ray of the unbounded column.
  RatVec extract_point_with_ray() {
    RatVec vals = column_values();
    vals[entering_] += 1;
    for (Eigen::Index i = 0; i < rows(); ++i) {
      vals[basis_[static_cast<std::size_t>(i)]] -= tableau_(i, entering_);
    }
    return to_original(vals);
  }

  const LinearProgram& lp_;
  RatMat tableau_;  // m x (columns + 1), last column is the rhs
  std::vector<Eigen::Index> basis_;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> var_cols_;
  std::vector<bool> artificial_;
  Eigen::Index num_columns_used_ = 0;
  Eigen::Index entering_ = -1;
  bool banned_artificials_ = false;
};

}  // namespace

LPOutcome solve(const LinearProgram& lp) {
  Simplex s(lp);
  return s.run();
}

}  // namespace ratlp
}  // namespace natex
