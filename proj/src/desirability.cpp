#include "natex/desirability.hpp"

#include <algorithm>
#include <utility>

namespace natex {

DesirGenerators::DesirGenerators(Eigen::Index dim) : dim_(dim) {
  if (dim < 1) throw DimensionError("generators over empty space");
}

DesirGenerators::DesirGenerators(Eigen::Index dim, std::vector<Gamble> generators)
    : dim_(dim), gens_(std::move(generators)) {
  if (dim < 1) throw DimensionError("generators over empty space");
  for (const auto& g : gens_) {
    if (g.size() != dim_) throw DimensionError("generator dimension mismatch");
  }
  std::sort(gens_.begin(), gens_.end(),
            [](const Gamble& a, const Gamble& b) { return lex_compare(a, b) < 0; });
  gens_.erase(std::unique(gens_.begin(), gens_.end(),
                          [](const Gamble& a, const Gamble& b) {
                            return lex_compare(a, b) == 0;
                          }),
              gens_.end());
}

ConeMembership cone_membership(const DesirGenerators& dg, const Gamble& u) {
  if (u.size() != dg.dim()) throw DimensionError("cone query dimension mismatch");
  const auto k = static_cast<Eigen::Index>(dg.size());

  // Strictly positive gambles are members outright, with zero generator
  // weight: the whole gamble is its own positive part.
  if (is_strictly_positive(u)) {
    return ConeMembership{true, RatVec::Zero(k)};
  }

  // Otherwise u is a member iff sum(lambda_j * g_j) <= u has a nonnegative
  // solution with positive coefficient sum; maximize the sum and accept any
  // supremum above zero (unbounded included). The lambda = 0 solution alone
  // only proves u >= 0, which is not membership for u that is not strictly
  // positive.
  auto lp = ratlp::LinearProgram::maximize(RatVec::Ones(k));
  for (Eigen::Index x = 0; x < dg.dim(); ++x) {
    RatVec row(k);
    for (Eigen::Index j = 0; j < k; ++j) row[j] = dg.generators()[static_cast<std::size_t>(j)][x];
    lp.add(std::move(row), ratlp::Relation::LessEq, u[x]);
  }
  const auto out = ratlp::solve(lp);
  if (out.status == ratlp::LPStatus::Unbounded) {
    return ConeMembership{true, *out.point};
  }
  if (out.status == ratlp::LPStatus::Optimal && sgn(*out.value) > 0) {
    return ConeMembership{true, *out.point};
  }
  return ConeMembership{false, RatVec()};
}

bool cone_contains(const DesirGenerators& dg, const Gamble& u) {
  return cone_membership(dg, u).member;
}

CoherenceCheck coherence_check(const DesirGenerators& dg) {
  const auto k = static_cast<Eigen::Index>(dg.size());
  // 0 lies in the cone iff some nonnegative, nonzero combination of the
  // generators is nonpositive entrywise; normalizing the coefficient sum to
  // one makes that a bounded feasibility problem.
  auto lp = ratlp::LinearProgram::feasibility(k);
  for (Eigen::Index x = 0; x < dg.dim(); ++x) {
    RatVec row(k);
    for (Eigen::Index j = 0; j < k; ++j) row[j] = dg.generators()[static_cast<std::size_t>(j)][x];
    lp.add(std::move(row), ratlp::Relation::LessEq, Rational(0));
  }
  lp.add(RatVec::Ones(k), ratlp::Relation::Equal, Rational(1));
  const auto out = ratlp::solve(lp);
  if (out.status == ratlp::LPStatus::FeasiblePoint) {
    return CoherenceCheck{false, *out.point};
  }
  return CoherenceCheck{true, RatVec()};
}

bool is_coherent(const DesirGenerators& dg) { return coherence_check(dg).coherent; }

bool kd_contains(const DesirGenerators& dg, const GambleSet& b) {
  if (b.dim() != dg.dim()) throw DimensionError("kd query dimension mismatch");
  if (!is_coherent(dg)) {
    throw IncoherentGenerators("binary choice model undefined: generators span an incoherent cone");
  }
  return std::any_of(b.members().begin(), b.members().end(),
                     [&](const Gamble& g) { return cone_contains(dg, g); });
}

}  // namespace natex
