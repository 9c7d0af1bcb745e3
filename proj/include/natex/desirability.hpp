#pragma once

#include <vector>

#include "natex/gamble.hpp"
#include "natex/ratlp.hpp"

namespace natex {

// A finitely generated cone of desirable gambles: every strictly positive
// gamble, the listed generators, and all positive linear combinations of
// those (at least one coefficient nonzero).
class DesirGenerators {
 public:
  explicit DesirGenerators(Eigen::Index dim);
  DesirGenerators(Eigen::Index dim, std::vector<Gamble> generators);

  Eigen::Index dim() const { return dim_; }
  std::size_t size() const { return gens_.size(); }
  const std::vector<Gamble>& generators() const { return gens_; }

 private:
  Eigen::Index dim_;
  std::vector<Gamble> gens_;  // canonical order, duplicates merged
};

// Evidence for u lying in the cone: coefficients over the generator list
// with residual = u - sum(lambda_j * g_j) >= 0 entrywise, and either the
// coefficient sum positive or the residual strictly positive.
struct ConeMembership {
  bool member = false;
  RatVec lambda;  // size = generator count; meaningful when member
};

ConeMembership cone_membership(const DesirGenerators& dg, const Gamble& u);
bool cone_contains(const DesirGenerators& dg, const Gamble& u);

// Incoherence evidence: a mixture mu >= 0 with sum(mu) = 1 whose generator
// combination is nonpositive entrywise; coherent cones admit none.
struct CoherenceCheck {
  bool coherent = false;
  RatVec mixture;  // meaningful when incoherent
};

CoherenceCheck coherence_check(const DesirGenerators& dg);
bool is_coherent(const DesirGenerators& dg);

/// B meets the cone in at least one member. Throws IncoherentGenerators when
/// the cone is incoherent (the induced binary choice model is undefined).
bool kd_contains(const DesirGenerators& dg, const GambleSet& b);

}  // namespace natex
