#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "natex/rational.hpp"

namespace natex {

// A gamble is an uncertain reward in linear utility: one exact rational per
// state of the possibility space. Plain Eigen vectors keep gambles
// expression-friendly (w - u, lambda * u + mu * v, ...).
using Gamble = RatVec;

/// u >= 0 entrywise and u != 0.
bool is_strictly_positive(const Gamble& u);

/// u <= 0 entrywise (the zero gamble included).
bool is_nonpositive(const Gamble& u);

Gamble zero_gamble(Eigen::Index dim);

/// Indicator of state `state`: 1 there, 0 elsewhere.
Gamble unit_gamble(Eigen::Index dim, Eigen::Index state);

class PossibilitySpace {
 public:
  /// Labels must be nonempty and pairwise distinct.
  explicit PossibilitySpace(std::vector<std::string> labels);

  Eigen::Index size() const { return static_cast<Eigen::Index>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const PossibilitySpace& other) const = default;

 private:
  std::vector<std::string> labels_;
};

// A finite set of distinct gambles over one dimension. Members are kept
// sorted lexicographically and deduplicated, so equal sets compare equal and
// serialize identically.
class GambleSet {
 public:
  /// Empty set over a given dimension.
  explicit GambleSet(Eigen::Index dim);
  /// Canonicalizes: sorts, merges duplicates, checks uniform dimension.
  GambleSet(Eigen::Index dim, std::vector<Gamble> members);

  Eigen::Index dim() const { return dim_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Gamble>& members() const { return members_; }
  const Gamble& operator[](std::size_t i) const { return members_[i]; }

  bool contains(const Gamble& g) const;
  GambleSet with(const Gamble& g) const;
  GambleSet without(const Gamble& g) const;
  bool subset_of(const GambleSet& other) const;

  bool operator==(const GambleSet& other) const;
  /// Canonical order: member-wise lexicographic, ties broken by size.
  static int compare(const GambleSet& a, const GambleSet& b);

 private:
  Eigen::Index dim_;
  std::vector<Gamble> members_;
};

/// Members of A that are not nonpositive (idempotent, shrinking).
GambleSet strip_nonpositive(const GambleSet& a);

/// { w - u : w in A }, deduplicated. Contains 0 whenever u is a member of A.
GambleSet shift_set(const GambleSet& a, const Gamble& u);

GambleSet set_union(const GambleSet& a, const GambleSet& b);

// A finite set of distinct gamble sets over one shared possibility space.
class Assessment {
 public:
  explicit Assessment(PossibilitySpace space);
  /// Canonicalizes the collection; every set must match the space dimension.
  Assessment(PossibilitySpace space, std::vector<GambleSet> sets);

  const PossibilitySpace& space() const { return space_; }
  Eigen::Index dim() const { return space_.size(); }
  std::size_t size() const { return sets_.size(); }
  const std::vector<GambleSet>& sets() const { return sets_; }
  const GambleSet& operator[](std::size_t i) const { return sets_[i]; }

  bool contains(const GambleSet& q) const;
  bool contains_empty_set() const;

 private:
  PossibilitySpace space_;
  std::vector<GambleSet> sets_;
};

}  // namespace natex
