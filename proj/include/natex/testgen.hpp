#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "natex/choice.hpp"
#include "natex/desirability.hpp"
#include "natex/gamble.hpp"
#include "natex/ratlp.hpp"

namespace natex {
namespace testgen {

// Deterministic instance generation for the randomized invariant suites.
// Only the raw mt19937_64 stream is consumed (no std distributions), so the
// same seed yields the same instances on any platform.
using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
std::int64_t pick(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Numerator in [-4, 4], denominator in [1, 4], lowest terms.
Rational small_rational(Rng& rng);

/// Strictly positive variant: numerator in [1, 4].
Rational small_positive_rational(Rng& rng);

Gamble gamble(Rng& rng, Eigen::Index dim);
Gamble strictly_positive_gamble(Rng& rng, Eigen::Index dim);
Gamble nonpositive_gamble(Rng& rng, Eigen::Index dim);

/// 1..max_size members before deduplication.
GambleSet gamble_set(Rng& rng, Eigen::Index dim, int max_size);

Assessment assessment(Rng& rng, Eigen::Index dim, int max_sets, int max_set_size);

/// Rejection-samples assessments until one is consistent.
Assessment consistent_assessment(Rng& rng, Eigen::Index dim, int max_sets,
                                 int max_set_size, const EngineOptions& opts = {});

/// Rejection-samples generator lists until the generated cone is coherent.
DesirGenerators coherent_generators(Rng& rng, Eigen::Index dim, int max_generators);

/// (lambda, mu) >= 0 with positive sum; occasionally one of them is zero.
std::pair<Rational, Rational> positive_pair(Rng& rng);

/// Small LP: 1..3 variables, 1..4 constraints, mixed relations and
/// nonnegativity flags; an objective is present most of the time.
ratlp::LinearProgram linear_program(Rng& rng);

}  // namespace testgen
}  // namespace natex
