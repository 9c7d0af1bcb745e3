#include "natex/testgen.hpp"

namespace natex {
namespace testgen {

std::int64_t pick(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng() % span);
}

Rational small_rational(Rng& rng) {
  Rational q(pick(rng, -4, 4), pick(rng, 1, 4));
  q.canonicalize();
  return q;
}

Rational small_positive_rational(Rng& rng) {
  Rational q(pick(rng, 1, 4), pick(rng, 1, 4));
  q.canonicalize();
  return q;
}

Gamble gamble(Rng& rng, Eigen::Index dim) {
  Gamble g(dim);
  for (Eigen::Index i = 0; i < dim; ++i) g[i] = small_rational(rng);
  return g;
}

Gamble strictly_positive_gamble(Rng& rng, Eigen::Index dim) {
  Gamble g(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    g[i] = (pick(rng, 0, 2) == 0) ? Rational(0) : small_positive_rational(rng);
  }
  if (!is_strictly_positive(g)) g[static_cast<Eigen::Index>(rng() % dim)] = 1;
  return g;
}

Gamble nonpositive_gamble(Rng& rng, Eigen::Index dim) {
  Gamble g(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    g[i] = (pick(rng, 0, 2) == 0) ? Rational(0) : -small_positive_rational(rng);
  }
  return g;
}

GambleSet gamble_set(Rng& rng, Eigen::Index dim, int max_size) {
  const int size = static_cast<int>(pick(rng, 1, max_size));
  std::vector<Gamble> members;
  members.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) members.push_back(gamble(rng, dim));
  return GambleSet(dim, std::move(members));
}

Assessment assessment(Rng& rng, Eigen::Index dim, int max_sets, int max_set_size) {
  std::vector<std::string> labels;
  for (Eigen::Index i = 0; i < dim; ++i) labels.push_back("x" + std::to_string(i + 1));
  const int count = static_cast<int>(pick(rng, 0, max_sets));
  std::vector<GambleSet> sets;
  for (int i = 0; i < count; ++i) sets.push_back(gamble_set(rng, dim, max_set_size));
  return Assessment(PossibilitySpace(std::move(labels)), std::move(sets));
}

Assessment consistent_assessment(Rng& rng, Eigen::Index dim, int max_sets,
                                 int max_set_size, const EngineOptions& opts) {
  for (;;) {
    Assessment a = assessment(rng, dim, max_sets, max_set_size);
    if (consistent(a, opts).answer) return a;
  }
}

DesirGenerators coherent_generators(Rng& rng, Eigen::Index dim, int max_generators) {
  for (;;) {
    const int count = static_cast<int>(pick(rng, 0, max_generators));
    std::vector<Gamble> gens;
    for (int i = 0; i < count; ++i) gens.push_back(gamble(rng, dim));
    DesirGenerators dg(dim, std::move(gens));
    if (is_coherent(dg)) return dg;
  }
}

std::pair<Rational, Rational> positive_pair(Rng& rng) {
  switch (pick(rng, 0, 5)) {
    case 0: return {Rational(0), small_positive_rational(rng)};
    case 1: return {small_positive_rational(rng), Rational(0)};
    default: return {small_positive_rational(rng), small_positive_rational(rng)};
  }
}

ratlp::LinearProgram linear_program(Rng& rng) {
  const Eigen::Index vars = pick(rng, 1, 3);
  ratlp::LinearProgram lp;
  lp.num_vars = vars;
  for (Eigen::Index j = 0; j < vars; ++j) lp.nonneg.push_back(pick(rng, 0, 1) == 1);
  const int rows = static_cast<int>(pick(rng, 1, 4));
  for (int i = 0; i < rows; ++i) {
    RatVec coeffs(vars);
    for (Eigen::Index j = 0; j < vars; ++j) coeffs[j] = small_rational(rng);
    const auto rel = static_cast<ratlp::Relation>(pick(rng, 0, 2));
    lp.add(std::move(coeffs), rel, small_rational(rng));
  }
  if (pick(rng, 0, 9) < 7) {
    RatVec obj(vars);
    for (Eigen::Index j = 0; j < vars; ++j) obj[j] = small_rational(rng);
    lp.objective = std::move(obj);
  }
  return lp;
}

}  // namespace testgen
}  // namespace natex
