#include <doctest.h>

#include "natex/choice.hpp"
#include "natex/desirability.hpp"
#include "natex/selftest.hpp"
#include "natex/testgen.hpp"

using namespace natex;

namespace {

Gamble gm(std::vector<Rational> vals) {
  Gamble g(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) g[static_cast<Eigen::Index>(i)] = vals[i];
  return g;
}

Assessment asmt(Eigen::Index dim, std::vector<GambleSet> sets) {
  std::vector<std::string> labels;
  for (Eigen::Index i = 0; i < dim; ++i) labels.push_back("x" + std::to_string(i + 1));
  return Assessment(PossibilitySpace(std::move(labels)), std::move(sets));
}

const Assessment kTwoSided = asmt(2, {GambleSet(2, {gm({1, -1}), gm({-1, 1})})});

}  // namespace

TEST_CASE("consistency verdicts carry checkable evidence") {
  SUBCASE("vacuous assessment") {
    const Verdict v = consistent(asmt(2, {}));
    REQUIRE(v.answer);
    CHECK(std::holds_alternative<Selection>(v.evidence));
  }
  SUBCASE("two-sided assessment") {
    const Verdict v = consistent(kTwoSided);
    REQUIRE(v.answer);
    const auto& s = std::get<Selection>(v.evidence);
    CHECK(verify_coherent_selection(kTwoSided, s).ok);
    // canonical order puts (-1,1) first; it is the first coherent pick
    CHECK(s.picks == std::vector<std::size_t>{0});
  }
  SUBCASE("empty member set") {
    const Verdict v = consistent(asmt(2, {GambleSet(2)}));
    REQUIRE_FALSE(v.answer);
    CHECK(std::holds_alternative<EmptySetInAssessment>(v.evidence));
  }
  SUBCASE("nonpositive options only") {
    const Assessment bad = asmt(2, {GambleSet(2, {gm({-1, -1}), gm({-2, 0})})});
    const Verdict v = consistent(bad);
    REQUIRE_FALSE(v.answer);
    CHECK(verify_verdict(bad, std::nullopt, v).ok);
  }
}

TEST_CASE("membership enumerates every coherent selection") {
  Engine engine(kTwoSided);
  SUBCASE("the assessment's own set is accepted") {
    const Verdict v = engine.natex_contains(kTwoSided[0]);
    CHECK(v.answer);
    CHECK(verify_verdict(kTwoSided, kTwoSided[0], v).ok);
  }
  SUBCASE("a one-sided subset is refused with the opposite witness") {
    const GambleSet b(2, {gm({1, -1})});
    const Verdict v = engine.natex_contains(b);
    REQUIRE_FALSE(v.answer);
    const auto& w = std::get<BinaryWitness>(v.evidence);
    CHECK(verify_binary_witness(kTwoSided, b, w).ok);
    CHECK(w.selection.picks == std::vector<std::size_t>{0});
  }
  SUBCASE("empty and zero queries are refused") {
    CHECK_FALSE(engine.natex_contains(GambleSet(2)).answer);
    CHECK_FALSE(engine.natex_contains(GambleSet(2, {zero_gamble(2)})).answer);
  }
}

TEST_CASE("queries on inconsistent assessments are errors") {
  Engine engine(asmt(2, {GambleSet(2, {gm({-1, -1})})}));
  CHECK_FALSE(engine.consistent().answer);
  CHECK_THROWS_AS(engine.natex_contains(GambleSet(2, {gm({1, 1})})),
                  InconsistentAssessment);
  CHECK_THROWS_AS(engine.choose(GambleSet(2, {gm({1, 1})})), InconsistentAssessment);
  CHECK_THROWS_AS(engine.singleton_desirable(gm({1, 1})), InconsistentAssessment);
}

TEST_CASE("rejection requires the option to be on the table") {
  Engine engine(asmt(2, {}));
  const GambleSet o(2, {gm({0, 0}), gm({1, 1})});
  CHECK_THROWS_AS(engine.reject(o, gm({2, 2})), Error);
  CHECK(engine.reject(o, gm({0, 0})).answer);
}

TEST_CASE("choice partitions the option set") {
  Engine engine(kTwoSided);
  const GambleSet o(2, {gm({0, 0}), gm({1, -1}), gm({-1, 1})});
  const auto part = engine.choose(o);
  CHECK(part.chosen == GambleSet(2, {gm({1, -1}), gm({-1, 1})}));
  CHECK(part.rejected == GambleSet(2, {gm({0, 0})}));
  CHECK(set_union(part.chosen, part.rejected) == o);
  CHECK(part.option_verdicts.size() == o.size());
}

TEST_CASE("binarity evidence distinguishes the three cases") {
  SUBCASE("non-binary at the defining set") {
    const auto report = binarity_evidence(kTwoSided, kTwoSided[0]);
    REQUIRE(report.kind == BinarityCase::NonBinary);
    REQUIRE(report.singleton_refutations.size() == 2);
    for (const auto& [u, v] : report.singleton_refutations) {
      CHECK_FALSE(v.answer);
      CHECK(verify_verdict(kTwoSided, GambleSet(2, {u}), v).ok);
    }
  }
  SUBCASE("witnessed by a positive member") {
    const auto report =
        binarity_evidence(asmt(2, {}), GambleSet(2, {gm({1, 0}), gm({-1, -1})}));
    REQUIRE(report.kind == BinarityCase::BinaryWitnessed);
    CHECK(lex_compare(*report.witness, gm({1, 0})) == 0);
  }
  SUBCASE("not a member at all") {
    const auto report = binarity_evidence(asmt(2, {}), GambleSet(2, {gm({-1, -1})}));
    CHECK(report.kind == BinarityCase::NotMember);
  }
}

TEST_CASE("the selection cap is a hard error") {
  std::vector<GambleSet> sets;
  for (int i = 0; i < 3; ++i) {
    std::vector<Gamble> members;
    for (int j = 0; j < 3; ++j) {
      Gamble g = gm({Rational(i + 1), Rational(j - 5)});
      members.push_back(g);
    }
    sets.push_back(GambleSet(2, std::move(members)));
  }
  Assessment a = asmt(2, sets);
  EngineOptions opts;
  opts.selection_cap = 8;  // 27 selections needed
  Engine engine(a, opts);
  CHECK_THROWS_AS(engine.consistent(), CapExceeded);

  EngineOptions exact;
  exact.selection_cap = 27;  // the boundary itself is allowed
  CHECK(Engine(a, exact).consistent().answer);
  EngineOptions below;
  below.selection_cap = 26;
  CHECK_THROWS_AS(Engine(a, below).consistent(), CapExceeded);
}

TEST_CASE("dimension mismatches are refused") {
  Engine engine(kTwoSided);
  CHECK_THROWS_AS(engine.natex_contains(GambleSet(3, {gm({1, 1, 1})})), DimensionError);
  CHECK_THROWS_AS(engine.singleton_verdict(gm({1})), DimensionError);
}

TEST_CASE("assessments of singletons collapse to the binary model") {
  testgen::Rng rng(55);
  for (int i = 0; i < 25; ++i) {
    const Eigen::Index dim = 2 + (i % 3);
    const DesirGenerators gens = testgen::coherent_generators(rng, dim, 3);
    std::vector<GambleSet> singles;
    for (const auto& g : gens.generators()) singles.push_back(GambleSet(dim, {g}));
    const Assessment a = asmt(dim, std::move(singles));
    Engine engine(a);
    for (int q = 0; q < 6; ++q) {
      const GambleSet b = testgen::gamble_set(rng, dim, 3);
      CHECK(engine.natex_contains(b).answer == kd_contains(gens, b));
    }
  }
}

TEST_CASE("parallel evaluation returns the sequential verdicts") {
  EngineOptions sequential;
  EngineOptions parallel;
  parallel.threads = 4;
  const auto base = selftest::axiom_corpus_fingerprint(1234, 12, sequential);
  const auto with_threads = selftest::axiom_corpus_fingerprint(1234, 12, parallel);
  CHECK(base == with_threads);
  CHECK_FALSE(base.empty());
}

TEST_CASE("verdict evidence is always present and typed") {
  testgen::Rng rng(99);
  for (int i = 0; i < 20; ++i) {
    const Eigen::Index dim = 2 + (i % 3);
    const Assessment a = testgen::consistent_assessment(rng, dim, 2, 3);
    Engine engine(a);
    const GambleSet b = testgen::gamble_set(rng, dim, 3);
    const Verdict v = engine.natex_contains(b);
    if (v.answer) {
      CHECK(std::holds_alternative<PosiCertificate>(v.evidence));
    } else {
      CHECK(std::holds_alternative<BinaryWitness>(v.evidence));
    }
  }
}
