#include "natex/selftest.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "natex/certificates.hpp"
#include "natex/desirability.hpp"
#include "natex/io.hpp"
#include "natex/ratlp.hpp"
#include "natex/testgen.hpp"

namespace natex {
namespace selftest {

namespace {

using testgen::Rng;

Rational R(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Gamble gm(std::vector<Rational> vals) {
  Gamble g(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) g[static_cast<Eigen::Index>(i)] = vals[i];
  return g;
}

GambleSet gs(Eigen::Index dim, std::vector<Gamble> members) {
  return GambleSet(dim, std::move(members));
}

Assessment asmt(Eigen::Index dim, std::vector<GambleSet> sets) {
  std::vector<std::string> labels;
  for (Eigen::Index i = 0; i < dim; ++i) labels.push_back("x" + std::to_string(i + 1));
  return Assessment(PossibilitySpace(std::move(labels)), std::move(sets));
}

Rng salted(std::uint64_t seed, std::uint64_t salt, std::uint64_t index) {
  return Rng(seed ^ (salt * 0x9E3779B97F4A7C15ull + index + 1));
}

struct Harness {
  explicit Harness(std::string name) { result.name = std::move(name); }

  void check(const std::string& what, const std::function<bool()>& fn) {
    ++result.cases;
    try {
      if (!fn()) result.fail(what);
    } catch (const std::exception& e) {
      result.fail(what + " raised: " + e.what());
    }
  }

  SuiteResult result;
};

// Verifies a verdict's evidence and feeds the tallies.
void tally(const Assessment& a, const std::optional<GambleSet>& b, const Verdict& v,
           CertificateStats* stats, SuiteResult& suite, const std::string& what) {
  if (!stats) return;
  const VerifyResult r = verify_verdict(a, b, v);
  if (v.answer) {
    ++stats->positive_checked;
    if (!r.ok) {
      ++stats->positive_failed;
      suite.fail(what + ": positive evidence rejected: " + r.reason);
    }
  } else {
    ++stats->negative_checked;
    if (!r.ok) {
      ++stats->negative_failed;
      suite.fail(what + ": negative evidence rejected: " + r.reason);
    }
  }
}

}  // namespace

SuiteResult micro_corpus(const EngineOptions& opts) {
  Harness h("micro-corpus");
  const Gamble zero2 = gm({R(0), R(0)});

  // --- gamble predicates and set operations ---
  h.check("strictly positive accepts (1,0)",
          [&] { return is_strictly_positive(gm({R(1), R(0)})); });
  h.check("strictly positive rejects the zero gamble",
          [&] { return !is_strictly_positive(zero2); });
  h.check("strictly positive rejects (1,-1/2)",
          [&] { return !is_strictly_positive(gm({R(1), R(-1, 2)})); });
  h.check("nonpositive accepts the zero gamble", [&] { return is_nonpositive(zero2); });
  h.check("nonpositive accepts (-1,-2)",
          [&] { return is_nonpositive(gm({R(-1), R(-2)})); });
  h.check("nonpositive rejects (1,-1)",
          [&] { return !is_nonpositive(gm({R(1), R(-1)})); });
  h.check("strip keeps only (1,-1)", [&] {
    const auto a = gs(2, {gm({R(1), R(-1)}), gm({R(-1), R(0)}), zero2});
    return strip_nonpositive(a) == gs(2, {gm({R(1), R(-1)})});
  });
  h.check("strip of the empty set is empty",
          [&] { return strip_nonpositive(GambleSet(2)) == GambleSet(2); });
  h.check("strip keeps (2,3)", [&] {
    const auto a = gs(2, {gm({R(2), R(3)})});
    return strip_nonpositive(a) == a;
  });
  h.check("shift by zero is the identity", [&] {
    const auto a = gs(2, {gm({R(1), R(1)}), zero2});
    return shift_set(a, zero2) == a;
  });
  h.check("shift by a member recentres the set", [&] {
    const auto a = gs(2, {gm({R(1), R(1)}), zero2});
    return shift_set(a, gm({R(1), R(1)})) == gs(2, {zero2, gm({R(-1), R(-1)})});
  });
  h.check("shift of a singleton by itself is {0}", [&] {
    return shift_set(gs(2, {gm({R(2), R(0)})}), gm({R(2), R(0)})) == gs(2, {zero2});
  });
  h.check("rational round-trip 3/4", [&] {
    return to_string(parse_rational("3/4")) == "3/4";
  });
  h.check("rational round-trip -2", [&] {
    return to_string(parse_rational("-2")) == "-2";
  });
  h.check("rational 1/0 is rejected", [&] {
    try {
      parse_rational("1/0");
    } catch (const ParseError&) {
      return true;
    }
    return false;
  });

  // --- exact LP ---
  h.check("lp: bounded maximum is 1", [&] {
    auto lp = ratlp::LinearProgram::maximize(gm({R(1)}));
    lp.add(gm({R(1)}), ratlp::Relation::LessEq, R(1));
    const auto out = ratlp::solve(lp);
    return out.status == ratlp::LPStatus::Optimal && cmp(*out.value, R(1)) == 0;
  });
  h.check("lp: -x >= 1 with x >= 0 is infeasible", [&] {
    auto lp = ratlp::LinearProgram::feasibility(1);
    lp.add(gm({R(-1)}), ratlp::Relation::GreaterEq, R(1));
    return ratlp::solve(lp).status == ratlp::LPStatus::Infeasible;
  });
  h.check("lp: equal opposite rows leave the diagonal unbounded", [&] {
    auto lp = ratlp::LinearProgram::maximize(gm({R(1), R(1)}));
    lp.add(gm({R(1), R(-1)}), ratlp::Relation::LessEq, R(0));
    lp.add(gm({R(-1), R(1)}), ratlp::Relation::LessEq, R(0));
    const auto out = ratlp::solve(lp);
    return out.status == ratlp::LPStatus::Unbounded && out.point &&
           ratlp::satisfies(lp, *out.point) && sgn((*out.point)[0] + (*out.point)[1]) > 0;
  });

  // --- desirability cone ---
  const DesirGenerators none2(2);
  const DesirGenerators one_one(2, {gm({R(1), R(-1)})});
  h.check("cone: (1,0) with no generators", [&] { return cone_contains(none2, gm({R(1), R(0)})); });
  h.check("cone: (2,-1) from generator (1,-1)",
          [&] { return cone_contains(one_one, gm({R(2), R(-1)})); });
  h.check("cone: (1,-2) stays outside",
          [&] { return !cone_contains(one_one, gm({R(1), R(-2)})); });
  h.check("coherence of the bare positive cone", [&] { return is_coherent(none2); });
  h.check("(-1,-1) generator is incoherent",
          [&] { return !is_coherent(DesirGenerators(2, {gm({R(-1), R(-1)})})); });
  h.check("opposite generators are incoherent", [&] {
    return !is_coherent(DesirGenerators(2, {gm({R(1), R(-1)}), gm({R(-1), R(1)})}));
  });
  h.check("binary model accepts {(-1,1),(2,-1)}", [&] {
    return kd_contains(one_one, gs(2, {gm({R(-1), R(1)}), gm({R(2), R(-1)})}));
  });
  h.check("binary model rejects the empty set", [&] { return !kd_contains(none2, GambleSet(2)); });
  h.check("binary model rejects {(-1,1)}", [&] {
    return !kd_contains(one_one, gs(2, {gm({R(-1), R(1)})}));
  });

  // --- consistency and natural extension ---
  const auto two_sided = asmt(2, {gs(2, {gm({R(1), R(-1)}), gm({R(-1), R(1)})})});
  const auto empty_a = asmt(2, {});
  h.check("empty assessment is consistent", [&] {
    const auto v = consistent(empty_a, opts);
    return v.answer && verify_verdict(empty_a, std::nullopt, v).ok;
  });
  h.check("an empty member set is inconsistent", [&] {
    const auto bad = asmt(2, {GambleSet(2)});
    const auto v = consistent(bad, opts);
    return !v.answer && std::holds_alternative<EmptySetInAssessment>(v.evidence);
  });
  h.check("two-sided assessment is consistent", [&] {
    const auto v = consistent(two_sided, opts);
    return v.answer && verify_verdict(two_sided, std::nullopt, v).ok;
  });
  h.check("all-nonpositive options are inconsistent, with certificate", [&] {
    const auto bad = asmt(2, {gs(2, {gm({R(-1), R(-1)}), gm({R(-2), R(0)})})});
    const auto v = consistent(bad, opts);
    if (v.answer || !std::holds_alternative<PosiCertificate>(v.evidence)) return false;
    return verify_inconsistency_certificate(bad, std::get<PosiCertificate>(v.evidence)).ok;
  });
  h.check("assessment sets belong to their own extension", [&] {
    const auto v = natex_contains(two_sided, two_sided[0], opts);
    return v.answer && verify_verdict(two_sided, two_sided[0], v).ok;
  });
  h.check("one-sided query is refused with a witness", [&] {
    const auto b = gs(2, {gm({R(1), R(-1)})});
    const auto v = natex_contains(two_sided, b, opts);
    if (v.answer || !std::holds_alternative<BinaryWitness>(v.evidence)) return false;
    const auto& w = std::get<BinaryWitness>(v.evidence);
    const auto picked = two_sided[0][w.selection.picks.at(0)];
    return lex_compare(picked, gm({R(-1), R(1)})) == 0 &&
           verify_binary_witness(two_sided, b, w).ok;
  });
  h.check("the empty set is never accepted", [&] {
    return !natex_contains(two_sided, GambleSet(2), opts).answer;
  });
  h.check("the zero singleton is never accepted", [&] {
    return !natex_contains(two_sided, gs(2, {zero2}), opts).answer;
  });

  // --- rejection and choice ---
  const auto options3 = gs(2, {zero2, gm({R(1), R(1)}), gm({R(-1), R(-1)})});
  h.check("(-1,-1) is rejected from the three-option set", [&] {
    return reject(empty_a, options3, gm({R(-1), R(-1)}), opts).answer;
  });
  h.check("(1,1) is not rejected from the three-option set", [&] {
    return !reject(empty_a, options3, gm({R(1), R(1)}), opts).answer;
  });
  h.check("a lone option is never rejected", [&] {
    const auto o = gs(2, {gm({R(1), R(1)})});
    return !reject(empty_a, o, gm({R(1), R(1)}), opts).answer;
  });
  h.check("vacuous choice keeps only (1,1)", [&] {
    const auto part = choose(empty_a, options3, opts);
    return part.chosen == gs(2, {gm({R(1), R(1)})}) &&
           part.rejected == gs(2, {zero2, gm({R(-1), R(-1)})});
  });
  h.check("choice over the empty option set is empty", [&] {
    const auto part = choose(empty_a, GambleSet(2), opts);
    return part.chosen.empty() && part.rejected.empty();
  });
  h.check("two-sided assessment rejects only the status quo", [&] {
    const auto o = gs(2, {zero2, gm({R(1), R(-1)}), gm({R(-1), R(1)})});
    const auto part = choose(two_sided, o, opts);
    return part.chosen == gs(2, {gm({R(1), R(-1)}), gm({R(-1), R(1)})}) &&
           part.rejected == gs(2, {zero2});
  });
  h.check("positive singleton is desirable under no information", [&] {
    return singleton_desirable(empty_a, gm({R(1), R(0)}), opts);
  });
  h.check("(1,-1) alone is not desirable under the two-sided assessment", [&] {
    return !singleton_desirable(two_sided, gm({R(1), R(-1)}), opts);
  });
  h.check("the zero gamble is never desirable", [&] {
    return !singleton_desirable(empty_a, zero2, opts);
  });

  // --- binarity evidence ---
  h.check("two-sided assessment is non-binary at its own set", [&] {
    const auto report = binarity_evidence(two_sided, two_sided[0], opts);
    return report.kind == BinarityCase::NonBinary &&
           report.singleton_refutations.size() == 2;
  });
  h.check("a positive member explains acceptance", [&] {
    const auto b = gs(2, {gm({R(1), R(0)}), gm({R(-1), R(-1)})});
    const auto report = binarity_evidence(empty_a, b, opts);
    return report.kind == BinarityCase::BinaryWitnessed && report.witness &&
           lex_compare(*report.witness, gm({R(1), R(0)})) == 0;
  });
  h.check("a nonpositive singleton is not even a member", [&] {
    const auto report = binarity_evidence(empty_a, gs(2, {gm({R(-1), R(-1)})}), opts);
    return report.kind == BinarityCase::NotMember;
  });

  // --- combination certificates ---
  h.check("identity coefficients reproduce the base set", [&] {
    PosiCertificate cert;
    cert.bases.push_back(CertificateBase{BaseTag::Assessment, two_sided[0]});
    cert.coeffs.push_back(CoeffEntry{{0}, gm({R(1)})});
    cert.coeffs.push_back(CoeffEntry{{1}, gm({R(1)})});
    return produced_set(cert) == two_sided[0];
  });
  h.check("mixed two-base combination", [&] {
    PosiCertificate cert;
    cert.bases.push_back(CertificateBase{BaseTag::Assessment, two_sided[0]});
    cert.bases.push_back(
        CertificateBase{BaseTag::PositiveSingleton, gs(2, {gm({R(0), R(1)})})});
    // canonical member order of the first base is [(-1,1), (1,-1)]
    cert.coeffs.push_back(CoeffEntry{{0, 0}, gm({R(1), R(0)})});
    cert.coeffs.push_back(CoeffEntry{{1, 0}, gm({R(1), R(1)})});
    return produced_set(cert) == gs(2, {gm({R(1), R(0)}), gm({R(-1), R(1)})});
  });
  h.check("scaling a singleton base", [&] {
    PosiCertificate cert;
    cert.bases.push_back(CertificateBase{BaseTag::Assessment, gs(2, {gm({R(2), R(0)})})});
    cert.coeffs.push_back(CoeffEntry{{0}, gm({R(1, 2)})});
    return produced_set(cert) == gs(2, {gm({R(1), R(0)})});
  });
  h.check("strip-cover accepts once nonpositives are gone", [&] {
    return rs_step(gs(2, {gm({R(1), R(0)}), gm({R(-1), R(-1)})}), gs(2, {gm({R(1), R(0)})}));
  });
  h.check("strip-cover allows supersets", [&] {
    return rs_step(gs(2, {gm({R(1), R(0)})}), gs(2, {gm({R(1), R(0)}), gm({R(5), R(5)})}));
  });
  h.check("strip-cover demands full coverage", [&] {
    return !rs_step(gs(2, {gm({R(1), R(0)}), gm({R(0), R(1)})}), gs(2, {gm({R(1), R(0)})}));
  });
  h.check("identity certificate verifies against its assessment", [&] {
    PosiCertificate cert;
    cert.bases.push_back(CertificateBase{BaseTag::Assessment, two_sided[0]});
    cert.coeffs.push_back(CoeffEntry{{0}, gm({R(1)})});
    cert.coeffs.push_back(CoeffEntry{{1}, gm({R(1)})});
    return verify_membership_certificate(two_sided, two_sided[0], cert).ok;
  });
  h.check("zero coefficient vector is refused", [&] {
    PosiCertificate cert;
    cert.bases.push_back(CertificateBase{BaseTag::Assessment, two_sided[0]});
    cert.coeffs.push_back(CoeffEntry{{0}, gm({R(0)})});
    cert.coeffs.push_back(CoeffEntry{{1}, gm({R(1)})});
    const auto r = verify_membership_certificate(two_sided, two_sided[0], cert);
    return !r.ok && r.reason == "coefficient sum not positive";
  });
  h.check("escaping positive part is refused", [&] {
    PosiCertificate cert;
    cert.bases.push_back(CertificateBase{BaseTag::Assessment, two_sided[0]});
    cert.coeffs.push_back(CoeffEntry{{0}, gm({R(1)})});
    cert.coeffs.push_back(CoeffEntry{{1}, gm({R(1)})});
    const auto r =
        verify_membership_certificate(two_sided, gs(2, {gm({R(1), R(-1)})}), cert);
    return !r.ok && r.reason == "rs_step failed";
  });
  h.check("hand evidence assembles to a verifying certificate", [&] {
    const auto a = asmt(2, {gs(2, {gm({R(2), R(-1)})})});
    const auto b = gs(2, {gm({R(1), R(0)})});
    SelectionEvidence ev;
    ev.picks = {0};
    ev.coherent = true;
    ev.coeffs = gm({R(1, 2)});
    ev.member = gm({R(1), R(0)});
    const auto cert = build_membership_certificate(a, {ev});
    return verify_membership_certificate(a, b, cert).ok &&
           produced_set(cert) == b;
  });
  h.check("engine certificate for the empty assessment", [&] {
    const auto b = gs(2, {gm({R(1), R(0)})});
    const auto v = natex_contains(empty_a, b, opts);
    return v.answer && verify_verdict(empty_a, b, v).ok;
  });
  h.check("superset closure finds a contained base", [&] {
    return su_member({gs(2, {gm({R(1), R(0)})})},
                     gs(2, {gm({R(1), R(0)}), gm({R(5), R(5)})}));
  });
  h.check("superset closure needs the whole base", [&] {
    return !su_member({gs(2, {gm({R(1), R(0)}), gm({R(0), R(1)})})},
                      gs(2, {gm({R(1), R(0)})}));
  });
  h.check("superset closure over no bases is empty", [&] {
    return !su_member({}, GambleSet(2));
  });
  h.check("nonpositive-removal closure accepts trimmed sets", [&] {
    return rn_member({gs(2, {gm({R(1), R(0)}), gm({R(-1), R(-1)})})},
                     gs(2, {gm({R(1), R(0)})}));
  });
  h.check("nonpositive-removal closure refuses foreign members", [&] {
    return !rn_member({gs(2, {gm({R(1), R(0)}), gm({R(-1), R(-1)})})},
                      gs(2, {gm({R(1), R(0)}), gm({R(5), R(5)})}));
  });
  h.check("nonpositive-removal closure keeps identity", [&] {
    return rn_member({gs(2, {gm({R(1), R(0)})})}, gs(2, {gm({R(1), R(0)})}));
  });

  // --- serialization ---
  h.check("canonical assessment bytes survive a round trip", [&] {
    const std::string text = io::serialize_assessment(two_sided);
    return io::serialize_assessment(io::parse_assessment(text)) == text;
  });
  h.check("ragged gamble lengths are refused", [&] {
    try {
      io::parse_assessment(R"({"space":["a","b"],"assessment":[[["1","2"],["1"]]]})");
    } catch (const DimensionError&) {
      return true;
    }
    return false;
  });
  h.check("duplicate state labels are refused", [&] {
    try {
      io::parse_assessment(R"({"space":["a","a"],"assessment":[]})");
    } catch (const ParseError&) {
      return true;
    }
    return false;
  });

  return h.result;
}

SuiteResult axiom_suite(std::uint64_t seed, int num_assessments,
                        const EngineOptions& opts, CertificateStats* stats,
                        std::ostream* fingerprint) {
  SuiteResult suite;
  suite.name = "axiom-suite";
  for (int i = 0; i < num_assessments; ++i) {
    Rng rng = salted(seed, 1, static_cast<std::uint64_t>(i));
    const Eigen::Index dim = 2 + (i % 3);
    const Assessment a = testgen::consistent_assessment(rng, dim, 3, 3, opts);
    Engine engine(a, opts);
    const std::string tag = "assessment #" + std::to_string(i);

    const auto record = [&](const std::optional<GambleSet>& b, const Verdict& v,
                            const std::string& what) {
      tally(a, b, v, stats, suite, tag + " " + what);
      if (fingerprint) *fingerprint << io::to_json(v, a).dump() << "\n";
    };

    // Known members of the extension: the assessment's own sets plus a
    // strictly positive singleton.
    std::vector<GambleSet> pool(a.sets().begin(), a.sets().end());
    pool.push_back(GambleSet(dim, {testgen::strictly_positive_gamble(rng, dim)}));

    ++suite.cases;
    {
      const Verdict v = engine.natex_contains(GambleSet(dim));
      record(GambleSet(dim), v, "empty set");
      if (v.answer) suite.fail(tag + ": empty set accepted");
    }

    for (const auto& q : a.sets()) {
      ++suite.cases;
      const Verdict v = engine.natex_contains(q);
      record(q, v, "inclusion");
      if (!v.answer) suite.fail(tag + ": assessment set not included");
    }

    ++suite.cases;
    {
      const Gamble u = testgen::strictly_positive_gamble(rng, dim);
      const GambleSet b(dim, {u});
      const Verdict v = engine.natex_contains(b);
      record(b, v, "positive singleton");
      if (!v.answer) suite.fail(tag + ": positive singleton rejected");
    }

    ++suite.cases;
    {
      const auto& b0 = pool[static_cast<std::size_t>(rng() % pool.size())];
      const GambleSet b = b0.with(zero_gamble(dim));
      const Verdict v = engine.natex_contains(b);
      record(b, v, "zero insertion");
      const GambleSet trimmed = b.without(zero_gamble(dim));
      const Verdict v2 = engine.natex_contains(trimmed);
      record(trimmed, v2, "zero removal");
      if (v.answer && !v2.answer) suite.fail(tag + ": zero removal broke acceptance");
      if (!v.answer) suite.fail(tag + ": known member with zero rejected");
    }

    ++suite.cases;
    {
      const auto& b1 = pool[static_cast<std::size_t>(rng() % pool.size())];
      const auto& b2 = pool[static_cast<std::size_t>(rng() % pool.size())];
      std::vector<Gamble> combo;
      for (const auto& u : b1.members()) {
        for (const auto& v : b2.members()) {
          const auto [lam, mu] = testgen::positive_pair(rng);
          combo.push_back(lam * u + mu * v);
        }
      }
      const GambleSet b(dim, std::move(combo));
      const Verdict v = engine.natex_contains(b);
      record(b, v, "pairwise combinations");
      if (!v.answer) suite.fail(tag + ": pairwise combination set rejected");
    }

    ++suite.cases;
    {
      auto base = pool[static_cast<std::size_t>(rng() % pool.size())];
      GambleSet b = base;
      const int extras = static_cast<int>(testgen::pick(rng, 0, 2));
      for (int e = 0; e < extras; ++e) b = b.with(testgen::gamble(rng, dim));
      const Verdict v = engine.natex_contains(b);
      record(b, v, "superset monotonicity");
      if (!v.answer) suite.fail(tag + ": superset of a member rejected");
    }

    // Unconstrained queries to exercise negative verdicts and their
    // witnesses as well.
    for (int q = 0; q < 2; ++q) {
      ++suite.cases;
      const GambleSet b = testgen::gamble_set(rng, dim, 3);
      const Verdict v = engine.natex_contains(b);
      record(b, v, "free query");
    }
  }
  return suite;
}

SuiteResult binary_collapse_suite(std::uint64_t seed, int num_generator_lists,
                                  int queries_each, const EngineOptions& opts,
                                  CertificateStats* stats) {
  SuiteResult suite;
  suite.name = "binary-collapse";
  for (int i = 0; i < num_generator_lists; ++i) {
    Rng rng = salted(seed, 2, static_cast<std::uint64_t>(i));
    const Eigen::Index dim = 2 + (i % 3);
    const DesirGenerators gens = testgen::coherent_generators(rng, dim, 3);
    std::vector<GambleSet> singletons;
    singletons.reserve(gens.size());
    for (const auto& g : gens.generators()) singletons.push_back(GambleSet(dim, {g}));
    std::vector<std::string> labels;
    for (Eigen::Index s = 0; s < dim; ++s) labels.push_back("x" + std::to_string(s + 1));
    const Assessment a(PossibilitySpace(std::move(labels)), std::move(singletons));
    Engine engine(a, opts);
    const std::string tag = "generator list #" + std::to_string(i);

    for (int q = 0; q < queries_each; ++q) {
      ++suite.cases;
      const GambleSet b = (q == 0) ? GambleSet(dim) : testgen::gamble_set(rng, dim, 3);
      const Verdict v = engine.natex_contains(b);
      tally(a, b, v, stats, suite, tag);
      if (v.answer != kd_contains(gens, b)) {
        suite.fail(tag + " query #" + std::to_string(q) +
                   ": selection engine disagrees with the binary model");
      }
    }
  }
  return suite;
}

SuiteResult operator_identity_suite(std::uint64_t seed, int cases) {
  SuiteResult suite;
  suite.name = "operator-identity";
  for (int i = 0; i < cases; ++i) {
    Rng rng = salted(seed, 3, static_cast<std::uint64_t>(i));
    const Eigen::Index dim = 2 + (i % 3);

    const auto noisy_set = [&] {
      auto s = testgen::gamble_set(rng, dim, 3);
      if (testgen::pick(rng, 0, 1) == 0) s = s.with(testgen::nonpositive_gamble(rng, dim));
      return s;
    };

    std::vector<GambleSet> bases;
    const int n = static_cast<int>(testgen::pick(rng, 1, 3));
    for (int k = 0; k < n; ++k) bases.push_back(noisy_set());
    const GambleSet b = noisy_set();

    const bool direct = std::any_of(bases.begin(), bases.end(), [&](const GambleSet& q) {
      return rs_step(q, b);
    });

    // Finite stand-in for the superset closure: the bases themselves, their
    // unions with the query, and a couple of sampled supersets.
    std::vector<GambleSet> widened = bases;
    for (const auto& q : bases) {
      widened.push_back(set_union(q, b));
      auto grown = q;
      const int extras = static_cast<int>(testgen::pick(rng, 0, 2));
      for (int e = 0; e < extras; ++e) grown = grown.with(testgen::gamble(rng, dim));
      widened.push_back(grown);
    }
    const bool staged = rn_member(widened, b);

    ++suite.cases;
    if (direct != staged) {
      suite.fail("case #" + std::to_string(i) +
                 ": strip-cover and staged closure disagree");
    }
  }
  return suite;
}

SuiteResult dominating_replacement_suite(std::uint64_t seed, int cases,
                                         const EngineOptions& opts) {
  SuiteResult suite;
  suite.name = "dominating-replacement";
  for (int i = 0; i < cases; ++i) {
    Rng rng = salted(seed, 4, static_cast<std::uint64_t>(i));
    const Eigen::Index dim = 2 + (i % 3);
    const Assessment a = testgen::consistent_assessment(rng, dim, 2, 3, opts);
    Engine engine(a, opts);

    GambleSet b = a.size() > 0 ? a[static_cast<std::size_t>(rng() % a.size())]
                               : GambleSet(dim, {testgen::strictly_positive_gamble(rng, dim)});
    const int extras = static_cast<int>(testgen::pick(rng, 0, 2));
    for (int e = 0; e < extras; ++e) b = b.with(testgen::gamble(rng, dim));

    ++suite.cases;
    if (!engine.natex_contains(b).answer) {
      suite.fail("case #" + std::to_string(i) + ": baseline member rejected");
      continue;
    }
    const Gamble& v = b[static_cast<std::size_t>(rng() % b.size())];
    Gamble lift(dim);
    for (Eigen::Index x = 0; x < dim; ++x) {
      lift[x] = (testgen::pick(rng, 0, 2) == 0) ? Rational(0)
                                                : testgen::small_positive_rational(rng);
    }
    const Gamble dominating = v + lift;
    const GambleSet replaced = b.without(v).with(dominating);
    if (!engine.natex_contains(replaced).answer) {
      suite.fail("case #" + std::to_string(i) + ": dominating replacement rejected");
    }
  }
  return suite;
}

SuiteResult strip_stability_suite(std::uint64_t seed, int cases,
                                  const EngineOptions& opts) {
  SuiteResult suite;
  suite.name = "strip-stability";
  for (int i = 0; i < cases; ++i) {
    Rng rng = salted(seed, 5, static_cast<std::uint64_t>(i));
    const Eigen::Index dim = 2 + (i % 3);
    const Assessment a = testgen::consistent_assessment(rng, dim, 2, 3, opts);
    Engine engine(a, opts);

    GambleSet b = testgen::gamble_set(rng, dim, 3);
    b = b.with(testgen::nonpositive_gamble(rng, dim));
    if (a.size() > 0 && testgen::pick(rng, 0, 1) == 0) {
      b = set_union(b, a[static_cast<std::size_t>(rng() % a.size())]);
    }

    ++suite.cases;
    const bool whole = engine.natex_contains(b).answer;
    const bool trimmed = engine.natex_contains(strip_nonpositive(b)).answer;
    if (whole != trimmed) {
      suite.fail("case #" + std::to_string(i) +
                 ": membership changed when nonpositive options were removed");
    }
  }
  return suite;
}

SuiteResult monotone_inference_suite(std::uint64_t seed, int cases,
                                     const EngineOptions& opts) {
  SuiteResult suite;
  suite.name = "monotone-inference";
  for (int i = 0; i < cases; ++i) {
    Rng rng = salted(seed, 6, static_cast<std::uint64_t>(i));
    const Eigen::Index dim = 2 + (i % 3);
    const Assessment a = testgen::consistent_assessment(rng, dim, 2, 3, opts);

    // Grow the assessment by one set, keeping it consistent.
    Assessment grown = a;
    bool found = false;
    for (int attempt = 0; attempt < 64 && !found; ++attempt) {
      auto sets = a.sets();
      sets.push_back(testgen::gamble_set(rng, dim, 3));
      Assessment candidate(a.space(), std::move(sets));
      if (consistent(candidate, opts).answer) {
        grown = std::move(candidate);
        found = true;
      }
    }
    ++suite.cases;
    if (!found) continue;  // nothing to compare against; vacuous case

    Engine small(a, opts), large(grown, opts);
    for (int q = 0; q < 3; ++q) {
      GambleSet b = testgen::gamble_set(rng, dim, 3);
      if (q == 0 && a.size() > 0) b = a[0];
      if (small.natex_contains(b).answer && !large.natex_contains(b).answer) {
        suite.fail("case #" + std::to_string(i) +
                   ": acceptance lost after adding information");
        break;
      }
    }
  }
  return suite;
}

SuiteResult lp_soundness_suite(std::uint64_t seed, int cases) {
  SuiteResult suite;
  suite.name = "lp-soundness";
  for (int i = 0; i < cases; ++i) {
    Rng rng = salted(seed, 7, static_cast<std::uint64_t>(i));
    const auto lp = testgen::linear_program(rng);
    ++suite.cases;
    try {
      const auto out = ratlp::solve(lp);
      const auto out2 = ratlp::solve(lp);
      if (out.status != out2.status) {
        suite.fail("case #" + std::to_string(i) + ": repeat solve changed status");
        continue;
      }
      if (out.point.has_value() != out2.point.has_value() ||
          (out.point && lex_compare(*out.point, *out2.point) != 0)) {
        suite.fail("case #" + std::to_string(i) + ": repeat solve changed the point");
        continue;
      }
      if (out.status == ratlp::LPStatus::Infeasible) {
        if (out.point) suite.fail("case #" + std::to_string(i) + ": infeasible with point");
        continue;
      }
      if (!out.point || !ratlp::satisfies(lp, *out.point)) {
        suite.fail("case #" + std::to_string(i) + ": returned point fails substitution");
        continue;
      }
      if (out.status == ratlp::LPStatus::Optimal) {
        if (!out.value || cmp(*out.value, lp.objective->dot(*out.point)) != 0) {
          suite.fail("case #" + std::to_string(i) + ": objective value mismatch");
        }
      }
    } catch (const std::exception& e) {
      suite.fail("case #" + std::to_string(i) + " raised: " + e.what());
    }
  }
  return suite;
}

std::string axiom_corpus_fingerprint(std::uint64_t seed, int num_assessments,
                                     const EngineOptions& opts) {
  std::ostringstream out;
  axiom_suite(seed, num_assessments, opts, nullptr, &out);
  return out.str();
}

int run(std::ostream& out, const SelftestOptions& opts) {
  out << "natex selftest (seed " << opts.seed << ")\n";
  CertificateStats stats;
  std::vector<SuiteResult> results;
  results.push_back(micro_corpus(opts.engine));
  results.push_back(axiom_suite(opts.seed, opts.axiom_assessments, opts.engine, &stats));
  results.push_back(binary_collapse_suite(opts.seed, opts.collapse_lists,
                                          opts.collapse_queries, opts.engine, &stats));
  results.push_back(operator_identity_suite(opts.seed, opts.operator_cases));
  results.push_back(dominating_replacement_suite(opts.seed, opts.stability_cases, opts.engine));
  results.push_back(strip_stability_suite(opts.seed, opts.stability_cases, opts.engine));
  results.push_back(monotone_inference_suite(opts.seed, opts.stability_cases, opts.engine));
  results.push_back(lp_soundness_suite(opts.seed, opts.lp_cases));

  SuiteResult certs;
  certs.name = "certificate-soundness";
  certs.cases = stats.positive_checked + stats.negative_checked;
  certs.failures = stats.positive_failed + stats.negative_failed;
  if (certs.failures > 0) certs.first_failure = "evidence object failed its checker";
  results.push_back(certs);

  std::uint64_t failed_suites = 0;
  for (const auto& r : results) {
    if (r.failures == 0) {
      out << "ok " << r.name << " (" << r.cases << " cases)\n";
    } else {
      ++failed_suites;
      out << "FAIL " << r.name << " (" << r.failures << " of " << r.cases
          << " cases failed; first: " << r.first_failure << ")\n";
    }
  }
  out << "selftest: " << (results.size() - failed_suites) << "/" << results.size()
      << " suites passed\n";
  return failed_suites == 0 ? 0 : 1;
}

}  // namespace selftest
}  // namespace natex
