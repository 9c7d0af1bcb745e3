#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "natex/choice.hpp"

namespace natex {
namespace selftest {

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    ++failures;
    if (first_failure.empty()) first_failure = what;
  }
};

// Evidence re-checking tallies accumulated while suites run; feeds the
// certificate-soundness line.
struct CertificateStats {
  std::uint64_t positive_checked = 0;
  std::uint64_t positive_failed = 0;
  std::uint64_t negative_checked = 0;
  std::uint64_t negative_failed = 0;
};

/// Hand-derived cases for every operation, exact expected values.
SuiteResult micro_corpus(const EngineOptions& opts = {});

/// Random consistent assessments; checks the rationality axioms of the
/// natural extension (empty set rejected, zero removal, positive
/// singletons, pairwise combinations, superset monotonicity, inclusion of
/// the assessment itself). When `fingerprint` is given, every verdict is
/// also serialized to it in query order.
SuiteResult axiom_suite(std::uint64_t seed, int num_assessments,
                        const EngineOptions& opts, CertificateStats* stats = nullptr,
                        std::ostream* fingerprint = nullptr);

/// Assessments made of singletons only must agree exactly with the binary
/// choice model of their generators.
SuiteResult binary_collapse_suite(std::uint64_t seed, int num_generator_lists,
                                  int queries_each, const EngineOptions& opts,
                                  CertificateStats* stats = nullptr);

/// The strip-then-cover check equals superset closure followed by
/// nonpositive-removal closure on finite stand-ins.
SuiteResult operator_identity_suite(std::uint64_t seed, int cases);

SuiteResult dominating_replacement_suite(std::uint64_t seed, int cases,
                                         const EngineOptions& opts);
SuiteResult strip_stability_suite(std::uint64_t seed, int cases,
                                  const EngineOptions& opts);
SuiteResult monotone_inference_suite(std::uint64_t seed, int cases,
                                     const EngineOptions& opts);

/// Solver self-checks: exact substitution of returned points, objective
/// value agreement, repeat-solve determinism.
SuiteResult lp_soundness_suite(std::uint64_t seed, int cases);

/// Canonical serialization of every verdict the axiom suite produces; equal
/// strings mean identical verdicts and witnesses.
std::string axiom_corpus_fingerprint(std::uint64_t seed, int num_assessments,
                                     const EngineOptions& opts);

struct SelftestOptions {
  std::uint64_t seed = 1;
  EngineOptions engine;
  int axiom_assessments = 40;
  int collapse_lists = 25;
  int collapse_queries = 8;
  int operator_cases = 60;
  int stability_cases = 40;
  int lp_cases = 60;
};

/// Runs the corpus and all randomized suites; one line per suite. Returns 0
/// iff everything passed.
int run(std::ostream& out, const SelftestOptions& opts = {});

}  // namespace selftest
}  // namespace natex
