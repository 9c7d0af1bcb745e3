// Acceptance suite: one line per criterion, nonzero exit iff any fails.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "natex/choice.hpp"
#include "natex/ratlp.hpp"
#include "natex/selftest.hpp"
#include "natex/testgen.hpp"
#include "oracles.hpp"

namespace {

constexpr std::uint64_t kSeed = 42;

int failures = 0;

void report(const char* id, const char* name, bool ok, const std::string& detail) {
  std::printf("%s %s: %s (%s)\n", id, name, ok ? "PASS" : "FAIL", detail.c_str());
  if (!ok) ++failures;
}

std::string suite_detail(const natex::selftest::SuiteResult& r) {
  std::ostringstream out;
  out << r.cases << " cases, " << r.failures << " violations";
  if (!r.first_failure.empty()) out << "; first: " << r.first_failure;
  return out.str();
}

}  // namespace

int main() {
  using namespace natex;
  const EngineOptions opts;
  selftest::CertificateStats stats;

  // A1: rationality axioms of the natural extension on 200 random consistent
  // assessments (2..4 states, up to 3 sets of up to 3 options each),
  // with every verdict's evidence re-checked.
  const auto t0 = std::chrono::steady_clock::now();
  const auto a1 = selftest::axiom_suite(kSeed, 200, opts, &stats);
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0);
  {
    std::ostringstream detail;
    detail << suite_detail(a1) << ", " << elapsed.count() << "s";
    report("A1", "axiom-suite", a1.failures == 0 && elapsed.count() < 300, detail.str());
  }

  // A2: singleton-only assessments agree exactly with the binary model of
  // their generators: 100 coherent generator lists, 20 queries each.
  const auto a2 = selftest::binary_collapse_suite(kSeed, 100, 20, opts, &stats);
  report("A2", "binary-collapse", a2.failures == 0, suite_detail(a2));

  // A3: every evidence object emitted across A1+A2 passes its checker.
  {
    std::ostringstream detail;
    detail << stats.positive_checked << " positive / " << stats.negative_checked
           << " negative evidence objects; " << (stats.positive_failed + stats.negative_failed)
           << " rejected";
    const bool ok = stats.positive_checked > 0 && stats.negative_checked > 0 &&
                    stats.positive_failed == 0 && stats.negative_failed == 0;
    report("A3", "certificate-soundness", ok, detail.str());
  }

  // A4: the hand-derived micro-corpus reproduces exactly.
  const auto a4 = selftest::micro_corpus(opts);
  report("A4", "micro-corpus", a4.failures == 0, suite_detail(a4));

  // A5: strip-cover membership equals superset closure followed by
  // nonpositive-removal closure, on 100 random base collections.
  const auto a5 = selftest::operator_identity_suite(kSeed, 100);
  report("A5", "operator-identity", a5.failures == 0, suite_detail(a5));

  // A6: solver status and optimum agree with a Fourier-Motzkin oracle on 200
  // random programs (<= 3 variables, <= 4 constraints).
  {
    std::uint64_t cases = 0, bad = 0;
    std::string first;
    testgen::Rng rng(kSeed ^ 0xA6);
    for (int i = 0; i < 200; ++i) {
      const auto lp = testgen::linear_program(rng);
      const auto fast = ratlp::solve(lp);
      const auto slow = oracle::solve(lp);
      ++cases;
      bool ok = fast.status == slow.status;
      if (ok && fast.status == ratlp::LPStatus::Optimal) {
        ok = cmp(*fast.value, *slow.value) == 0 && ratlp::satisfies(lp, *fast.point);
      }
      if (ok && (fast.status == ratlp::LPStatus::FeasiblePoint ||
                 fast.status == ratlp::LPStatus::Unbounded)) {
        ok = fast.point && ratlp::satisfies(lp, *fast.point);
      }
      if (!ok) {
        ++bad;
        if (first.empty()) first = "case #" + std::to_string(i);
      }
    }
    std::ostringstream detail;
    detail << cases << " cases, " << bad << " disagreements";
    if (!first.empty()) detail << "; first: " << first;
    report("A6", "lp-oracle", bad == 0, detail.str());
  }

  // A7: dominating-option replacement, stability under nonpositive removal,
  // and monotone inference, 100 sampled instances each.
  {
    const auto dom = selftest::dominating_replacement_suite(kSeed, 100, opts);
    const auto strip = selftest::strip_stability_suite(kSeed, 100, opts);
    const auto mono = selftest::monotone_inference_suite(kSeed, 100, opts);
    const bool ok = dom.failures == 0 && strip.failures == 0 && mono.failures == 0;
    std::ostringstream detail;
    detail << "replacement " << suite_detail(dom) << " | removal " << suite_detail(strip)
           << " | monotone " << suite_detail(mono);
    report("A7", "stability", ok, detail.str());
  }

  // A8: selftest output is byte-identical for a fixed seed, and parallel
  // evaluation returns the sequential verdicts and witnesses on the A1
  // corpus.
  {
    selftest::SelftestOptions st;
    st.seed = 42;
    std::ostringstream first, second;
    const int rc1 = selftest::run(first, st);
    const int rc2 = selftest::run(second, st);
    const bool repeat_ok = rc1 == 0 && rc2 == 0 && first.str() == second.str();

    EngineOptions parallel;
    parallel.threads = 4;
    const std::string seq = selftest::axiom_corpus_fingerprint(kSeed, 50, opts);
    const std::string par = selftest::axiom_corpus_fingerprint(kSeed, 50, parallel);
    const bool parallel_ok = !seq.empty() && seq == par;

    std::ostringstream detail;
    detail << "selftest bytes " << (repeat_ok ? "stable" : "UNSTABLE") << ", parallel verdicts "
           << (parallel_ok ? "identical" : "DIVERGENT");
    report("A8", "determinism", repeat_ok && parallel_ok, detail.str());
  }

  if (failures == 0) {
    std::printf("acceptance: all criteria passed\n");
  } else {
    std::printf("acceptance: %d criteria FAILED\n", failures);
  }
  return failures;
}
