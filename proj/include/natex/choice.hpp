#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "natex/certificates.hpp"
#include "natex/desirability.hpp"
#include "natex/gamble.hpp"

namespace natex {

// One pick per assessment set, indices into canonical member order. The
// picks generate a candidate finitely generated cone.
struct Selection {
  std::vector<std::size_t> picks;
  bool operator==(const Selection&) const = default;
};

DesirGenerators selection_generators(const Assessment& a, const Selection& s);

// Negative membership evidence: a coherent selection whose cone misses the
// queried set entirely, i.e. a dominating binary model excluding it.
struct BinaryWitness {
  Selection selection;
};

struct EmptySetInAssessment {};

// Every answer ships with evidence the operators layer can re-check:
//   membership true   -> PosiCertificate
//   membership false  -> BinaryWitness
//   consistency true  -> Selection (generating a coherent cone)
//   consistency false -> EmptySetInAssessment or a {0}-producing certificate
struct Verdict {
  bool answer = false;
  std::variant<std::monostate, PosiCertificate, BinaryWitness, Selection,
               EmptySetInAssessment>
      evidence;
};

struct ChoicePartition {
  GambleSet chosen;
  GambleSet rejected;
  std::vector<std::pair<Gamble, Verdict>> option_verdicts;  // canonical order
};

enum class BinarityCase { NotMember, BinaryWitnessed, NonBinary };

struct BinarityReport {
  BinarityCase kind = BinarityCase::NotMember;
  Verdict membership;  // verdict for the queried set itself
  std::optional<Gamble> witness;  // BinaryWitnessed: a member whose singleton is accepted
  // NonBinary: one refuting verdict per member, each singleton rejected.
  std::vector<std::pair<Gamble, Verdict>> singleton_refutations;
};

struct EngineOptions {
  std::uint64_t selection_cap = 1'000'000;
  unsigned threads = 1;
};

// Inference engine over one assessment. Queries are pure; per-selection
// coherence work is computed once and reused. With threads > 1 selections
// are evaluated concurrently, but verdicts and witnesses are chosen by
// canonical selection order, never completion order.
class Engine {
 public:
  explicit Engine(Assessment a, EngineOptions opts = {});

  const Assessment& assessment() const { return a_; }
  const EngineOptions& options() const { return opts_; }

  /// Number of selections (product of assessment set sizes). Throws
  /// CapExceeded when above the configured cap.
  std::uint64_t selection_count();

  Verdict consistent();
  Verdict natex_contains(const GambleSet& b);
  Verdict reject(const GambleSet& options_set, const Gamble& u);
  ChoicePartition choose(const GambleSet& options_set);
  Verdict singleton_verdict(const Gamble& u);
  bool singleton_desirable(const Gamble& u);
  BinarityReport binarity_evidence(const GambleSet& b);

 private:
  Selection selection_at(std::uint64_t rank) const;
  const std::vector<CoherenceCheck>& coherence_table();
  void require_consistent();

  Assessment a_;
  EngineOptions opts_;
  std::optional<std::uint64_t> count_;
  std::optional<std::vector<CoherenceCheck>> table_;
  std::optional<Verdict> consistency_;
};

// One-shot wrappers.
Verdict consistent(const Assessment& a, const EngineOptions& opts = {});
Verdict natex_contains(const Assessment& a, const GambleSet& b,
                       const EngineOptions& opts = {});
Verdict reject(const Assessment& a, const GambleSet& options_set, const Gamble& u,
               const EngineOptions& opts = {});
ChoicePartition choose(const Assessment& a, const GambleSet& options_set,
                       const EngineOptions& opts = {});
bool singleton_desirable(const Assessment& a, const Gamble& u,
                         const EngineOptions& opts = {});
BinarityReport binarity_evidence(const Assessment& a, const GambleSet& b,
                                 const EngineOptions& opts = {});

/// Re-checks positive consistency evidence: picks in range, cone coherent.
VerifyResult verify_coherent_selection(const Assessment& a, const Selection& s);

/// Re-checks negative membership evidence: picks in range, cone coherent,
/// and every member of `b` outside the cone.
VerifyResult verify_binary_witness(const Assessment& a, const GambleSet& b,
                                   const BinaryWitness& w);

/// Runs every evidence object in `v` through its checker.
VerifyResult verify_verdict(const Assessment& a, const std::optional<GambleSet>& b,
                            const Verdict& v);

}  // namespace natex
