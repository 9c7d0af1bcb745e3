#include "natex/choice.hpp"

#include <algorithm>
#include <thread>

namespace natex {

namespace {

// Deterministic parallel map over [0, count): slot i always receives the
// result of index i, whatever the scheduling.
template <typename Fn>
void parallel_for(std::uint64_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const unsigned workers = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, count));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

DesirGenerators selection_generators(const Assessment& a, const Selection& s) {
  if (s.picks.size() != a.size()) {
    throw Error("selection arity does not match the assessment");
  }
  std::vector<Gamble> gens;
  gens.reserve(s.picks.size());
  for (std::size_t k = 0; k < s.picks.size(); ++k) {
    if (s.picks[k] >= a[k].size()) throw Error("selection pick out of range");
    gens.push_back(a[k][s.picks[k]]);
  }
  return DesirGenerators(a.dim(), std::move(gens));
}

Engine::Engine(Assessment a, EngineOptions opts)
    : a_(std::move(a)), opts_(opts) {}

std::uint64_t Engine::selection_count() {
  if (!count_) {
    std::uint64_t product = 1;
    for (const auto& q : a_.sets()) {
      if (q.empty()) {
        product = 0;
        break;
      }
      if (product > opts_.selection_cap / q.size()) {
        throw CapExceeded("selection count exceeds the configured cap");
      }
      product *= q.size();
    }
    count_ = product;
  }
  return *count_;
}

Selection Engine::selection_at(std::uint64_t rank) const {
  Selection s;
  s.picks.resize(a_.size());
  for (std::size_t k = a_.size(); k-- > 0;) {
    const std::size_t size = a_[k].size();
    s.picks[k] = static_cast<std::size_t>(rank % size);
    rank /= size;
  }
  return s;
}

const std::vector<CoherenceCheck>& Engine::coherence_table() {
  if (!table_) {
    const std::uint64_t count = selection_count();
    std::vector<CoherenceCheck> table(static_cast<std::size_t>(count));
    parallel_for(count, opts_.threads, [&](std::uint64_t i) {
      table[static_cast<std::size_t>(i)] =
          coherence_check(selection_generators(a_, selection_at(i)));
    });
    table_ = std::move(table);
  }
  return *table_;
}

Verdict Engine::consistent() {
  if (consistency_) return *consistency_;
  Verdict v;
  if (a_.contains_empty_set()) {
    v.answer = false;
    v.evidence = EmptySetInAssessment{};
    consistency_ = v;
    return v;
  }
  const auto& table = coherence_table();
  for (std::uint64_t i = 0; i < table.size(); ++i) {
    if (table[static_cast<std::size_t>(i)].coherent) {
      v.answer = true;
      v.evidence = selection_at(i);
      consistency_ = v;
      return v;
    }
  }
  // Every selection is incoherent: lift the mixtures into one certificate
  // whose produced set is exactly {0}.
  std::vector<SelectionEvidence> evidence(table.size());
  for (std::uint64_t i = 0; i < table.size(); ++i) {
    auto& ev = evidence[static_cast<std::size_t>(i)];
    ev.picks = selection_at(i).picks;
    ev.coherent = false;
    ev.coeffs = table[static_cast<std::size_t>(i)].mixture;
  }
  v.answer = false;
  v.evidence = build_membership_certificate(a_, evidence);
  consistency_ = v;
  return v;
}

void Engine::require_consistent() {
  if (!consistent().answer) {
    throw InconsistentAssessment("natural extension undefined: assessment is inconsistent");
  }
}

Verdict Engine::natex_contains(const GambleSet& b) {
  if (b.dim() != a_.dim()) throw DimensionError("query set dimension mismatch");
  require_consistent();
  const auto& table = coherence_table();
  const std::uint64_t count = table.size();

  std::vector<SelectionEvidence> evidence(static_cast<std::size_t>(count));
  std::vector<char> failed(static_cast<std::size_t>(count), 0);
  parallel_for(count, opts_.threads, [&](std::uint64_t i) {
    auto& ev = evidence[static_cast<std::size_t>(i)];
    ev.picks = selection_at(i).picks;
    const auto& check = table[static_cast<std::size_t>(i)];
    if (!check.coherent) {
      ev.coherent = false;
      ev.coeffs = check.mixture;
      return;
    }
    const DesirGenerators gens = selection_generators(a_, selection_at(i));
    for (const auto& candidate : b.members()) {
      const auto hit = cone_membership(gens, candidate);
      if (hit.member) {
        ev.coherent = true;
        ev.coeffs = hit.lambda;
        ev.member = candidate;
        return;
      }
    }
    failed[static_cast<std::size_t>(i)] = 1;
  });

  for (std::uint64_t i = 0; i < count; ++i) {
    if (failed[static_cast<std::size_t>(i)]) {
      Verdict v;
      v.answer = false;
      v.evidence = BinaryWitness{selection_at(i)};
      return v;
    }
  }
  Verdict v;
  v.answer = true;
  v.evidence = build_membership_certificate(a_, evidence);
  return v;
}

Verdict Engine::reject(const GambleSet& options_set, const Gamble& u) {
  if (u.size() != a_.dim()) throw DimensionError("option dimension mismatch");
  if (!options_set.contains(u)) {
    throw Error("rejection query: the option is not a member of the option set");
  }
  return natex_contains(shift_set(options_set, u));
}

ChoicePartition Engine::choose(const GambleSet& options_set) {
  if (options_set.dim() != a_.dim()) throw DimensionError("option set dimension mismatch");
  require_consistent();
  ChoicePartition part{GambleSet(a_.dim()), GambleSet(a_.dim()), {}};
  std::vector<Gamble> chosen, rejected;
  for (const auto& u : options_set.members()) {
    Verdict v = reject(options_set, u);
    (v.answer ? rejected : chosen).push_back(u);
    part.option_verdicts.emplace_back(u, std::move(v));
  }
  part.chosen = GambleSet(options_set.dim(), std::move(chosen));
  part.rejected = GambleSet(options_set.dim(), std::move(rejected));
  return part;
}

Verdict Engine::singleton_verdict(const Gamble& u) {
  if (u.size() != a_.dim()) throw DimensionError("gamble dimension mismatch");
  return natex_contains(GambleSet(a_.dim(), {u}));
}

bool Engine::singleton_desirable(const Gamble& u) {
  return singleton_verdict(u).answer;
}

BinarityReport Engine::binarity_evidence(const GambleSet& b) {
  BinarityReport report;
  report.membership = natex_contains(b);
  if (!report.membership.answer) {
    report.kind = BinarityCase::NotMember;
    return report;
  }
  std::vector<std::pair<Gamble, Verdict>> refutations;
  for (const auto& u : b.members()) {
    Verdict sv = singleton_verdict(u);
    if (sv.answer) {
      report.kind = BinarityCase::BinaryWitnessed;
      report.witness = u;
      return report;
    }
    refutations.emplace_back(u, std::move(sv));
  }
  // The set is accepted but none of its members is singly accepted: the
  // natural extension is not determined by its binary choices at this set.
  report.kind = BinarityCase::NonBinary;
  report.singleton_refutations = std::move(refutations);
  return report;
}

Verdict consistent(const Assessment& a, const EngineOptions& opts) {
  return Engine(a, opts).consistent();
}
Verdict natex_contains(const Assessment& a, const GambleSet& b, const EngineOptions& opts) {
  return Engine(a, opts).natex_contains(b);
}
Verdict reject(const Assessment& a, const GambleSet& options_set, const Gamble& u,
               const EngineOptions& opts) {
  return Engine(a, opts).reject(options_set, u);
}
ChoicePartition choose(const Assessment& a, const GambleSet& options_set,
                       const EngineOptions& opts) {
  return Engine(a, opts).choose(options_set);
}
bool singleton_desirable(const Assessment& a, const Gamble& u, const EngineOptions& opts) {
  return Engine(a, opts).singleton_desirable(u);
}
BinarityReport binarity_evidence(const Assessment& a, const GambleSet& b,
                                 const EngineOptions& opts) {
  return Engine(a, opts).binarity_evidence(b);
}

namespace {

VerifyResult check_selection_shape(const Assessment& a, const Selection& s) {
  if (s.picks.size() != a.size()) return {false, "selection arity mismatch"};
  for (std::size_t k = 0; k < s.picks.size(); ++k) {
    if (s.picks[k] >= a[k].size()) return {false, "selection pick out of range"};
  }
  return {true, ""};
}

}  // namespace

VerifyResult verify_coherent_selection(const Assessment& a, const Selection& s) {
  if (auto r = check_selection_shape(a, s); !r.ok) return r;
  if (!is_coherent(selection_generators(a, s))) {
    return {false, "selection cone is incoherent"};
  }
  return {true, ""};
}

VerifyResult verify_binary_witness(const Assessment& a, const GambleSet& b,
                                   const BinaryWitness& w) {
  if (b.dim() != a.dim()) return {false, "query dimension mismatch"};
  if (auto r = check_selection_shape(a, w.selection); !r.ok) return r;
  const DesirGenerators gens = selection_generators(a, w.selection);
  if (!is_coherent(gens)) return {false, "witness cone is incoherent"};
  for (const auto& u : b.members()) {
    if (cone_contains(gens, u)) {
      return {false, "witness cone meets the queried set"};
    }
  }
  return {true, ""};
}

VerifyResult verify_verdict(const Assessment& a, const std::optional<GambleSet>& b,
                            const Verdict& v) {
  if (std::holds_alternative<PosiCertificate>(v.evidence)) {
    const auto& cert = std::get<PosiCertificate>(v.evidence);
    if (v.answer) {
      if (!b) return {false, "membership verdict without a queried set"};
      return verify_membership_certificate(a, *b, cert);
    }
    return verify_inconsistency_certificate(a, cert);
  }
  if (std::holds_alternative<BinaryWitness>(v.evidence)) {
    if (v.answer) return {false, "binary witness attached to a positive answer"};
    if (!b) return {false, "membership verdict without a queried set"};
    return verify_binary_witness(a, *b, std::get<BinaryWitness>(v.evidence));
  }
  if (std::holds_alternative<Selection>(v.evidence)) {
    if (!v.answer) return {false, "coherent selection attached to a negative answer"};
    return verify_coherent_selection(a, std::get<Selection>(v.evidence));
  }
  if (std::holds_alternative<EmptySetInAssessment>(v.evidence)) {
    if (v.answer) return {false, "empty-set evidence attached to a positive answer"};
    if (!a.contains_empty_set()) return {false, "assessment has no empty set"};
    return {true, ""};
  }
  return {false, "verdict carries no evidence"};
}

}  // namespace natex
