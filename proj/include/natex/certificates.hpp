#pragma once

#include <optional>
#include <string>
#include <vector>

#include "natex/gamble.hpp"

namespace natex {

enum class BaseTag { Assessment, PositiveSingleton };

struct CertificateBase {
  BaseTag tag = BaseTag::Assessment;
  GambleSet set;
};

struct CoeffEntry {
  std::vector<std::size_t> tuple;  // one member index per base
  RatVec lambda;                   // one coefficient per base
};

// A machine-checkable witness that a gamble set arises from the assessment
// and the strictly positive singletons by positive linear combination over
// selection tuples, followed by removal of nonpositive options and superset
// weakening. The coefficient table covers the full product of base members;
// every row is nonnegative with positive sum.
struct PosiCertificate {
  std::vector<CertificateBase> bases;
  std::vector<CoeffEntry> coeffs;
};

/// The exact combination set { sum_k lambda_k * base_k[tuple_k] } over all
/// tuples, deduplicated. Throws CertificateError on any invariant violation
/// (missing or duplicate tuple, negative coefficient, zero coefficient sum).
GambleSet produced_set(const PosiCertificate& cert);

/// Weakening step: keeps B whenever the positive part of `produced` is
/// contained in it.
bool rs_step(const GambleSet& produced, const GambleSet& b);

struct VerifyResult {
  bool ok = false;
  std::string reason;  // empty when ok
};

/// Full check that `cert` witnesses membership of `b` in the natural
/// extension of `a`: bases drawn from the assessment and the strictly
/// positive singletons, all table invariants, and the rs_step cover of `b`.
/// Never throws; defects come back as reason codes.
VerifyResult verify_membership_certificate(const Assessment& a, const GambleSet& b,
                                           const PosiCertificate& cert);

/// Same base and table checks, but the produced set must be exactly the
/// zero singleton: a constructive proof that no coherent extension of `a`
/// exists.
VerifyResult verify_inconsistency_certificate(const Assessment& a,
                                              const PosiCertificate& cert);

// Per-selection raw material for certificate construction, one entry per
// selection tuple in canonical enumeration order. A coherent selection
// carries a target member of the queried set and cone coefficients whose
// residual target - sum(coeffs_j * gen_j) is nonnegative; an incoherent one
// carries a mixture with nonpositive combination and unit coefficient sum.
struct SelectionEvidence {
  std::vector<std::size_t> picks;
  bool coherent = false;
  RatVec coeffs;                 // over the deduplicated generator list of the picks
  std::optional<Gamble> member;  // present iff coherent
};

/// Assembles the certificate over bases = all assessment sets plus one
/// strictly positive singleton per state. Coherent selections produce their
/// target member exactly (residual absorbed into the singleton bases);
/// incoherent ones produce the zero gamble, which the rs step removes. With
/// no coherent selection at all the produced set is exactly {0}, i.e. an
/// inconsistency certificate.
PosiCertificate build_membership_certificate(const Assessment& a,
                                             const std::vector<SelectionEvidence>& evidence);

/// Superset closure membership: some base set is contained in `b`.
bool su_member(const std::vector<GambleSet>& base, const GambleSet& b);

/// Nonpositive-removal closure membership: some base set B' satisfies
/// B' minus its nonpositive members <= b <= B'.
bool rn_member(const std::vector<GambleSet>& base, const GambleSet& b);

}  // namespace natex
