#include "natex/certificates.hpp"

#include <algorithm>

#include "natex/desirability.hpp"

namespace natex {

namespace {

// Ranks a tuple in the mixed-radix order induced by the base sizes, first
// base most significant. Returns nullopt on an out-of-range index.
std::optional<std::uint64_t> tuple_rank(const PosiCertificate& cert,
                                        const std::vector<std::size_t>& tuple) {
  if (tuple.size() != cert.bases.size()) return std::nullopt;
  std::uint64_t rank = 0;
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    const std::size_t size = cert.bases[k].set.size();
    if (tuple[k] >= size) return std::nullopt;
    rank = rank * size + tuple[k];
  }
  return rank;
}

std::uint64_t product_of_base_sizes(const PosiCertificate& cert) {
  std::uint64_t product = 1;
  for (const auto& base : cert.bases) {
    if (base.set.empty()) throw CertificateError("empty base set");
    product *= base.set.size();
    if (product > (std::uint64_t(1) << 40)) {
      throw CertificateError("certificate tuple space too large");
    }
  }
  return product;
}

}  // namespace

GambleSet produced_set(const PosiCertificate& cert) {
  if (cert.bases.empty()) throw CertificateError("certificate has no bases");
  const Eigen::Index dim = cert.bases.front().set.dim();
  for (const auto& base : cert.bases) {
    if (base.set.dim() != dim) throw CertificateError("base dimension mismatch");
  }
  const std::uint64_t expected = product_of_base_sizes(cert);
  if (cert.coeffs.size() != expected) {
    throw CertificateError("tuple coverage mismatch");
  }
  std::vector<bool> seen(cert.coeffs.size(), false);

  std::vector<Gamble> combos;
  combos.reserve(cert.coeffs.size());
  for (const auto& entry : cert.coeffs) {
    const auto rank = tuple_rank(cert, entry.tuple);
    if (!rank) throw CertificateError("tuple index out of range");
    if (seen[static_cast<std::size_t>(*rank)]) throw CertificateError("duplicate tuple");
    seen[static_cast<std::size_t>(*rank)] = true;
    if (entry.lambda.size() != static_cast<Eigen::Index>(cert.bases.size())) {
      throw CertificateError("coefficient vector has wrong length");
    }
    Rational sum = 0;
    Gamble combo = zero_gamble(dim);
    for (std::size_t k = 0; k < cert.bases.size(); ++k) {
      const Rational& lam = entry.lambda[static_cast<Eigen::Index>(k)];
      if (sgn(lam) < 0) throw CertificateError("negative coefficient");
      sum += lam;
      if (sgn(lam) != 0) combo += lam * cert.bases[k].set[entry.tuple[k]];
    }
    if (sgn(sum) <= 0) throw CertificateError("coefficient sum not positive");
    combos.push_back(std::move(combo));
  }
  return GambleSet(dim, std::move(combos));
}

bool rs_step(const GambleSet& produced, const GambleSet& b) {
  return strip_nonpositive(produced).subset_of(b);
}

namespace {

VerifyResult check_bases(const Assessment& a, const PosiCertificate& cert) {
  for (const auto& base : cert.bases) {
    if (base.set.dim() != a.dim()) return {false, "base dimension mismatch"};
    if (base.tag == BaseTag::Assessment) {
      if (!a.contains(base.set)) return {false, "base not in assessment"};
    } else {
      if (base.set.size() != 1 || !is_strictly_positive(base.set[0])) {
        return {false, "positive-singleton base is not a strictly positive singleton"};
      }
    }
  }
  return {true, ""};
}

}  // namespace

VerifyResult verify_membership_certificate(const Assessment& a, const GambleSet& b,
                                           const PosiCertificate& cert) {
  if (b.dim() != a.dim()) return {false, "query dimension mismatch"};
  if (auto r = check_bases(a, cert); !r.ok) return r;
  GambleSet produced(a.dim());
  try {
    produced = produced_set(cert);
  } catch (const CertificateError& e) {
    return {false, e.what()};
  }
  if (!rs_step(produced, b)) return {false, "rs_step failed"};
  return {true, ""};
}

VerifyResult verify_inconsistency_certificate(const Assessment& a,
                                              const PosiCertificate& cert) {
  if (auto r = check_bases(a, cert); !r.ok) return r;
  GambleSet produced(a.dim());
  try {
    produced = produced_set(cert);
  } catch (const CertificateError& e) {
    return {false, e.what()};
  }
  if (produced.size() != 1 ||
      lex_compare(produced[0], zero_gamble(produced.dim())) != 0) {
    return {false, "produced set is not the zero singleton"};
  }
  return {true, ""};
}

PosiCertificate build_membership_certificate(const Assessment& a,
                                             const std::vector<SelectionEvidence>& evidence) {
  const Eigen::Index dim = a.dim();
  PosiCertificate cert;
  cert.bases.reserve(a.size() + static_cast<std::size_t>(dim));
  for (const auto& q : a.sets()) {
    cert.bases.push_back(CertificateBase{BaseTag::Assessment, q});
  }
  for (Eigen::Index x = 0; x < dim; ++x) {
    cert.bases.push_back(CertificateBase{
        BaseTag::PositiveSingleton, GambleSet(dim, {unit_gamble(dim, x)})});
  }
  const std::size_t n_bases = cert.bases.size();
  const std::size_t n_sets = a.size();

  cert.coeffs.reserve(evidence.size());
  for (const auto& ev : evidence) {
    if (ev.picks.size() != n_sets) throw CertificateError("evidence picks have wrong arity");

    // The cone coefficients run over the deduplicated generator list; spread
    // them back over assessment slots, whole weight on the first slot that
    // holds each generator.
    std::vector<Gamble> picked;
    picked.reserve(n_sets);
    for (std::size_t k = 0; k < n_sets; ++k) picked.push_back(a[k][ev.picks[k]]);
    const DesirGenerators gens(dim, picked);
    if (ev.coeffs.size() != static_cast<Eigen::Index>(gens.size())) {
      throw CertificateError("evidence coefficients have wrong arity");
    }

    RatVec lambda = RatVec::Zero(static_cast<Eigen::Index>(n_bases));
    Gamble combo = zero_gamble(dim);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Gamble& g = gens.generators()[j];
      for (std::size_t k = 0; k < n_sets; ++k) {
        if (lex_compare(picked[k], g) == 0) {
          lambda[static_cast<Eigen::Index>(k)] = ev.coeffs[static_cast<Eigen::Index>(j)];
          break;
        }
      }
      combo += ev.coeffs[static_cast<Eigen::Index>(j)] * g;
    }

    // Coherent: absorb the nonnegative residual of the target member into
    // the singleton bases so the tuple produces the member exactly.
    // Incoherent: absorb the negated combination so the tuple produces zero.
    const Gamble residual = ev.coherent ? Gamble(*ev.member - combo) : Gamble(-combo);
    for (Eigen::Index x = 0; x < dim; ++x) {
      if (sgn(residual[x]) < 0) throw CertificateError("evidence residual has a negative entry");
      lambda[static_cast<Eigen::Index>(n_sets) + x] = residual[x];
    }

    CoeffEntry entry;
    entry.tuple.assign(ev.picks.begin(), ev.picks.end());
    entry.tuple.resize(n_bases, 0);  // singleton bases have a single member
    entry.lambda = std::move(lambda);
    cert.coeffs.push_back(std::move(entry));
  }
  return cert;
}

bool su_member(const std::vector<GambleSet>& base, const GambleSet& b) {
  return std::any_of(base.begin(), base.end(),
                     [&](const GambleSet& q) { return q.subset_of(b); });
}

bool rn_member(const std::vector<GambleSet>& base, const GambleSet& b) {
  return std::any_of(base.begin(), base.end(), [&](const GambleSet& q) {
    return strip_nonpositive(q).subset_of(b) && b.subset_of(q);
  });
}

}  // namespace natex
