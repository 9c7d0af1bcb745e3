#include <doctest.h>

#include "natex/certificates.hpp"
#include "natex/choice.hpp"
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

PosiCertificate identity_certificate(const GambleSet& q) {
  PosiCertificate cert;
  cert.bases.push_back(CertificateBase{BaseTag::Assessment, q});
  for (std::size_t i = 0; i < q.size(); ++i) {
    RatVec lam(1);
    lam[0] = 1;
    cert.coeffs.push_back(CoeffEntry{{i}, lam});
  }
  return cert;
}

}  // namespace

TEST_CASE("produced sets follow the coefficient table") {
  const GambleSet two(2, {gm({1, -1}), gm({-1, 1})});
  CHECK(produced_set(identity_certificate(two)) == two);

  PosiCertificate scaled;
  scaled.bases.push_back(CertificateBase{BaseTag::Assessment, GambleSet(2, {gm({2, 0})})});
  scaled.coeffs.push_back(CoeffEntry{{0}, gm({Rational(1, 2)})});
  CHECK(produced_set(scaled) == GambleSet(2, {gm({1, 0})}));
}

TEST_CASE("table defects are reported") {
  const GambleSet two(2, {gm({1, -1}), gm({-1, 1})});

  SUBCASE("missing tuple") {
    auto cert = identity_certificate(two);
    cert.coeffs.pop_back();
    CHECK_THROWS_AS(produced_set(cert), CertificateError);
  }
  SUBCASE("duplicate tuple") {
    auto cert = identity_certificate(two);
    cert.coeffs[1].tuple = {0};
    CHECK_THROWS_AS(produced_set(cert), CertificateError);
  }
  SUBCASE("index out of range") {
    auto cert = identity_certificate(two);
    cert.coeffs[1].tuple = {5};
    CHECK_THROWS_AS(produced_set(cert), CertificateError);
  }
  SUBCASE("negative coefficient") {
    auto cert = identity_certificate(two);
    cert.coeffs[0].lambda[0] = -1;
    CHECK_THROWS_AS(produced_set(cert), CertificateError);
  }
  SUBCASE("zero coefficient vector") {
    auto cert = identity_certificate(two);
    cert.coeffs[0].lambda[0] = 0;
    CHECK_THROWS_AS(produced_set(cert), CertificateError);
  }
  SUBCASE("wrong arity") {
    auto cert = identity_certificate(two);
    cert.coeffs[0].lambda = gm({1, 1});
    CHECK_THROWS_AS(produced_set(cert), CertificateError);
  }
  SUBCASE("no bases") {
    PosiCertificate cert;
    CHECK_THROWS_AS(produced_set(cert), CertificateError);
  }
  SUBCASE("empty base") {
    PosiCertificate cert;
    cert.bases.push_back(CertificateBase{BaseTag::Assessment, GambleSet(2)});
    CHECK_THROWS_AS(produced_set(cert), CertificateError);
  }
}

TEST_CASE("verification rejects foreign and fake bases") {
  const GambleSet two(2, {gm({1, -1}), gm({-1, 1})});
  const Assessment a = asmt(2, {two});

  SUBCASE("base not in the assessment") {
    auto cert = identity_certificate(GambleSet(2, {gm({3, 3})}));
    const auto r = verify_membership_certificate(a, two, cert);
    CHECK_FALSE(r.ok);
    CHECK(r.reason == "base not in assessment");
  }
  SUBCASE("singleton base that is not strictly positive") {
    PosiCertificate cert;
    cert.bases.push_back(
        CertificateBase{BaseTag::PositiveSingleton, GambleSet(2, {gm({1, -1})})});
    cert.coeffs.push_back(CoeffEntry{{0}, gm({1})});
    const auto r = verify_membership_certificate(a, GambleSet(2, {gm({1, -1})}), cert);
    CHECK_FALSE(r.ok);
  }
  SUBCASE("valid identity certificate") {
    CHECK(verify_membership_certificate(a, two, identity_certificate(two)).ok);
  }
  SUBCASE("cover failure names the step") {
    const auto r = verify_membership_certificate(a, GambleSet(2, {gm({1, -1})}),
                                                 identity_certificate(two));
    CHECK_FALSE(r.ok);
    CHECK(r.reason == "rs_step failed");
  }
}

TEST_CASE("closure helpers") {
  const GambleSet p(2, {gm({1, 0})});
  const GambleSet pq(2, {gm({1, 0}), gm({0, 1})});
  const GambleSet pneg(2, {gm({1, 0}), gm({-1, -1})});
  CHECK(su_member({p}, pq));
  CHECK_FALSE(su_member({pq}, p));
  CHECK_FALSE(su_member({}, GambleSet(2)));
  CHECK(rn_member({pneg}, p));
  CHECK_FALSE(rn_member({pneg}, GambleSet(2, {gm({1, 0}), gm({5, 5})})));
  CHECK(rn_member({p}, p));
}

TEST_CASE("staged closure equals the direct strip-cover") {
  const auto suite = selftest::operator_identity_suite(5, 80);
  CHECK(suite.failures == 0);
}

TEST_CASE("engine certificates survive independent verification") {
  testgen::Rng rng(77);
  for (int i = 0; i < 30; ++i) {
    const Eigen::Index dim = 2 + (i % 3);
    const Assessment a = testgen::consistent_assessment(rng, dim, 3, 3);
    Engine engine(a);
    for (int q = 0; q < 3; ++q) {
      const GambleSet b = testgen::gamble_set(rng, dim, 3);
      const Verdict v = engine.natex_contains(b);
      const auto r = verify_verdict(a, b, v);
      CAPTURE(i);
      CAPTURE(q);
      CAPTURE(r.reason);
      CHECK(r.ok);
    }
  }
}

TEST_CASE("shared picks across sets split their weight onto one slot") {
  // both sets contain (1,-1); a selection may pick it twice, and the
  // certificate must still reproduce the target member exactly
  const GambleSet q1(2, {gm({1, -1}), gm({-1, 1})});
  const GambleSet q2(2, {gm({1, -1}), gm({0, -2})});
  const Assessment a = asmt(2, {q1, q2});
  Engine engine(a);
  REQUIRE(engine.consistent().answer);
  const GambleSet b(2, {gm({2, -2})});
  const Verdict v = engine.natex_contains(b);
  if (v.answer) {
    const auto r = verify_verdict(a, b, v);
    CAPTURE(r.reason);
    CHECK(r.ok);
  } else {
    CHECK(verify_verdict(a, b, v).ok);
  }
  // the assessment's own sets certify with duplicated picks in play
  for (const auto& q : a.sets()) {
    const Verdict m = engine.natex_contains(q);
    REQUIRE(m.answer);
    const auto r = verify_verdict(a, q, m);
    CAPTURE(r.reason);
    CHECK(r.ok);
  }
}

TEST_CASE("inconsistency certificates produce exactly zero") {
  const Assessment bad = asmt(2, {GambleSet(2, {gm({-1, -1}), gm({-2, 0})}),
                                  GambleSet(2, {gm({-1, Rational(-1, 2)})})});
  const Verdict v = consistent(bad);
  REQUIRE_FALSE(v.answer);
  REQUIRE(std::holds_alternative<PosiCertificate>(v.evidence));
  const auto& cert = std::get<PosiCertificate>(v.evidence);
  CHECK(verify_inconsistency_certificate(bad, cert).ok);
  CHECK(produced_set(cert) == GambleSet(2, {zero_gamble(2)}));

  // a doctored certificate must not pass
  auto broken = cert;
  broken.coeffs[0].lambda[0] += 1;
  CHECK_FALSE(verify_inconsistency_certificate(bad, broken).ok);
}
