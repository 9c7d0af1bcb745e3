#include "natex/io.hpp"

namespace natex {
namespace io {

namespace {

ParseError expected(const std::string& what, const Json& j) {
  return ParseError("expected " + what + ", got: " + j.dump());
}

}  // namespace

Json to_json(const Gamble& g) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < g.size(); ++i) arr.push_back(to_string(g[i]));
  return arr;
}

Json to_json(const GambleSet& s) {
  Json arr = Json::array();
  for (const auto& g : s.members()) arr.push_back(to_json(g));
  return arr;
}

Json to_json(const Assessment& a) {
  Json j;
  j["space"] = a.space().labels();
  Json sets = Json::array();
  for (const auto& s : a.sets()) sets.push_back(to_json(s));
  j["assessment"] = std::move(sets);
  return j;
}

Json to_json(const PosiCertificate& cert) {
  Json bases = Json::array();
  for (const auto& base : cert.bases) {
    Json b;
    b["tag"] = base.tag == BaseTag::Assessment ? "assessment" : "positive-singleton";
    b["set"] = to_json(base.set);
    bases.push_back(std::move(b));
  }
  Json coeffs = Json::array();
  for (const auto& entry : cert.coeffs) {
    Json e;
    e["tuple"] = entry.tuple;
    Json lam = Json::array();
    for (Eigen::Index i = 0; i < entry.lambda.size(); ++i) {
      lam.push_back(to_string(entry.lambda[i]));
    }
    e["lambda"] = std::move(lam);
    coeffs.push_back(std::move(e));
  }
  Json j;
  j["bases"] = std::move(bases);
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json to_json(const Selection& s, const Assessment& a) {
  Json j;
  j["picks"] = s.picks;
  Json gens = Json::array();
  for (std::size_t k = 0; k < s.picks.size() && k < a.size(); ++k) {
    gens.push_back(to_json(a[k][s.picks[k]]));
  }
  j["generators"] = std::move(gens);
  return j;
}

Json to_json(const Verdict& v, const Assessment& a) {
  Json j;
  j["answer"] = v.answer;
  Json ev;
  if (std::holds_alternative<PosiCertificate>(v.evidence)) {
    ev["kind"] = v.answer ? "membership-certificate" : "inconsistency-certificate";
    ev["certificate"] = to_json(std::get<PosiCertificate>(v.evidence));
  } else if (std::holds_alternative<BinaryWitness>(v.evidence)) {
    ev["kind"] = "binary-witness";
    ev["selection"] = to_json(std::get<BinaryWitness>(v.evidence).selection, a);
  } else if (std::holds_alternative<Selection>(v.evidence)) {
    ev["kind"] = "coherent-selection";
    ev["selection"] = to_json(std::get<Selection>(v.evidence), a);
  } else if (std::holds_alternative<EmptySetInAssessment>(v.evidence)) {
    ev["kind"] = "empty-set-in-assessment";
  } else {
    ev["kind"] = "none";
  }
  j["evidence"] = std::move(ev);
  return j;
}

Json to_json(const ChoicePartition& part) {
  Json j;
  j["chosen"] = to_json(part.chosen);
  j["rejected"] = to_json(part.rejected);
  return j;
}

Json to_json(const BinarityReport& report, const Assessment& a) {
  Json j;
  switch (report.kind) {
    case BinarityCase::NotMember:
      j["case"] = "not-member";
      j["membership"] = to_json(report.membership, a);
      break;
    case BinarityCase::BinaryWitnessed:
      j["case"] = "binary-witnessed";
      j["witness"] = to_json(*report.witness);
      j["membership"] = to_json(report.membership, a);
      break;
    case BinarityCase::NonBinary: {
      j["case"] = "non-binary";
      j["membership"] = to_json(report.membership, a);
      Json refs = Json::array();
      for (const auto& [u, v] : report.singleton_refutations) {
        Json r;
        r["gamble"] = to_json(u);
        r["verdict"] = to_json(v, a);
        refs.push_back(std::move(r));
      }
      j["singleton-refutations"] = std::move(refs);
      break;
    }
  }
  return j;
}

Gamble gamble_from_json(const Json& j, Eigen::Index dim) {
  if (!j.is_array()) throw expected("a gamble (array of rational strings)", j);
  if (static_cast<Eigen::Index>(j.size()) != dim) {
    throw DimensionError("gamble length does not match space dimension");
  }
  Gamble g(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto& cell = j[static_cast<std::size_t>(i)];
    if (!cell.is_string()) throw expected("a rational string", cell);
    g[i] = parse_rational(cell.get<std::string>());
  }
  return g;
}

GambleSet set_from_json(const Json& j, Eigen::Index dim) {
  if (!j.is_array()) throw expected("a gamble set (array of gambles)", j);
  std::vector<Gamble> members;
  members.reserve(j.size());
  for (const auto& cell : j) members.push_back(gamble_from_json(cell, dim));
  return GambleSet(dim, std::move(members));
}

Assessment assessment_from_json(const Json& j) {
  if (!j.is_object()) throw expected("an assessment object", j);
  if (!j.contains("space") || !j["space"].is_array()) {
    throw ParseError("missing or malformed \"space\" array");
  }
  std::vector<std::string> labels;
  for (const auto& cell : j["space"]) {
    if (!cell.is_string()) throw expected("a state label", cell);
    labels.push_back(cell.get<std::string>());
  }
  PossibilitySpace space(std::move(labels));
  const Eigen::Index dim = space.size();
  std::vector<GambleSet> sets;
  if (j.contains("assessment")) {
    if (!j["assessment"].is_array()) throw expected("an array of gamble sets", j["assessment"]);
    for (const auto& cell : j["assessment"]) sets.push_back(set_from_json(cell, dim));
  }
  return Assessment(std::move(space), std::move(sets));
}

PosiCertificate certificate_from_json(const Json& j, Eigen::Index dim) {
  if (!j.is_object() || !j.contains("bases") || !j.contains("coeffs")) {
    throw ParseError("malformed certificate object");
  }
  PosiCertificate cert;
  for (const auto& cell : j["bases"]) {
    if (!cell.is_object() || !cell.contains("tag") || !cell.contains("set")) {
      throw ParseError("malformed certificate base");
    }
    const std::string tag = cell["tag"].get<std::string>();
    BaseTag t;
    if (tag == "assessment") t = BaseTag::Assessment;
    else if (tag == "positive-singleton") t = BaseTag::PositiveSingleton;
    else throw ParseError("unknown base tag: '" + tag + "'");
    cert.bases.push_back(CertificateBase{t, set_from_json(cell["set"], dim)});
  }
  for (const auto& cell : j["coeffs"]) {
    if (!cell.is_object() || !cell.contains("tuple") || !cell.contains("lambda")) {
      throw ParseError("malformed certificate coefficient entry");
    }
    CoeffEntry entry;
    for (const auto& t : cell["tuple"]) {
      if (!t.is_number_unsigned()) throw expected("a member index", t);
      entry.tuple.push_back(t.get<std::size_t>());
    }
    const auto& lam = cell["lambda"];
    entry.lambda.resize(static_cast<Eigen::Index>(lam.size()));
    for (std::size_t i = 0; i < lam.size(); ++i) {
      if (!lam[i].is_string()) throw expected("a rational string", lam[i]);
      entry.lambda[static_cast<Eigen::Index>(i)] = parse_rational(lam[i].get<std::string>());
    }
    cert.coeffs.push_back(std::move(entry));
  }
  return cert;
}

Selection selection_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("picks") || !j["picks"].is_array()) {
    throw ParseError("malformed selection object");
  }
  Selection s;
  for (const auto& cell : j["picks"]) {
    if (!cell.is_number_unsigned()) throw expected("a pick index", cell);
    s.picks.push_back(cell.get<std::size_t>());
  }
  return s;
}

std::string serialize_assessment(const Assessment& a) { return to_json(a).dump(); }

Assessment parse_assessment(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return assessment_from_json(j);
}

QueryFile parse_query_file(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  QueryFile qf{assessment_from_json(j), {}};
  const Eigen::Index dim = qf.assessment.dim();
  if (!j.contains("queries")) return qf;
  if (!j["queries"].is_array()) throw expected("a \"queries\" array", j["queries"]);
  for (const auto& cell : j["queries"]) {
    if (!cell.is_object() || !cell.contains("op") || !cell["op"].is_string()) {
      throw ParseError("malformed query: " + cell.dump());
    }
    const std::string op = cell["op"].get<std::string>();
    Query q;
    const auto need_set = [&]() {
      if (!cell.contains("set")) throw ParseError("query '" + op + "' needs a \"set\"");
      q.set = set_from_json(cell["set"], dim);
    };
    const auto need_gamble = [&]() {
      if (!cell.contains("gamble")) throw ParseError("query '" + op + "' needs a \"gamble\"");
      q.gamble = gamble_from_json(cell["gamble"], dim);
    };
    if (op == "consistent") {
      q.op = Query::Op::Consistent;
    } else if (op == "member") {
      q.op = Query::Op::Member;
      need_set();
    } else if (op == "choose") {
      q.op = Query::Op::Choose;
      need_set();
    } else if (op == "reject") {
      q.op = Query::Op::Reject;
      need_set();
      need_gamble();
    } else if (op == "singleton") {
      q.op = Query::Op::Singleton;
      need_gamble();
    } else if (op == "binarity") {
      q.op = Query::Op::Binarity;
      need_set();
    } else {
      throw ParseError("unknown query op: '" + op + "'");
    }
    qf.queries.push_back(std::move(q));
  }
  return qf;
}

const char* query_op_name(Query::Op op) {
  switch (op) {
    case Query::Op::Consistent: return "consistent";
    case Query::Op::Member: return "member";
    case Query::Op::Choose: return "choose";
    case Query::Op::Reject: return "reject";
    case Query::Op::Singleton: return "singleton";
    case Query::Op::Binarity: return "binarity";
  }
  return "unknown";
}

}  // namespace io
}  // namespace natex
