#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "natex/choice.hpp"
#include "natex/gamble.hpp"

namespace natex {
namespace io {

// ordered_json keeps field order stable, so canonical serialization is
// byte-exact and diffable.
using Json = nlohmann::ordered_json;

Json to_json(const Gamble& g);
Json to_json(const GambleSet& s);
Json to_json(const Assessment& a);
Json to_json(const PosiCertificate& cert);
Json to_json(const Selection& s, const Assessment& a);
Json to_json(const Verdict& v, const Assessment& a);
Json to_json(const ChoicePartition& part);
Json to_json(const BinarityReport& report, const Assessment& a);

Gamble gamble_from_json(const Json& j, Eigen::Index dim);
GambleSet set_from_json(const Json& j, Eigen::Index dim);
Assessment assessment_from_json(const Json& j);
PosiCertificate certificate_from_json(const Json& j, Eigen::Index dim);
Selection selection_from_json(const Json& j);

/// Canonical byte-exact serialization of an assessment file.
std::string serialize_assessment(const Assessment& a);
Assessment parse_assessment(const std::string& text);

struct Query {
  enum class Op { Consistent, Member, Choose, Reject, Singleton, Binarity };
  Op op = Op::Consistent;
  std::optional<GambleSet> set;  // Member/Choose/Reject/Binarity
  std::optional<Gamble> gamble;  // Reject/Singleton
};

struct QueryFile {
  Assessment assessment;
  std::vector<Query> queries;
};

/// Assessment file with an optional "queries" array.
QueryFile parse_query_file(const std::string& text);

const char* query_op_name(Query::Op op);

}  // namespace io
}  // namespace natex
